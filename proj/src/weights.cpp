#include "ssice/weights.hpp"

#include "ssice/errors.hpp"
#include "ssice/param_point.hpp"

#include <algorithm>
#include <utility>

namespace ssice {

namespace {

constexpr std::pair<Model, std::string_view> kModelNames[] = {
    {Model::UncoloredReflecting, "reflecting"},
    {Model::UncoloredAbsorbing, "absorbing"},
    {Model::ColoredSigned, "signed"},
    {Model::ColoredPositive, "positive"},
};

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::Gamma, "gamma"},
    {Family::Delta, "delta"},
    {Family::CapReflecting, "cap-reflecting"},
    {Family::CapAbsorbing, "cap-absorbing"},
    {Family::CapColoredSigned, "cap-signed"},
    {Family::CapColoredPositive, "cap-positive"},
    {Family::RGammaGamma, "r-gg"},
    {Family::RDeltaGamma, "r-dg"},
    {Family::RDeltaDelta, "r-dd"},
    {Family::RGammaDelta, "r-gd"},
    {Family::RLemma, "r-lemma"},
    {Family::RFish, "r-fish"},
    {Family::LemmaS, "lemma-s"},
    {Family::LemmaT, "lemma-t"},
};

// Two-label pattern values: b1 = (a,b,a,b), b2 = (b,a,b,a) with a < b, and the
// two crossing columns. c-type crossings are (b,a,a,b) / (a,b,b,a); d-type are
// (b,b,a,a) / (a,a,b,b).
struct Table {
  Rational b1, b2, x5, x6;
  bool d_type;
};

Rational nonzero(Rational den, Family f) {
  if (is_zero(den)) throw SingularityError("vanishing denominator in " + std::string(to_string(f)));
  return den;
}

Table lemma_r(const Rational& t1, const Rational& t2, const Rational& q) {
  Rational den = nonzero(1 - (q + 1) * t1 + q * t1 * t2, Family::RLemma);
  return {(t2 - t1) / den, q * (t2 - t1) / den, -(1 - t2) * (1 - q * t1) / den, -(1 - t1) * (1 - q * t2) / den,
          false};
}

Table table(Family f, const WeightParams& p) {
  const auto& q = p.q;
  const auto& v = p.values;
  switch (f) {
    case Family::Gamma: {
      const auto& z = v[0];
      return {z, q * z, 1 - q * z, 1 - z, false};
    }
    case Family::Delta: {
      Rational zp = zprime(v[0], q);
      return {zp, zp / q, 1 - zp, 1 - zp / q, true};
    }
    case Family::RGammaGamma: {
      const auto &zi = v[0], &zj = v[1];
      Rational den = nonzero(1 - (q + 1) * zj + q * zi * zj, f);
      return {(zi - zj) / den, q * (zi - zj) / den, (1 - q * zi) * (1 - zj) / den, (1 - zi) * (1 - q * zj) / den,
              false};
    }
    case Family::RDeltaGamma: {
      Rational zip = zprime(v[0], q);
      const auto& zj = v[1];
      Rational den = nonzero(1 - zip * zj, f);
      return {(zip + q * zj - (q + 1) * zip * zj) / den, (zip / q + zj - (1 + 1 / q) * zip * zj) / den,
              (1 - zip) * (1 - q * zj) / den, (1 - zip / q) * (1 - zj) / den, true};
    }
    case Family::RDeltaDelta: {
      Rational zip = zprime(v[0], q), zjp = zprime(v[1], q);
      Rational den = nonzero(q - (q + 1) * zip + zip * zjp, f);
      return {(zjp - zip) / den, q * (zjp - zip) / den, (1 - zip) * (q - zjp) / den, (1 - zjp) * (q - zip) / den,
              false};
    }
    case Family::RGammaDelta: {
      const auto& zi = v[0];
      Rational zjp = zprime(v[1], q);
      Rational den = nonzero(zi * zjp - 1, f);
      Rational num = q * zi + zjp - (1 + q);
      return {num / den, num / (q * den), (1 - q * zi) * (1 - zjp) / den, (1 - zi) * (q - zjp) / (q * den), true};
    }
    case Family::RLemma:
      return lemma_r(v[0], v[1], q);
    case Family::RFish: {
      const auto& zn = v[0];
      return lemma_r(1 / (q * zn), zprime(zn, q) / q, q);
    }
    case Family::LemmaS: {
      const auto& t1 = v[0];
      return {q * t1, t1, q * t1 - 1, t1 - 1, true};
    }
    case Family::LemmaT: {
      const auto& t2 = v[0];
      return {q * t2, t2, 1 - q * t2, 1 - t2, true};
    }
    default:
      throw UsageError("no relative-order table for " + std::string(to_string(f)));
  }
}

Rational cap_value(Family f, Label top, Label bottom) {
  bool listed = false;
  switch (f) {
    case Family::CapReflecting:
      listed = top == bottom && (top == kPlus || top == kMinus);
      break;
    case Family::CapAbsorbing:
      listed = (top == kPlus && bottom == kMinus) || (top == kMinus && bottom == kPlus);
      break;
    case Family::CapColoredSigned:
      listed = bottom == -top;
      break;
    case Family::CapColoredPositive:
      listed = top == bottom && top >= 0;
      break;
    default:
      throw UsageError("not a cap family");
  }
  return listed ? 1 : 0;
}

}  // namespace

std::string_view to_string(Model m) {
  for (auto [k, name] : kModelNames)
    if (k == m) return name;
  return "?";
}

std::string_view to_string(Family f) {
  for (auto [k, name] : kFamilyNames)
    if (k == f) return name;
  return "?";
}

std::optional<Model> parse_model(std::string_view s) {
  for (auto [k, name] : kModelNames)
    if (name == s) return k;
  return std::nullopt;
}

std::optional<Family> parse_family(std::string_view s) {
  for (auto [k, name] : kFamilyNames)
    if (name == s) return k;
  return std::nullopt;
}

bool is_colored(Model m) { return m == Model::ColoredSigned || m == Model::ColoredPositive; }

bool is_cap(Family f) {
  return f == Family::CapReflecting || f == Family::CapAbsorbing || f == Family::CapColoredSigned ||
         f == Family::CapColoredPositive;
}

std::size_t arity(Family f) { return is_cap(f) ? 2 : 4; }

std::size_t param_count(Family f) {
  switch (f) {
    case Family::Gamma:
    case Family::Delta:
    case Family::RFish:
    case Family::LemmaS:
    case Family::LemmaT:
      return 1;
    case Family::RGammaGamma:
    case Family::RDeltaGamma:
    case Family::RDeltaDelta:
    case Family::RGammaDelta:
    case Family::RLemma:
      return 2;
    default:
      return 0;
  }
}

Family cap_family(Model m) {
  switch (m) {
    case Model::UncoloredReflecting:
      return Family::CapReflecting;
    case Model::UncoloredAbsorbing:
      return Family::CapAbsorbing;
    case Model::ColoredSigned:
      return Family::CapColoredSigned;
    case Model::ColoredPositive:
      return Family::CapColoredPositive;
  }
  throw UsageError("unknown model");
}

std::vector<Label> model_alphabet(Model m, int n) {
  std::vector<Label> out;
  switch (m) {
    case Model::UncoloredReflecting:
    case Model::UncoloredAbsorbing:
      return {kPlus, kMinus};
    case Model::ColoredSigned:
      for (int a = -n; a <= n; ++a) out.push_back(a);
      return out;
    case Model::ColoredPositive:
      for (int a = 0; a <= n; ++a) out.push_back(a);
      return out;
  }
  return out;
}

WeightSystem WeightSystem::corrupted(Family family, Rational delta) {
  WeightSystem w;
  w.corruption_ = Corruption{family, std::move(delta)};
  return w;
}

Rational WeightSystem::weight(VertexKind kind, const Edges& e, const WeightParams& p) const {
  if (p.values.size() != param_count(kind.family))
    throw UsageError(std::string(to_string(kind.family)) + " expects " + std::to_string(param_count(kind.family)) +
                     " parameters, got " + std::to_string(p.values.size()));
  if (kind.family == Family::RGammaDelta && is_colored(kind.model))
    throw UsageError("the colored models have no Gamma-Delta R-matrix");
  if (is_cap(kind.family)) return cap_value(kind.family, e[0], e[1]);

  const auto [lo_it, hi_it] = std::minmax_element(e.begin(), e.end());
  const Label lo = *lo_it, hi = *hi_it;
  if (lo == hi) return 1;
  for (Label x : e)
    if (x != lo && x != hi) return 0;
  unsigned mask = 0;
  for (Label x : e) mask = (mask << 1) | (x == hi ? 1u : 0u);

  const Table t = table(kind.family, p);
  Rational b1 = t.b1;
  if (corruption_ && corruption_->family == kind.family) b1 += corruption_->delta;
  switch (mask) {
    case 0b0101:
      return b1;
    case 0b1010:
      return t.b2;
    case 0b1001:
      return t.d_type ? Rational(0) : t.x5;
    case 0b0110:
      return t.d_type ? Rational(0) : t.x6;
    case 0b1100:
      return t.d_type ? t.x5 : Rational(0);
    case 0b0011:
      return t.d_type ? t.x6 : Rational(0);
    default:
      return 0;
  }
}

Rational vertex_weight(const WeightSystem& system, VertexKind kind, const Edges& e, const WeightParams& p) {
  return system.weight(kind, e, p);
}

Rational vertex_weight(VertexKind kind, const Edges& e, const WeightParams& p) {
  return WeightSystem::standard().weight(kind, e, p);
}

Rational cap_weight(Model model, Label top, Label bottom) { return cap_value(cap_family(model), top, bottom); }

Rational stochastic_row_check(const WeightSystem& system, VertexKind kind, std::array<Label, 2> in,
                              const WeightParams& p, const std::vector<Label>& alphabet) {
  Rational sum = 0;
  if (is_cap(kind.family)) {
    for (Label b : alphabet) sum += system.weight(kind, {in[0], b, 0, 0}, p);
    return sum;
  }
  for (Label o0 : alphabet)
    for (Label o1 : alphabet) {
      Edges e;
      switch (kind.family) {
        case Family::Gamma:
        case Family::RGammaGamma:
          e = {in[0], in[1], o0, o1};
          break;
        case Family::Delta:
          e = {o0, in[1], in[0], o1};
          break;
        case Family::RDeltaDelta:
          e = {o0, o1, in[0], in[1]};
          break;
        case Family::RDeltaGamma:
          e = {o0, in[1], in[0], o1};
          break;
        default:
          throw UsageError(std::string(to_string(kind.family)) + " has no stochastic orientation");
      }
      sum += system.weight(kind, e, p);
    }
  return sum;
}

Rational r_denominator(Family f, const WeightParams& p) {
  const auto& q = p.q;
  const auto& v = p.values;
  switch (f) {
    case Family::RGammaGamma:
      return 1 - (q + 1) * v[1] + q * v[0] * v[1];
    case Family::RDeltaGamma:
      return 1 - zprime(v[0], q) * v[1];
    case Family::RDeltaDelta: {
      Rational zip = zprime(v[0], q);
      return q - (q + 1) * zip + zip * zprime(v[1], q);
    }
    case Family::RGammaDelta:
      return v[0] * zprime(v[1], q) - 1;
    case Family::RLemma:
      return 1 - (q + 1) * v[0] + q * v[0] * v[1];
    case Family::RFish: {
      Rational t1 = 1 / (q * v[0]), t2 = zprime(v[0], q) / q;
      return 1 - (q + 1) * t1 + q * t1 * t2;
    }
    default:
      return 1;
  }
}

}  // namespace ssice
