#include "ssice/relations.hpp"

#include "ssice/counter_rng.hpp"
#include "ssice/errors.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace ssice {

RelationReport& RelationReport::merge(const RelationReport& other) {
  if (id.empty()) id = other.id;
  points_tested += other.points_tested;
  boundaries_tested += other.boundaries_tested;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  return *this;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw SamplingError("singular point: " + what);
}

void require_pair(const ParamPoint& p) {
  if (p.n() < 2) throw UsageError("this relation needs two spectral parameters");
}

void require_r(Family f, const ParamPoint& p, std::size_t i, std::size_t j) {
  require(!is_zero(r_denominator(f, {{p.z(i), p.z(j)}, p.q()})), std::string(to_string(f)) + " denominator vanishes");
}

std::vector<Label> boundary_at(std::size_t code, std::size_t k, const std::vector<Label>& alphabet) {
  std::vector<Label> b(k);
  for (std::size_t i = k; i-- > 0;) {
    b[i] = alphabet[code % alphabet.size()];
    code /= alphabet.size();
  }
  return b;
}

Family r_family(Side x, Side y) {
  if (x == Side::Gamma && y == Side::Gamma) return Family::RGammaGamma;
  if (x == Side::Delta && y == Side::Gamma) return Family::RDeltaGamma;
  if (x == Side::Delta && y == Side::Delta) return Family::RDeltaDelta;
  return Family::RGammaDelta;
}

Family side_family(Side s) { return s == Side::Gamma ? Family::Gamma : Family::Delta; }

}  // namespace

RelationReport compare_diagrams(std::string id, const WiringDiagram& left, const WiringDiagram& right,
                                const Rational& factor, const ParamPoint& point, const RelationOptions& options) {
  if (left.boundary_size() != right.boundary_size() || left.alphabet() != right.alphabet())
    throw UsageError("diagrams of " + id + " have different boundaries");
  const auto& alphabet = left.alphabet();
  const std::size_t k = left.boundary_size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= alphabet.size();

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(total)));
  std::vector<std::vector<RelationFailure>> found(jobs);
  auto work = [&](unsigned job) {
    DiagramEvaluator l(left, point, options.system), r(right, point, options.system);
    for (std::size_t code = job; code < total; code += jobs) {
      auto b = boundary_at(code, k, alphabet);
      Rational lhs = l(b);
      Rational rhs = factor * r(b);
      if (lhs != rhs) found[job].push_back({point, std::move(b), lhs, rhs, {}});
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
  }

  RelationReport report{std::move(id), 1, total, {}};
  for (auto& f : found) report.failures.insert(report.failures.end(), f.begin(), f.end());
  std::sort(report.failures.begin(), report.failures.end(),
            [](const RelationFailure& a, const RelationFailure& b) { return a.boundary < b.boundary; });
  return report;
}

std::vector<Label> ybe_alphabet(Model model, bool paranoid) {
  if (model == Model::ColoredSigned) return paranoid ? std::vector<Label>{-2, -1, 0, 1, 2} : std::vector<Label>{-1, 0, 1, 2};
  if (model == Model::ColoredPositive) return paranoid ? std::vector<Label>{0, 1, 2, 3, 4} : std::vector<Label>{0, 1, 2, 3};
  return {kPlus, kMinus};
}

std::vector<Label> reflection_alphabet(Model model, bool paranoid) {
  if (model == Model::ColoredSigned)
    return paranoid ? std::vector<Label>{-3, -2, -1, 0, 1, 2, 3} : std::vector<Label>{-2, -1, 0, 1, 2};
  if (model == Model::ColoredPositive) return paranoid ? std::vector<Label>{0, 1, 2, 3} : std::vector<Label>{0, 1, 2};
  throw UsageError("the reflection equation is stated for the colored models");
}

RelationReport verify_ybe_uncolored(Side x, Side y, const ParamPoint& p, const RelationOptions& options) {
  require_pair(p);
  const Family rf = r_family(x, y);
  require_r(rf, p, 0, 1);
  const Model m = Model::UncoloredReflecting;
  const VertexKind s{side_family(x), m}, t{side_family(y), m}, r{rf, m};
  const std::string id = std::string("ybe-") + (x == Side::Gamma ? "g" : "d") + (y == Side::Gamma ? "g" : "d");
  return compare_diagrams(id, diagrams::ybe_left(s, t, r, {kPlus, kMinus}), diagrams::ybe_right(s, t, r, {kPlus, kMinus}),
                          1, p, options);
}

RelationReport verify_ybe_lemma(const Rational& t1, const Rational& t2, const Rational& q,
                                const RelationOptions& options) {
  require(!is_zero(1 - (q + 1) * t1 + q * t1 * t2), "1-(q+1)t1+q t1 t2 = 0");
  require(!is_zero(t1) && !is_zero(t2), "t1 t2 = 0");
  const Model m = Model::UncoloredReflecting;
  const VertexKind s{Family::LemmaS, m}, t{Family::LemmaT, m}, r{Family::RLemma, m};
  return compare_diagrams("ybe-lemma", diagrams::ybe_left(s, t, r, {kPlus, kMinus}),
                          diagrams::ybe_right(s, t, r, {kPlus, kMinus}), 1, ParamPoint({t1, t2}, q), options);
}

Rational caduceus_factor(const ParamPoint& p) {
  require_pair(p);
  const Rational &q = p.q(), &zi = p.z(0), &zj = p.z(1);
  const Rational d = zi + zj - (q + 1) * zi * zj;
  require(!is_zero(d), "z_i+z_j-(q+1)z_iz_j = 0");
  return (q * zi * zj - 1) * (1 - (q + 1) * (zi + zj) + (q * q + q + 1) * zi * zj) / (q * d * d);
}

RelationReport verify_caduceus(const ParamPoint& p, Model cap, const RelationOptions& options) {
  if (is_colored(cap)) throw UsageError("the caduceus relation uses the uncolored caps");
  require_pair(p);
  for (Family f : {Family::RGammaGamma, Family::RDeltaGamma, Family::RDeltaDelta, Family::RGammaDelta})
    require_r(f, p, 0, 1);
  return compare_diagrams(std::string("caduceus-") + std::string(to_string(cap)), diagrams::caduceus_braid(cap),
                          diagrams::caduceus_caps(cap), caduceus_factor(p), p, options);
}

Rational fish_factor(const ParamPoint& p, Model cap) {
  if (cap == Model::UncoloredAbsorbing) return 1;
  const Rational &q = p.q(), &zn = p.z(0);
  const Rational znp = p.zprime(0);
  require(!is_zero(znp), "z_n' = 0");
  const Rational den = 1 - (q + 1) / znp + q * zn / znp;
  require(!is_zero(den), "1-(q+1)/z_n'+q z_n/z_n' = 0");
  return -(1 - (q + 1) * zn + q * zn / znp) / den;
}

RelationReport verify_fish(const ParamPoint& p, Model cap, const RelationOptions& options) {
  if (is_colored(cap)) throw UsageError("the fish relation uses the uncolored caps");
  require(!is_zero(p.q() * p.z(0) + p.zprime(0) - (p.q() + 1)), "q z_n + z_n' - (q+1) = 0");
  // The relation pairs each model with the other model's cap table.
  const Family new_cap = cap == Model::UncoloredReflecting ? Family::CapAbsorbing : Family::CapReflecting;
  return compare_diagrams(std::string("fish-") + std::string(to_string(cap)), diagrams::fish_braid(new_cap),
                          diagrams::fish_cap(new_cap), fish_factor(p, cap), p, options);
}

RelationReport verify_ybe_colored(Model model, Side x, Side y, const ParamPoint& p, const RelationOptions& options) {
  if (!is_colored(model)) throw UsageError("verify_ybe_colored needs a colored model");
  if (x == Side::Gamma && y == Side::Delta) throw UsageError("the colored models have no Gamma-Delta R-matrix");
  require_pair(p);
  const Family rf = r_family(x, y);
  require_r(rf, p, 0, 1);
  const VertexKind s{side_family(x), model}, t{side_family(y), model}, r{rf, model};
  const auto alphabet = ybe_alphabet(model, options.paranoid);
  const std::string id = std::string("ybe-") + std::string(to_string(model)) + "-" + (x == Side::Gamma ? "g" : "d") +
                         (y == Side::Gamma ? "g" : "d");
  return compare_diagrams(id, diagrams::ybe_left(s, t, r, alphabet), diagrams::ybe_right(s, t, r, alphabet), 1, p,
                          options);
}

RelationReport verify_reflection(Model model, const ParamPoint& p, const RelationOptions& options) {
  if (!is_colored(model)) throw UsageError("verify_reflection needs a colored model");
  require_pair(p);
  require_r(Family::RGammaGamma, p, 0, 1);
  require_r(Family::RDeltaGamma, p, 0, 1);
  require_r(Family::RDeltaDelta, p, 1, 0);
  require_r(Family::RDeltaGamma, p, 1, 0);
  const auto alphabet = reflection_alphabet(model, options.paranoid);
  return compare_diagrams("reflection-" + std::string(to_string(model)), diagrams::reflection_left(model, alphabet),
                          diagrams::reflection_right(model, alphabet), 1, p, options);
}

namespace {

struct RelationEntry {
  std::size_t n;
  std::function<RelationReport(const ParamPoint&, const RelationOptions&)> run;
};

const std::map<std::string, RelationEntry>& registry() {
  static const std::map<std::string, RelationEntry> table = [] {
    std::map<std::string, RelationEntry> t;
    const std::pair<const char*, std::pair<Side, Side>> sides[] = {{"gg", {Side::Gamma, Side::Gamma}},
                                                                   {"dg", {Side::Delta, Side::Gamma}},
                                                                   {"dd", {Side::Delta, Side::Delta}},
                                                                   {"gd", {Side::Gamma, Side::Delta}}};
    for (auto [tag, xy] : sides) {
      auto [x, y] = xy;
      t[std::string("ybe-") + tag] = {2, [x, y](const ParamPoint& p, const RelationOptions& o) {
                                        return verify_ybe_uncolored(x, y, p, o);
                                      }};
      if (std::string(tag) == "gd") continue;
      for (Model m : {Model::ColoredSigned, Model::ColoredPositive})
        t["ybe-" + std::string(to_string(m)) + "-" + tag] = {
            2, [m, x, y](const ParamPoint& p, const RelationOptions& o) { return verify_ybe_colored(m, x, y, p, o); }};
    }
    t["ybe-lemma"] = {2, [](const ParamPoint& p, const RelationOptions& o) {
                        return verify_ybe_lemma(p.z(0), p.z(1), p.q(), o);
                      }};
    t["ybe-lemma-rm"] = {1, [](const ParamPoint& p, const RelationOptions& o) {
                           const Rational& q = p.q();
                           auto r = verify_ybe_lemma(1 / (q * p.z(0)), p.zprime(0) / q, q, o);
                           r.id = "ybe-lemma-rm";
                           return r;
                         }};
    for (Model m : {Model::UncoloredReflecting, Model::UncoloredAbsorbing}) {
      t["caduceus-" + std::string(to_string(m))] = {
          2, [m](const ParamPoint& p, const RelationOptions& o) { return verify_caduceus(p, m, o); }};
      t["fish-" + std::string(to_string(m))] = {
          1, [m](const ParamPoint& p, const RelationOptions& o) { return verify_fish(p, m, o); }};
    }
    for (Model m : {Model::ColoredSigned, Model::ColoredPositive})
      t["reflection-" + std::string(to_string(m))] = {
          2, [m](const ParamPoint& p, const RelationOptions& o) { return verify_reflection(m, p, o); }};
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::string> relation_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, entry] : registry()) ids.push_back(id);
  return ids;
}

bool is_relation_id(const std::string& id) { return registry().count(id) > 0; }

RelationReport run_relation(const std::string& id, std::size_t points, std::uint64_t seed,
                            const RelationOptions& options) {
  auto it = registry().find(id);
  if (it == registry().end()) throw UsageError("unknown relation '" + id + "'");
  RelationReport total;
  total.id = id;
  for (std::size_t k = 0; k < points; ++k) {
    const ParamPoint p = sample_point(it->second.n, splitmix64(seed + k), singularities::all());
    total.merge(it->second.run(p, options));
  }
  total.id = id;
  return total;
}

}  // namespace ssice
