#include "ssice/lattice.hpp"

#include "ssice/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace ssice {

bool Partition::valid() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

Partition parse_partition(std::string_view text) {
  Partition p;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    char* end = nullptr;
    long v = std::strtol(cur.c_str(), &end, 10);
    if (*end != '\0') throw UsageError("bad partition entry '" + cur + "'");
    p.parts.push_back(static_cast<int>(v));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '(' || c == ')')
      flush();
    else
      cur += c;
  }
  flush();
  if (!p.valid()) throw SpecError("partition must be weakly decreasing and nonnegative");
  return p;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) out += (i ? "," : "") + std::to_string(p.parts[i]);
  return out;
}

std::vector<Partition> partitions_in_box(int len, int max_part) {
  std::vector<Partition> out;
  if (len == 0) return {Partition{}};
  if (max_part < 0) return out;
  Partition cur;
  std::function<void(int)> rec = [&](int bound) {
    if (cur.length() == len) {
      out.push_back(cur);
      return;
    }
    for (int v = bound; v >= 0; --v) {
      cur.parts.push_back(v);
      rec(v);
      cur.parts.pop_back();
    }
  };
  rec(max_part);
  return out;
}

LatticeSpec::LatticeSpec(Model model, int L, Partition lambda, ParamPoint point)
    : LatticeSpec(model, L, std::move(lambda), SignedPermutation::identity(static_cast<int>(point.n())),
                  SignedPermutation::identity(static_cast<int>(point.n())), point) {}

LatticeSpec::LatticeSpec(Model model, int L, Partition lambda, SignedPermutation sigma, SignedPermutation tau,
                         ParamPoint point)
    : model(model),
      n(static_cast<int>(point.n())),
      L(L),
      lambda(std::move(lambda)),
      sigma(std::move(sigma)),
      tau(std::move(tau)),
      point(std::move(point)) {
  validate();
}

void LatticeSpec::validate() const {
  if (n < 1) throw SpecError("n must be positive");
  if (static_cast<int>(point.n()) != n) throw SpecError("point has the wrong number of spectral parameters");
  if (!lambda.valid()) throw SpecError("partition must be weakly decreasing and nonnegative");
  const int np = lambda.length();
  if (model != Model::UncoloredAbsorbing && np != n)
    throw SpecError("this model needs exactly n = " + std::to_string(n) + " parts in lambda, got " +
                    std::to_string(np));
  if (L < 1) throw SpecError("L must be positive");
  if (L < lambda.largest() + np)
    throw SpecError("L = " + std::to_string(L) + " is smaller than lambda_1 + n' = " +
                    std::to_string(lambda.largest() + np));
  if (is_colored(model)) {
    if (sigma.n() != n || tau.n() != n) throw SpecError("sigma and tau must have n entries");
    if (model == Model::ColoredPositive && (!sigma.all_positive() || !tau.all_positive()))
      throw SpecError("the positive model uses unsigned permutations");
  }
}

LatticeSpec LatticeSpec::with_point(ParamPoint p) const {
  return LatticeSpec(model, L, lambda, sigma, tau, std::move(p));
}

LatticeSpec LatticeSpec::with_sigma(SignedPermutation s) const {
  return LatticeSpec(model, L, lambda, std::move(s), tau, point);
}

BoundaryLabels boundary_assignment(const LatticeSpec& spec) {
  spec.validate();
  BoundaryLabels b;
  const bool colored = is_colored(spec.model);
  for (int i = 1; i <= spec.n; ++i) b.left_gamma.push_back(colored ? spec.sigma(i) : kMinus);
  b.bottom.assign(static_cast<std::size_t>(spec.L), kPlus);
  const int np = spec.lambda.length();
  for (int i = 1; i <= np; ++i) {
    const int col = spec.lambda.parts[i - 1] + np + 1 - i;
    b.bottom[static_cast<std::size_t>(col - 1)] = colored ? spec.tau(i) : kMinus;
  }
  return b;
}

Configuration::Configuration(int n, int L)
    : n_(n),
      L_(L),
      h_(static_cast<std::size_t>(2 * n * (L + 1)), kPlus),
      v_(static_cast<std::size_t>((2 * n + 1) * L), kPlus) {}

RowWeights::RowWeights(const LatticeSpec& spec, const WeightSystem& system)
    : model_(spec.model), alphabet_(model_alphabet(spec.model, spec.n)), system_(system) {
  const std::size_t a = alphabet_.size();
  for (int r = 1; r <= 2 * spec.n; ++r) params_.push_back({{spec.point.z(static_cast<std::size_t>((r - 1) / 2))},
                                                           spec.point.q()});
  vertex_cache_.assign(params_.size(), std::vector<std::optional<Rational>>(a * a * a * a));
  cap_cache_.resize(a * a);
}

std::size_t RowWeights::index(Label l) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), l);
  if (it == alphabet_.end() || *it != l) throw UsageError("label " + std::to_string(l) + " outside the alphabet");
  return static_cast<std::size_t>(it - alphabet_.begin());
}

VertexKind RowWeights::kind(int row) const { return {row % 2 == 0 ? Family::Gamma : Family::Delta, model_}; }

const Rational& RowWeights::vertex(int row, const Edges& e) {
  std::size_t key = 0;
  for (Label l : e) key = key * alphabet_.size() + index(l);
  auto& slot = vertex_cache_[static_cast<std::size_t>(row - 1)][key];
  if (!slot) slot = system_.weight(kind(row), e, params_[static_cast<std::size_t>(row - 1)]);
  return *slot;
}

const Rational& RowWeights::cap(Label top, Label bottom) {
  auto& slot = cap_cache_[index(top) * alphabet_.size() + index(bottom)];
  if (!slot) slot = system_.weight({cap_family(model_), model_}, {top, bottom, 0, 0}, {{}, 0});
  return *slot;
}

Rational configuration_weight(const LatticeSpec& spec, const Configuration& s, const WeightSystem& system) {
  RowWeights w(spec, system);
  Rational total = 1;
  for (int r = 1; r <= 2 * spec.n; ++r)
    for (int c = 1; c <= spec.L; ++c) total *= w.vertex(r, {s.h(r, c), s.v(r, c), s.h(r, c - 1), s.v(r - 1, c)});
  for (int i = 1; i <= spec.n; ++i) total *= w.cap(s.h(2 * i, 0), s.h(2 * i - 1, 0));
  return total;
}

namespace {

// Key under which labels are conserved across a row pair: the caps preserve
// the count (reflecting), |color| (signed) or the color itself (positive).
std::optional<std::vector<Label>> conserved_key(Model m, const std::vector<Label>& labels) {
  if (m == Model::UncoloredAbsorbing) return std::nullopt;
  std::vector<Label> out;
  for (Label l : labels)
    if (l != kPlus) out.push_back(m == Model::ColoredSigned ? std::abs(l) : l);
  std::sort(out.begin(), out.end());
  return out;
}

class FlowEnumerator {
 public:
  FlowEnumerator(const LatticeSpec& spec, const WeightSystem& system, const StateVisitor& visit)
      : spec_(spec), w_(spec, system), b_(boundary_assignment(spec)), s_(spec.n, spec.L), visit_(visit) {
    for (int i = 1; i <= spec.n; ++i) s_.h(2 * i, spec.L) = b_.left_gamma[static_cast<std::size_t>(i - 1)];
    for (int c = 1; c <= spec.L; ++c) s_.v(0, c) = b_.bottom[static_cast<std::size_t>(c - 1)];
    target_ = conserved_key(spec.model, b_.bottom);
  }

  void run() { gamma(2 * spec_.n, spec_.L, Rational(1)); }

 private:
  // Gamma row r, vertex in column c: inputs left, top; outputs right, bottom.
  void gamma(int r, int c, const Rational& acc) {
    if (c == 0) return cap(r / 2, acc);
    const Label left = s_.h(r, c), top = s_.v(r, c);
    for (auto [right, bottom] : candidates(left, top)) {
      const Rational& wt = w_.vertex(r, {left, top, right, bottom});
      if (is_zero(wt)) continue;
      s_.h(r, c - 1) = right;
      s_.v(r - 1, c) = bottom;
      gamma(r, c - 1, acc * wt);
    }
  }

  void cap(int i, const Rational& acc) {
    const Label top = s_.h(2 * i, 0);
    for (Label bottom : w_.alphabet()) {
      const Rational& wt = w_.cap(top, bottom);
      if (is_zero(wt)) continue;
      s_.h(2 * i - 1, 0) = bottom;
      delta(2 * i - 1, 1, acc * wt);
    }
  }

  // Delta row r, vertex in column c: inputs right, top; outputs left, bottom.
  void delta(int r, int c, const Rational& acc) {
    if (c > spec_.L) return row_pair_done(r, acc);
    const Label right = s_.h(r, c - 1), top = s_.v(r, c);
    for (auto [left, bottom] : candidates(right, top)) {
      if (c == spec_.L && left != kPlus) continue;
      if (r == 1 && bottom != s_.v(0, c)) continue;
      const Rational& wt = w_.vertex(r, {left, top, right, bottom});
      if (is_zero(wt)) continue;
      s_.h(r, c) = left;
      s_.v(r - 1, c) = bottom;
      delta(r, c + 1, acc * wt);
    }
  }

  void row_pair_done(int r, const Rational& acc) {
    if (r == 1) return visit_(s_, acc);
    if (target_) {
      std::vector<Label> pending;
      for (int c = 1; c <= spec_.L; ++c) pending.push_back(s_.v(r - 1, c));
      for (int i = 1; i < (r + 1) / 2; ++i) pending.push_back(b_.left_gamma[static_cast<std::size_t>(i - 1)]);
      if (conserved_key(spec_.model, pending) != target_) return;
    }
    gamma(r - 1, spec_.L, acc);
  }

  static std::vector<std::pair<Label, Label>> candidates(Label a, Label b) {
    if (a == b) return {{a, b}};
    return {{a, b}, {b, a}};
  }

  const LatticeSpec& spec_;
  RowWeights w_;
  BoundaryLabels b_;
  Configuration s_;
  const StateVisitor& visit_;
  std::optional<std::vector<Label>> target_;
};

}  // namespace

void enumerate_states(const LatticeSpec& spec, const StateVisitor& visit, const WeightSystem& system) {
  FlowEnumerator(spec, system, visit).run();
}

Rational partition_function(const LatticeSpec& spec, const WeightSystem& system) {
  Rational total = 0;
  enumerate_states(spec, [&](const Configuration&, const Rational& w) { total += w; }, system);
  return total;
}

Rational partition_function_transfer(const LatticeSpec& spec, const WeightSystem& system) {
  RowWeights w(spec, system);
  const auto& alpha = w.alphabet();
  const std::size_t a = alpha.size();
  const int rows = 2 * spec.n;
  std::size_t states = 1;
  for (int r = 0; r < rows; ++r) {
    states *= a;
    if (states > kTransferStateLimit) return partition_function(spec, system);
  }
  const BoundaryLabels b = boundary_assignment(spec);

  // State index: digit r-1 (base a, least significant first) is the label of row r.
  auto encode = [&](const std::vector<Label>& h) {
    std::size_t idx = 0;
    for (int r = rows; r >= 1; --r) idx = idx * a + w.index(h[static_cast<std::size_t>(r - 1)]);
    return idx;
  };
  auto decode = [&](std::size_t idx) {
    std::vector<Label> h(static_cast<std::size_t>(rows));
    for (int r = 1; r <= rows; ++r) {
      h[static_cast<std::size_t>(r - 1)] = alpha[idx % a];
      idx /= a;
    }
    return h;
  };

  std::vector<Rational> cur(states), next(states);
  {
    std::vector<Label> h(static_cast<std::size_t>(rows), kPlus);
    for (int i = 1; i <= spec.n; ++i) h[static_cast<std::size_t>(2 * i - 1)] = b.left_gamma[static_cast<std::size_t>(i - 1)];
    cur[encode(h)] = 1;
  }

  for (int c = spec.L; c >= 1; --c) {
    for (auto& x : next) x = 0;
    const Label bottom_target = b.bottom[static_cast<std::size_t>(c - 1)];
    for (std::size_t idx = 0; idx < states; ++idx) {
      if (is_zero(cur[idx])) continue;
      const std::vector<Label> h = decode(idx);
      std::vector<Label> out(h.size());
      std::function<void(int, Label, const Rational&)> down = [&](int r, Label top, const Rational& acc) {
        if (r == 0) {
          if (top == bottom_target) next[encode(out)] += acc;
          return;
        }
        const Label left = h[static_cast<std::size_t>(r - 1)];
        for (Label right : alpha)
          for (Label bottom : alpha) {
            const Rational& wt = w.vertex(r, {left, top, right, bottom});
            if (is_zero(wt)) continue;
            out[static_cast<std::size_t>(r - 1)] = right;
            down(r - 1, bottom, acc * wt);
          }
      };
      down(rows, kPlus, cur[idx]);
    }
    std::swap(cur, next);
  }

  Rational total = 0;
  for (std::size_t idx = 0; idx < states; ++idx) {
    if (is_zero(cur[idx])) continue;
    const std::vector<Label> h = decode(idx);
    Rational term = cur[idx];
    for (int i = 1; i <= spec.n && !is_zero(term); ++i)
      term *= w.cap(h[static_cast<std::size_t>(2 * i - 1)], h[static_cast<std::size_t>(2 * i - 2)]);
    total += term;
  }
  return total;
}

std::vector<LatticeSpec> all_outcome_specs(const LatticeSpec& base) {
  std::vector<LatticeSpec> out;
  std::vector<int> lengths;
  if (base.model == Model::UncoloredAbsorbing)
    for (int np = 0; np <= base.L; ++np) lengths.push_back(np);
  else
    lengths.push_back(base.n);
  std::vector<SignedPermutation> taus;
  if (base.model == Model::ColoredSigned)
    taus = all_signed_permutations(base.n);
  else if (base.model == Model::ColoredPositive)
    taus = all_permutations(base.n);
  else
    taus = {base.tau};
  for (int np : lengths)
    for (const auto& lam : partitions_in_box(np, base.L - np))
      for (const auto& t : taus) out.emplace_back(base.model, base.L, lam, base.sigma, t, base.point);
  return out;
}

}  // namespace ssice
