#include "ssice/acceptance.hpp"

#include "ssice/counter_rng.hpp"
#include "ssice/dynamics.hpp"
#include "ssice/errors.hpp"
#include "ssice/functional.hpp"

#include <chrono>
#include <sstream>

namespace ssice::acceptance {

namespace {

constexpr std::size_t kKeptFailures = 5;

std::uint64_t derive(std::uint64_t seed, std::uint64_t tag, std::uint64_t k) {
  return splitmix64(splitmix64(seed ^ (tag * 0x9e3779b97f4a7c15ULL)) + k);
}

ParamPoint lattice_point(std::size_t n, std::uint64_t seed) {
  return sample_point(n, seed, singularities::all(), {kLatticeIntRange});
}

struct Tally {
  std::size_t checks = 0;
  std::size_t nonzero = 0;
  std::vector<RelationFailure> failures;
  std::size_t failure_count = 0;

  void record(const Comparison& c, const ParamPoint& p, const std::string& note) {
    ++checks;
    if (!is_zero(c.lhs)) ++nonzero;
    if (!c.holds()) {
      ++failure_count;
      if (failures.size() < kKeptFailures) failures.push_back({p, {}, c.lhs, c.rhs, note});
    }
  }
  bool pass() const { return failure_count == 0; }
};

std::string describe(const LatticeSpec& s) {
  std::ostringstream os;
  os << to_string(s.model) << " n=" << s.n << " L=" << s.L << " lambda=(" << to_string(s.lambda) << ")";
  if (is_colored(s.model)) os << " sigma=(" << to_string(s.sigma) << ") tau=(" << to_string(s.tau) << ")";
  return os.str();
}

RelationReport to_report(const std::string& id, std::size_t points, const Tally& t) {
  RelationReport r{id, points, t.checks, t.failures};
  return r;
}

// --- lattice-level sweeps -------------------------------------------------

std::vector<LatticeSpec> uncolored_instances(Model m, const ParamPoint& p1, const ParamPoint& p2, int max_L) {
  std::vector<LatticeSpec> out;
  for (int n = 1; n <= 2; ++n) {
    const ParamPoint& p = n == 1 ? p1 : p2;
    for (int L = 1; L <= max_L; ++L) {
      std::vector<int> lengths;
      if (m == Model::UncoloredAbsorbing)
        for (int np = 0; np <= L; ++np) lengths.push_back(np);
      else if (L >= n)
        lengths.push_back(n);
      for (int np : lengths)
        for (const auto& lam : partitions_in_box(np, L - np)) out.emplace_back(m, L, lam, p);
    }
  }
  return out;
}

std::vector<std::vector<int>> weyl_words(int n) {
  std::vector<std::vector<int>> words;
  for (int k = 1; k <= n; ++k) words.push_back({k});
  if (n >= 2) words.push_back({1, n});
  return words;
}

void weyl_check(const LatticeSpec& s, Tally& weyl, Tally& agree) {
  agree.record({partition_function(s), partition_function_transfer(s)}, s.point, "enumeration vs transfer " + describe(s));
  for (const auto& w : weyl_words(s.n)) {
    std::string word;
    for (int g : w) word += "s" + std::to_string(g);
    weyl.record(check_weyl_invariance(s, w), s.point, "Z/D under " + word + " " + describe(s));
  }
}

void reference_instance_checks(std::size_t points, std::uint64_t seed, Tally& weyl, Tally& agree) {
  for (Model m : {Model::UncoloredReflecting, Model::UncoloredAbsorbing})
    for (std::size_t k = 0; k < points; ++k) {
      const LatticeSpec s(m, 4, Partition{{2, 1}}, lattice_point(2, derive(seed, 7, k)));
      weyl_check(s, weyl, agree);
      weyl.record(check_permutation_invariance(s, 1), s.point, "permutation invariance " + describe(s));
      weyl.record(check_interchange(s), s.point, "interchange " + describe(s));
    }
}

void closed_form_sweep(std::size_t points, std::uint64_t seed, int max_L, Tally& general, Tally& special) {
  for (std::size_t k = 0; k < points; ++k) {
    const ParamPoint p1 = lattice_point(1, derive(seed, 8, k)), p2 = lattice_point(2, derive(seed, 9, k));
    for (int n = 1; n <= 2; ++n)
      for (int L = n; L <= max_L; ++L)
        for (const auto& lam : partitions_in_box(n, L - n))
          for (const auto& sigma : all_signed_permutations(n)) {
            std::vector<int> tau;
            for (int v : sigma.images()) tau.push_back(-v);
            const LatticeSpec s(Model::ColoredSigned, L, lam, sigma, SignedPermutation(tau), n == 1 ? p1 : p2);
            bool specialized = true;
            for (int i = 1; i <= n; ++i) specialized = specialized && sigma(i) == -i;
            (specialized ? special : general)
                .record({closed_form_opposite(s), partition_function(s)}, s.point, "closed form " + describe(s));
          }
  }
}

void recursion_sweep(std::size_t points, std::uint64_t seed, Tally& si, Tally& sn, Tally& positive) {
  const int L = 4;
  for (std::size_t k = 0; k < points; ++k) {
    const ParamPoint p = lattice_point(2, derive(seed, 10, k));
    for (const auto& lam : partitions_in_box(2, L - 2)) {
      for (const auto& sigma : all_signed_permutations(2))
        for (const auto& tau : all_signed_permutations(2)) {
          const LatticeSpec s(Model::ColoredSigned, L, lam, sigma, tau, p);
          if (sigma(2) > sigma(1)) si.record(check_recursion_si(s, 1), p, "s_1 recursion " + describe(s));
          if (sigma(2) > 0) sn.record(check_recursion_sn(s), p, "s_n recursion " + describe(s));
        }
      for (const auto& sigma : all_permutations(2))
        for (const auto& tau : all_permutations(2)) {
          if (!(sigma(2) > sigma(1))) continue;
          const LatticeSpec s(Model::ColoredPositive, L, lam, sigma, tau, p);
          positive.record(check_recursion_si(s, 1), p, "positive s_1 recursion " + describe(s));
        }
    }
  }
}

Rational monomial(const std::vector<Rational>& u, int a, int b) { return pow(u[0], a) * pow(u[1], b); }

void operator_checks(std::size_t points, std::uint64_t seed, Tally& ops, Tally& coeffs, Tally& ztilde) {
  for (std::size_t k = 0; k < points; ++k) {
    const ParamPoint p = lattice_point(2, derive(seed, 11, k));
    const UPoint u = to_u(p);
    const Rational& v = u.v;
    const UFunction one = [](const std::vector<Rational>&) { return Rational(1); };
    for (int i = 1; i <= 2; ++i) {
      ops.record({dl_apply(DLKind::L, i, u, one), v}, p, "L_" + std::to_string(i) + "(1) = v");
      ops.record({dl_apply(DLKind::Lhat, i, u, one), 1}, p, "Lhat_" + std::to_string(i) + "(1) = 1");
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b) {
          const UFunction f = [a, b](const std::vector<Rational>& x) { return monomial(x, a, b); };
          const UFunction lf = [&, i](const std::vector<Rational>& x) { return dl_apply(DLKind::L, i, {x, v}, f); };
          ops.record({dl_apply(DLKind::Lhat, i, u, lf), v * f(u.u)}, p,
                     "Lhat_" + std::to_string(i) + " L_" + std::to_string(i) + " on u1^" + std::to_string(a) + " u2^" +
                         std::to_string(b));
        }
    }
    const UFunction u1 = [](const std::vector<Rational>& x) { return x[0]; };
    ops.record({dl_apply(DLKind::L, 1, u, u1), u.u[1]}, p, "L_1(u_1) = u_2");

    const auto c = recursion_coefficients(p, 1);
    const Rational &q = p.q(), &a1 = u.u[0], &a2 = u.u[1];
    coeffs.record({c.A, (q - 1) * a1 / (a1 - a2)}, p, "A in u-variables");
    coeffs.record({c.B, (q * a1 - a2) / (a1 - a2)}, p, "B in u-variables");
    coeffs.record({c.C, (1 - q) / (q * (1 - a2 * a2))}, p, "C in u-variables");
    coeffs.record({c.D, (1 - q * a2 * a2) / (q * (1 - a2 * a2))}, p, "D in u-variables");

    for (const auto& sigma : all_signed_permutations(2))
      for (const auto& tau : all_signed_permutations(2)) {
        const LatticeSpec s(Model::ColoredSigned, 4, Partition{{2, 1}}, sigma, tau, p);
        if (sigma(2) > sigma(1)) ztilde.record(check_dl_recursion(s, 1), p, "Z-tilde s_1 " + describe(s));
        if (sigma(2) > 0) ztilde.record(check_dl_recursion(s, 2), p, "Z-tilde s_2 " + describe(s));
      }
  }
}

// --- criteria ---------------------------------------------------------------

CriterionResult from_reports(int id, const std::string& name, const std::vector<RelationReport>& reports) {
  CriterionResult r{id, name, true, "", 0, {}};
  std::size_t boundaries = 0, failures = 0;
  std::ostringstream os;
  for (const auto& rep : reports) {
    boundaries += rep.boundaries_tested;
    failures += rep.failures.size();
    r.pass = r.pass && rep.pass();
    for (const auto& f : rep.failures)
      if (r.failures.size() < kKeptFailures) r.failures.push_back(f);
    os << rep.id << " " << rep.points_tested << "pt/" << rep.boundaries_tested << "b; ";
  }
  r.detail = os.str() + "total " + std::to_string(boundaries) + " comparisons, " + std::to_string(failures) + " failures";
  return r;
}

std::vector<RelationReport> relations(const std::vector<std::string>& ids, std::size_t points, const Options& o) {
  std::vector<RelationReport> out;
  RelationOptions ro;
  ro.jobs = o.jobs;
  for (const auto& id : ids) out.push_back(run_relation(id, points, derive(o.seed, 1, out.size()), ro));
  return out;
}

CriterionResult c1(const Options& o) {
  return from_reports(1, "uncolored Yang-Baxter (4 kinds x 64 boundaries x 20 points)",
                      relations({"ybe-gg", "ybe-dg", "ybe-dd", "ybe-gd"}, kRelationPoints, o));
}

CriterionResult c2(const Options& o) {
  return from_reports(2, "free-parameter (t1, t2) Yang-Baxter and its fish specialization",
                      relations({"ybe-lemma", "ybe-lemma-rm"}, kRelationPoints, o));
}

CriterionResult c3(const Options& o) {
  auto r = from_reports(3, "caduceus relation, both caps, with scalar L",
                        relations({"caduceus-reflecting", "caduceus-absorbing"}, kRelationPoints, o));
  const Rational spot = caduceus_factor(ParamPoint({Rational(1, 2), Rational(1, 3)}, 2));
  r.pass = r.pass && spot == 1;
  r.detail += "; L(q=2,z=(1/2,1/3)) = " + to_string(spot);
  return r;
}

CriterionResult c4(const Options& o) {
  return from_reports(4, "fish relation, both caps", relations({"fish-reflecting", "fish-absorbing"}, kRelationPoints, o));
}

CriterionResult c5(const Options& o) {
  return from_reports(5, "colored Yang-Baxter, signed and positive, 4^6 boundaries x 5 points",
                      relations({"ybe-signed-gg", "ybe-signed-dg", "ybe-signed-dd", "ybe-positive-gg",
                                 "ybe-positive-dg", "ybe-positive-dd"},
                                kColoredYbePoints, o));
}

CriterionResult c6(const Options& o) {
  return from_reports(6, "reflection equation, signed 5^4 and positive 3^4 x 10 points",
                      relations({"reflection-signed", "reflection-positive"}, kReflectionPoints, o));
}

CriterionResult finish(int id, const std::string& name, std::initializer_list<std::pair<std::string, const Tally*>> parts) {
  CriterionResult r{id, name, true, "", 0, {}};
  std::ostringstream os;
  for (const auto& [label, t] : parts) {
    r.pass = r.pass && t->pass();
    os << label << " " << t->checks << " checks (" << t->nonzero << " nonzero), " << t->failure_count << " failures; ";
    for (const auto& f : t->failures)
      if (r.failures.size() < kKeptFailures) r.failures.push_back(f);
    if (t->checks == 0) r.pass = false;
  }
  r.detail = os.str();
  r.detail.resize(r.detail.size() - 2);
  return r;
}

CriterionResult c7(const Options& o) {
  Tally weyl, agree;
  reference_instance_checks(kLatticePoints, o.seed, weyl, agree);
  for (Model m : {Model::UncoloredReflecting, Model::UncoloredAbsorbing})
    for (std::size_t k = 0; k < kLatticePoints; ++k) {
      const ParamPoint p1 = lattice_point(1, derive(o.seed, 12, k)), p2 = lattice_point(2, derive(o.seed, 13, k));
      for (const auto& s : uncolored_instances(m, p1, p2, 5)) weyl_check(s, weyl, agree);
    }
  return finish(7, "functional equations, Z/D1 and Z/D2 under every Weyl generator, n<=2 L<=5",
                {{"invariance", &weyl}, {"enumeration=transfer", &agree}});
}

CriterionResult c8(const Options& o) {
  Tally general, special;
  closed_form_sweep(kLatticePoints, o.seed, 5, general, special);
  return finish(8, "closed form for sigma(i) = -tau(i), n<=2 L<=5",
                {{"sigma(i)=-i", &special}, {"general sigma", &general}});
}

CriterionResult c9(const Options& o) {
  Tally si, sn, positive;
  recursion_sweep(kLatticePoints, o.seed, si, sn, positive);
  return finish(9, "type C recursions (s_i, s_n, positive s_i), n=2 L=4",
                {{"s_i", &si}, {"s_n", &sn}, {"positive", &positive}});
}

CriterionResult c10(const Options& o) {
  Tally ops, coeffs, ztilde;
  operator_checks(kOperatorPoints, o.seed, ops, coeffs, ztilde);
  return finish(10, "Demazure-Lusztig operators and the Z-tilde recursion",
                {{"operator identities", &ops}, {"u-coefficients", &coeffs}, {"Z-tilde", &ztilde}});
}

CriterionResult c11(const Options& o) {
  Tally sums, bounds;
  const WeightSystem w = WeightSystem::standard();
  const Model models[] = {Model::UncoloredReflecting, Model::UncoloredAbsorbing, Model::ColoredSigned,
                          Model::ColoredPositive};
  auto row_sums = [&](const ParamPoint& p, bool check_bounds) {
    for (Model m : models) {
      const auto alphabet = model_alphabet(m, static_cast<int>(p.n()));
      for (Label a : alphabet) {
        sums.record({stochastic_row_check(w, {cap_family(m), m}, {a, a}, {{}, p.q()}, alphabet), 1},
                    p, "cap row " + std::string(to_string(m)));
        for (Label b : alphabet) {
          if (check_bounds) {
            const Rational cw = cap_weight(m, a, b);
            bounds.record({Rational(sgn(cw) >= 0 && cw <= 1), 1}, p, "cap weight in [0,1]");
          }
          for (std::size_t k = 0; k < p.n(); ++k) {
            const WeightParams wp{{p.z(k)}, p.q()};
            for (Family f : {Family::Gamma, Family::Delta}) {
              sums.record({stochastic_row_check(w, {f, m}, {a, b}, wp, alphabet), 1}, p,
                          std::string(to_string(f)) + " row " + std::string(to_string(m)));
              if (!check_bounds) continue;
              for (Label c : alphabet)
                for (Label d : alphabet) {
                  const Rational x = w.weight({f, m}, {a, b, c, d}, wp);
                  bounds.record({Rational(sgn(x) >= 0 && x <= 1), 1}, p,
                                std::string(to_string(f)) + " weight in [0,1] " + std::string(to_string(m)));
                }
            }
          }
          if (p.n() >= 2 && !check_bounds) {
            const WeightParams rp{{p.z(0), p.z(1)}, p.q()};
            for (Family f : {Family::RGammaGamma, Family::RDeltaGamma, Family::RDeltaDelta})
              sums.record({stochastic_row_check(w, {f, m}, {a, b}, rp, alphabet), 1}, p,
                          std::string(to_string(f)) + " row " + std::string(to_string(m)));
          }
        }
      }
    }
  };
  for (std::size_t k = 0; k < kRelationPoints; ++k) row_sums(sample_point(2, derive(o.seed, 14, k), singularities::all()), false);
  for (std::size_t k = 0; k < kRegimePoints; ++k) {
    const ParamPoint p = sample_regime_point(2, derive(o.seed, 15, k));
    if (!in_stochastic_regime(p)) bounds.record({0, 1}, p, "regime sampler left the regime");
    row_sums(p, true);
  }
  return finish(11, "stochastic rows sum to 1; weights in [0,1] at 100 regime points",
                {{"row sums", &sums}, {"bounds", &bounds}});
}

CriterionResult c12(const Options& o) {
  std::ostringstream os;
  bool pass = true;
  std::vector<RelationFailure> failures;
  const Model models[] = {Model::UncoloredReflecting, Model::UncoloredAbsorbing, Model::ColoredSigned,
                          Model::ColoredPositive};
  double worst_z = 0;
  int runs = 0;
  for (Model m : models)
    for (int n = 1; n <= 2; ++n) {
      const ParamPoint p(std::vector<Rational>(static_cast<std::size_t>(n), Rational(3, 4)), Rational(1, 2));
      const LatticeSpec spec(m, 4, Partition{std::vector<int>(m == Model::UncoloredAbsorbing ? 0 : n, 0)}, p);
      const SamplerConfig cfg{spec, derive(o.seed, 16, static_cast<std::uint64_t>(runs)), kMonteCarloSamples};
      const auto summary = summarize(cfg, o.jobs);
      const auto stats = compare_empirical_to_exact(summary, exact_outcome_probabilities(spec), kChiSquareLevel);
      worst_z = std::max(worst_z, stats.max_z);
      ++runs;
      if (!stats.pass(kZScoreLimit)) {
        pass = false;
        os << to_string(m) << " n=" << n << " max z " << stats.max_z << " chi2 " << stats.chi_square << " (q999 "
           << stats.chi_square_quantile << "); ";
      }
    }
  os << runs << " runs x " << kMonteCarloSamples << " samples, max z " << worst_z << "; ";

  std::size_t path_checks = 0, norm_checks = 0, weight_checks = 0;
  for (Model m : models)
    for (int L = 1; L <= 3; ++L)
      for (std::size_t k = 0; k < 3; ++k) {
        const ParamPoint p = k == 0 ? ParamPoint({Rational(3, 4)}, Rational(1, 2)) : sample_regime_point(1, derive(o.seed, 17, k));
        const LatticeSpec spec(m, L, Partition{std::vector<int>(m == Model::UncoloredAbsorbing ? 0 : 1, 0)}, p);
        const Sampler sampler(spec);
        const auto dist = sampler.exhaustive_distribution();
        const auto exact = exact_outcome_probabilities(spec);
        Rational total = 0;
        for (const auto& [out, pr] : dist) total += pr;
        ++norm_checks;
        Rational exact_total = 0;
        for (const auto& [out, pr] : exact) exact_total += pr;
        auto esc = dist.find(Outcome::escape());
        exact_total += esc == dist.end() ? Rational(0) : esc->second;
        if (total != 1 || exact_total != 1) {
          pass = false;
          failures.push_back({p, {}, exact_total, 1, "normalization " + std::string(to_string(m)) + " L=" + std::to_string(L)});
        }
        if (L > 2) continue;
        for (const auto& s : all_outcome_specs(spec)) {
          ++path_checks;
          auto it = dist.find(outcome_of(s));
          const Rational path = it == dist.end() ? Rational(0) : it->second;
          const Rational z = partition_function(s);
          if (path != z) {
            pass = false;
            failures.push_back({p, {}, path, z, "path sum vs Z " + to_string(outcome_of(s))});
          }
        }
        for (std::uint64_t idx = 0; idx < 50; ++idx) {
          const auto r = sampler.sample(derive(o.seed, 18, k), idx, true);
          if (r.outcome.escaped) continue;
          ++weight_checks;
          const LatticeSpec os_spec(m, L, r.outcome.lambda, spec.sigma,
                                    is_colored(m) ? SignedPermutation(r.outcome.colors) : spec.tau, p);
          const Rational wgt = configuration_weight(os_spec, r.config);
          if (*r.probability != wgt) {
            pass = false;
            failures.push_back({p, {}, *r.probability, wgt, "per-sample weight identity"});
          }
        }
      }
  os << path_checks << " exhaustive path sums, " << norm_checks << " normalizations, " << weight_checks
     << " per-sample weight identities";
  if (failures.size() > kKeptFailures) failures.erase(failures.begin() + kKeptFailures, failures.end());
  return {12, "Monte Carlo vs exact law; exhaustive path sums", pass, os.str(), 0, failures};
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "ybe-uncolored", c1}, {2, "ybe-lemma", c2},   {3, "caduceus", c3},     {4, "fish", c4},
      {5, "ybe-colored", c5},   {6, "reflection", c6},  {7, "functional", c7},   {8, "closed-form", c8},
      {9, "recursions", c9},    {10, "demazure-lusztig", c10}, {11, "stochasticity", c11}, {12, "monte-carlo", c12},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c, const Options& options) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = c.run(options);
  } catch (const std::exception& e) {
    r = {c.id, c.name, false, std::string("exception: ") + e.what(), 0, {}};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<std::string> functional_check_ids() { return {"functional-weyl", "closed-form", "recursion", "dl"}; }

RelationReport run_functional_check(const std::string& id, std::size_t points, std::uint64_t seed) {
  if (id == "functional-weyl") {
    Tally weyl, agree;
    reference_instance_checks(points, seed, weyl, agree);
    auto r = to_report(id, points, weyl);
    r.merge(to_report(id, 0, agree));
    return r;
  }
  if (id == "closed-form") {
    Tally general, special;
    closed_form_sweep(points, seed, 5, general, special);
    return to_report(id, points, general).merge(to_report(id, 0, special));
  }
  if (id == "recursion") {
    Tally si, sn, positive;
    recursion_sweep(points, seed, si, sn, positive);
    return to_report(id, points, si).merge(to_report(id, 0, sn)).merge(to_report(id, 0, positive));
  }
  if (id == "dl") {
    Tally ops, coeffs, ztilde;
    operator_checks(points, seed, ops, coeffs, ztilde);
    return to_report(id, points, ops).merge(to_report(id, 0, coeffs)).merge(to_report(id, 0, ztilde));
  }
  throw UsageError("unknown check '" + id + "'");
}

}  // namespace ssice::acceptance
