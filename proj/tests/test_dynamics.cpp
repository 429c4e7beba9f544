#include "ssice/dynamics.hpp"
#include "ssice/errors.hpp"

#include <doctest.h>

using namespace ssice;

namespace {

constexpr Label P = kPlus, M = kMinus;
const Model kModels[] = {Model::UncoloredReflecting, Model::UncoloredAbsorbing, Model::ColoredSigned,
                         Model::ColoredPositive};

LatticeSpec start(Model m, int n, int L, const ParamPoint& p) {
  return LatticeSpec(m, L, Partition{std::vector<int>(m == Model::UncoloredAbsorbing ? 0 : n, 0)}, p);
}

ParamPoint mc_point(int n) {
  return ParamPoint(std::vector<Rational>(static_cast<std::size_t>(n), make_rational(3, 4)), make_rational(1, 2));
}

}  // namespace

TEST_CASE("degenerate point: the particle never turns") {
  const ParamPoint p({1}, 1);  // qz = 1 and z' = q
  const Sampler s(start(Model::UncoloredReflecting, 1, 3, p));
  for (std::uint64_t i = 0; i < 20; ++i) {
    const auto r = s.sample(1, i);
    for (int col = 0; col <= 3; ++col) CHECK(r.config.h(2, col) == M);
    CHECK(r.outcome.escaped);
  }
  const auto summary = summarize({start(Model::UncoloredReflecting, 1, 3, p), 4, 1000});
  CHECK(summary.escape_count == 1000);
  const auto stats = compare_empirical_to_exact(summary, exact_outcome_probabilities(start(Model::UncoloredReflecting, 1, 3, p)));
  CHECK(stats.pass());
}

TEST_CASE("small exact law") {
  const LatticeSpec s = start(Model::UncoloredReflecting, 1, 1, ParamPoint({make_rational(1, 2)}, 2));
  const auto dist = Sampler(s).exhaustive_distribution();
  CHECK(dist.at(Outcome{false, Partition{{0}}, {}}) == make_rational(1, 2));
  CHECK(dist.at(Outcome::escape()) == make_rational(1, 2));
}

TEST_CASE("sampling is a pure function of (seed, index)") {
  const LatticeSpec s = start(Model::ColoredSigned, 2, 4, mc_point(2));
  const Sampler a(s), b(s);
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(a.sample(9, i).config == b.sample(9, i).config);
  bool differs = false;
  for (std::uint64_t i = 0; i < 50; ++i) differs = differs || !(a.sample(9, i).config == a.sample(10, i).config);
  CHECK(differs);
  const SamplerConfig cfg{s, 3, 2000};
  const auto one = summarize(cfg, 1), three = summarize(cfg, 3);
  CHECK(one.histogram == three.histogram);
  CHECK(one.escape_count == three.escape_count);
  std::uint64_t total = one.escape_count;
  for (const auto& [o, k] : one.histogram) total += k;
  CHECK(total == 2000);
}

TEST_CASE("merging summaries is associative") {
  const LatticeSpec s = start(Model::UncoloredAbsorbing, 2, 4, mc_point(2));
  SampleSummary a = summarize({s, 1, 300}), b = summarize({s, 2, 500}), c = summarize({s, 3, 700});
  SampleSummary left = a;
  left.merge(b).merge(c);
  SampleSummary bc = b;
  bc.merge(c);
  SampleSummary right = a;
  right.merge(bc);
  CHECK(left.histogram == right.histogram);
  CHECK(left.num_samples == 1500);
}

TEST_CASE("trajectories") {
  CHECK(trajectory_from_configuration(Configuration(2, 3)).positions ==
        std::vector<std::vector<std::pair<int, Label>>>(5));

  const LatticeSpec s = start(Model::UncoloredReflecting, 2, 4, mc_point(2));
  const Sampler sampler(s);
  int kept = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto r = sampler.sample(5, i);
    if (r.outcome.escaped) continue;
    ++kept;
    CHECK(trajectory_from_configuration(r.config).positions.back().size() == 2);
  }
  CHECK(kept > 0);

  // The opposite-boundary state: strands enter, bounce off the caps and land at lambda.
  const ParamPoint p = sample_point(2, 3, singularities::all(), {1000});
  const LatticeSpec opp(Model::ColoredSigned, 4, Partition{{2, 1}}, SignedPermutation({-1, -2}),
                        SignedPermutation({1, 2}), p);
  Configuration only(2, 4);
  enumerate_states(opp, [&](const Configuration& c, const Rational&) { only = c; });
  const auto t = trajectory_from_configuration(only);
  CHECK(t.positions.front().empty());
  CHECK(t.positions.back() == std::vector<std::pair<int, Label>>{{4, 1}, {2, 2}});
}

TEST_CASE("per-sample weight identity") {
  for (Model m : kModels) {
    const LatticeSpec s = start(m, 2, 3, mc_point(2));
    const Sampler sampler(s);
    int checked = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
      const auto r = sampler.sample(6, i, true);
      if (r.outcome.escaped) continue;
      const LatticeSpec out = is_colored(m) ? LatticeSpec(m, 3, r.outcome.lambda, s.sigma,
                                                          SignedPermutation(r.outcome.colors), s.point)
                                            : LatticeSpec(m, 3, r.outcome.lambda, s.point);
      CHECK(*r.probability == configuration_weight(out, r.config));
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("exhaustive path sums reproduce partition functions") {
  for (Model m : kModels)
    for (int L = 1; L <= 3; ++L)
      for (std::uint64_t k = 0; k < 3; ++k) {
        const auto p = sample_regime_point(1, k);
        const LatticeSpec s = start(m, 1, L, p);
        const auto dist = Sampler(s).exhaustive_distribution();
        Rational total = 0;
        for (const auto& [o, pr] : dist) total += pr;
        CHECK(total == 1);
        if (L > 2) continue;
        for (const auto& out : all_outcome_specs(s)) {
          const auto it = dist.find(outcome_of(out));
          CHECK((it == dist.end() ? Rational(0) : it->second) == partition_function(out));
        }
      }
}

TEST_CASE("empirical frequencies match the exact law") {
  const LatticeSpec s = start(Model::UncoloredReflecting, 1, 2, mc_point(1));
  const auto stats = compare_empirical_to_exact(summarize({s, 17, 100000}), exact_outcome_probabilities(s));
  CHECK(stats.max_z < 5);
  CHECK(stats.chi_square < stats.chi_square_quantile);
  CHECK(stats.degrees_of_freedom >= 1);
}

TEST_CASE("impossible outcomes are a hard failure") {
  const LatticeSpec s = start(Model::UncoloredReflecting, 1, 2, mc_point(1));
  SampleSummary fake;
  fake.histogram[Outcome{false, Partition{{7}}, {}}] = 1;
  fake.num_samples = 1;
  CHECK_THROWS_AS(compare_empirical_to_exact(fake, exact_outcome_probabilities(s)), SoundnessError);
  CHECK_THROWS_AS(Sampler(start(Model::UncoloredReflecting, 1, 2, ParamPoint({make_rational(3, 4)}, 2))), UsageError);
}
