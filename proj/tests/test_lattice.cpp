#include "ssice/errors.hpp"
#include "ssice/lattice.hpp"
#include "ssice/render.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>

using namespace ssice;

namespace {

constexpr Label P = kPlus, M = kMinus;
const Model kModels[] = {Model::UncoloredReflecting, Model::UncoloredAbsorbing, Model::ColoredSigned,
                         Model::ColoredPositive};

ParamPoint pt(std::vector<Rational> z, Rational q) { return ParamPoint(std::move(z), std::move(q)); }

ParamPoint lattice_point(std::size_t n, std::uint64_t seed) {
  return sample_point(n, seed, singularities::all(), {1000});
}

std::size_t count_states(const LatticeSpec& s) {
  std::size_t n = 0;
  enumerate_states(s, [&](const Configuration&, const Rational&) { ++n; });
  return n;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(partitions_in_box(0, 3).size() == 1);
  CHECK(parse_partition("2,1") == Partition{{2, 1}});
  CHECK(parse_partition("") == Partition{});
  CHECK_THROWS(parse_partition("1,2"));
  CHECK_THROWS(parse_partition("a"));
  CHECK(to_string(Partition{{3, 0}}) == "3,0");
}

TEST_CASE("spec validation") {
  const auto p = pt({make_rational(1, 2), make_rational(1, 3)}, 2);
  CHECK_THROWS_AS(LatticeSpec(Model::UncoloredReflecting, 4, Partition{{1}}, p), SpecError);
  CHECK_THROWS_AS(LatticeSpec(Model::UncoloredReflecting, 2, Partition{{1, 0}}, p), SpecError);
  CHECK_NOTHROW(LatticeSpec(Model::UncoloredAbsorbing, 2, Partition{{1}}, p));
  CHECK_THROWS_AS(LatticeSpec(Model::ColoredPositive, 4, Partition{{1, 0}}, SignedPermutation({-1, 2}),
                              SignedPermutation({1, 2}), p),
                  SpecError);
}

TEST_CASE("boundary assignment") {
  const auto p = pt({make_rational(1, 2), make_rational(1, 3)}, 2);
  const auto b = boundary_assignment(LatticeSpec(Model::UncoloredReflecting, 4, Partition{{2, 1}}, p));
  CHECK(b.bottom == std::vector<Label>{P, M, P, M});  // columns 1..4
  CHECK(boundary_assignment(LatticeSpec(Model::UncoloredReflecting, 3, Partition{{0, 0}}, p)).bottom ==
        std::vector<Label>{M, M, P});
  const LatticeSpec c(Model::ColoredSigned, 3, Partition{{0, 0}}, SignedPermutation::identity(2),
                      SignedPermutation({-2, 1}), p);
  CHECK(boundary_assignment(c).left_gamma == std::vector<Label>{1, 2});
  CHECK(boundary_assignment(c).bottom == std::vector<Label>{1, -2, P});
}

TEST_CASE("hand-enumerated partition functions") {
  const LatticeSpec a(Model::UncoloredReflecting, 1, Partition{{0}}, pt({make_rational(1, 2)}, 2));
  CHECK(count_states(a) == 1);  // qz = 1 kills the c1 state at this point
  CHECK(count_states(a.with_point(lattice_point(1, 2))) == 2);
  CHECK(partition_function(a) == make_rational(1, 2));

  const Rational z = make_rational(2, 5), q = make_rational(7, 3);
  const LatticeSpec b(Model::UncoloredAbsorbing, 1, Partition{}, pt({z}, q));
  CHECK(partition_function(b) == Rational(q * z));

  const LatticeSpec c(Model::ColoredSigned, 1, Partition{{0}}, SignedPermutation({-1}), SignedPermutation({1}),
                      pt({z}, q));
  CHECK(partition_function(c) == Rational(z * (1 - zprime(z, q) / q)));
  for (const auto& s : {a, b, c}) CHECK(partition_function_transfer(s) == partition_function(s));
}

TEST_CASE("opposite boundary has exactly one state") {
  const LatticeSpec s(Model::ColoredSigned, 4, Partition{{2, 1}}, SignedPermutation({-1, -2}),
                      SignedPermutation({1, 2}), lattice_point(2, 1));
  CHECK(count_states(s) == 1);
}

TEST_CASE("enumeration and transfer agree on n <= 2, L <= 6") {
  std::size_t instances = 0, nonzero = 0;
  for (std::uint64_t k = 0; k < 10; ++k)
    for (Model m : kModels)
      for (int n = 1; n <= 2; ++n)
        for (int L = n; L <= 6; ++L) {
          const auto p = lattice_point(static_cast<std::size_t>(n), 100 * k + static_cast<std::uint64_t>(n));
          const auto sigma = SignedPermutation::identity(n);
          const LatticeSpec base = is_colored(m)
                                       ? LatticeSpec(m, L, Partition{std::vector<int>(n, 0)}, sigma, sigma, p)
                                       : LatticeSpec(m, L, Partition{std::vector<int>(n, 0)}, p);
          auto specs = all_outcome_specs(base);
          // Colored L > 4 sweeps run in full at the first point only, to bound the runtime.
          if (is_colored(m) && L > 4 && k > 0 && specs.size() > 4) specs.erase(specs.begin() + 4, specs.end());
          for (const auto& s : specs) {
            const Rational e = partition_function(s);
            ++instances;
            nonzero += !is_zero(e);
            CHECK(e == partition_function_transfer(s));
          }
        }
  CHECK(nonzero * 4 > instances);
}

TEST_CASE("regime: weights in [0,1] and total mass at most one") {
  for (std::uint64_t k = 0; k < 5; ++k) {
    const auto p = sample_regime_point(2, k);
    for (Model m : kModels) {
      const auto sigma = SignedPermutation::identity(2);
      const LatticeSpec base = is_colored(m) ? LatticeSpec(m, 3, Partition{{0, 0}}, sigma, sigma, p)
                                             : LatticeSpec(m, 3, Partition{{0, 0}}, p);
      Rational total = 0;
      for (const auto& s : all_outcome_specs(base)) {
        enumerate_states(s, [&](const Configuration&, const Rational& w) {
          CHECK(w >= 0);
          CHECK(w <= 1);
        });
        total += partition_function(s);
      }
      CHECK(total > 0);
      CHECK(total <= 1);
    }
  }
}

TEST_CASE("colors are conserved through the caps") {
  const auto p = lattice_point(2, 3);
  for (Model m : {Model::ColoredSigned, Model::ColoredPositive}) {
    const LatticeSpec base(m, 4, Partition{{0, 0}}, SignedPermutation::identity(2), SignedPermutation::identity(2), p);
    std::size_t states = 0;
    for (const auto& s : all_outcome_specs(base))
      enumerate_states(s, [&](const Configuration& c, const Rational&) {
        ++states;
        std::vector<int> bottom;
        for (int col = 1; col <= c.L(); ++col)
          if (c.v(0, col) != P) bottom.push_back(m == Model::ColoredSigned ? std::abs(c.v(0, col)) : c.v(0, col));
        std::sort(bottom.begin(), bottom.end());
        CHECK(bottom == std::vector<int>{1, 2});
      });
    CHECK(states > 0);
  }
}

TEST_CASE("rendering") {
  const auto p = lattice_point(2, 4);
  const LatticeSpec s(Model::ColoredSigned, 4, Partition{{2, 1}}, SignedPermutation({-1, -2}),
                      SignedPermutation({1, 2}), p);
  Configuration only(2, 4);
  enumerate_states(s, [&](const Configuration& c, const Rational&) { only = c; });
  const auto strands = trace_strands(s, only);
  REQUIRE(strands.size() == 2);
  for (const auto& st : strands) {
    CHECK(st.end == Strand::End::Bottom);
    // Every strand reaches the cap side before coming back.
    const auto furthest = std::max_element(st.points.begin(), st.points.end());
    CHECK(furthest->first == doctest::Approx(4.5));
  }
  const std::string ascii = render_state(s, only, RenderFormat::Ascii);
  const std::string svg = render_state(s, only, RenderFormat::Svg);
  CHECK(ascii.find("strands: 2") != std::string::npos);
  CHECK(count(svg, "<path") == 2);

  const LatticeSpec empty(Model::UncoloredAbsorbing, 3, Partition{}, lattice_point(2, 5));
  const Configuration bare(2, 3);
  CHECK(trace_strands(empty, bare).empty());
  CHECK(render_state(empty, bare, RenderFormat::Ascii).find("strands: 0") != std::string::npos);
  CHECK(count(render_state(empty, bare, RenderFormat::Svg), "<path") == 0);
  CHECK_THROWS_AS(parse_render_format("png"), UsageError);
}
