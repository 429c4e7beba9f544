#include "ssice/diagram.hpp"
#include "ssice/errors.hpp"

#include <doctest.h>

using namespace ssice;

namespace {

constexpr Label P = kPlus, M = kMinus;
const VertexKind G{Family::Gamma, Model::UncoloredReflecting};
const VertexKind RGG{Family::RGammaGamma, Model::UncoloredReflecting};

WiringDiagram single_gamma(Rational scale = 1) {
  WiringDiagram::Builder b;
  const auto l = b.boundary(0), t = b.boundary(1), r = b.boundary(2), d = b.boundary(3);
  b.node(G, {0}, {l, t, r, d}, scale);
  return b.build({P, M});
}

}  // namespace

TEST_CASE("single node equals its vertex weight") {
  const ParamPoint p({make_rational(2, 9)}, make_rational(4, 3));
  CHECK(evaluate(single_gamma(), {M, P, M, P}, p) == Rational(p.q() * p.z(0)));
  CHECK(evaluate(single_gamma(make_rational(5)), {M, P, M, P}, p) == Rational(5 * p.q() * p.z(0)));
}

TEST_CASE("all-plus boundaries") {
  const auto p = sample_point(2, 1, singularities::all());
  CHECK(evaluate(diagrams::caduceus_caps(Model::UncoloredReflecting), {P, P, P, P}, p) == 1);
  CHECK(evaluate(diagrams::ybe_left(G, G, RGG, {P, M}), {P, P, P, P, P, P}, p) == 1);
  CHECK(evaluate(diagrams::ybe_right(G, G, RGG, {P, M}), {P, P, P, P, P, P}, p) == 1);
}

TEST_CASE("stochastic closure over output boundaries") {
  // Inputs a, b (left) and c (top); outputs d, e (right) and f (bottom).
  const auto p = sample_point(2, 2, singularities::all());
  for (const auto& d : {diagrams::ybe_left(G, G, RGG, {P, M}), diagrams::ybe_right(G, G, RGG, {P, M})}) {
    DiagramEvaluator eval(d, p);
    for (Label a : {P, M})
      for (Label b : {P, M})
        for (Label c : {P, M}) {
          Rational sum = 0;
          for (Label x : {P, M})
            for (Label y : {P, M})
              for (Label z : {P, M}) sum += eval({a, b, c, x, y, z});
          CHECK(sum == 1);
        }
  }
}

TEST_CASE("multilinear in node scale") {
  const auto p = sample_point(2, 3, singularities::all());
  const auto build = [](Rational s) {
    WiringDiagram::Builder b;
    const auto a = b.boundary(0), c = b.boundary(1), d = b.boundary(2), f = b.boundary(3);
    const auto mid = b.internal(), e = b.boundary(4), g = b.boundary(5);
    b.node(G, {0}, {a, c, mid, f}, s);
    b.node(G, {1}, {mid, d, e, g});
    return b.build({P, M});
  };
  const auto base = build(1), scaled = build(make_rational(-3, 2));
  DiagramEvaluator e1(base, p), e2(scaled, p);
  int nonzero = 0;
  for (Label a : {P, M})
    for (Label c : {P, M})
      for (Label d : {P, M})
        for (Label f : {P, M})
          for (Label e : {P, M})
            for (Label g : {P, M}) {
              const Rational x = e1({a, c, d, f, e, g});
              nonzero += !is_zero(x);
              CHECK(e2({a, c, d, f, e, g}) == Rational(make_rational(-3, 2) * x));
            }
  CHECK(nonzero > 0);
}

TEST_CASE("builder validation") {
  SUBCASE("internal edge used once") {
    WiringDiagram::Builder b;
    const auto i = b.internal();
    b.node(G, {0}, {b.boundary(0), b.boundary(1), b.boundary(2), i});
    CHECK_THROWS_AS(b.build({P, M}), ConstructionError);
  }
  SUBCASE("boundary stub reused") {
    WiringDiagram::Builder b;
    const auto x = b.boundary(0);
    b.node(G, {0}, {x, x, b.boundary(1), b.boundary(2)});
    CHECK_THROWS_AS(b.build({P, M}), ConstructionError);
  }
  SUBCASE("wrong slot count") {
    WiringDiagram::Builder b;
    b.node(G, {0}, {b.boundary(0), b.boundary(1)});
    CHECK_THROWS_AS(b.build({P, M}), ConstructionError);
  }
  SUBCASE("gap in boundary indices") {
    WiringDiagram::Builder b;
    b.node(G, {0}, {b.boundary(0), b.boundary(1), b.boundary(2), b.boundary(5)});
    CHECK_THROWS_AS(b.build({P, M}), ConstructionError);
  }
}

TEST_CASE("named builders have the documented shapes") {
  CHECK(diagrams::ybe_left(G, G, RGG, {P, M}).boundary_size() == 6);
  CHECK(diagrams::ybe_left(G, G, RGG, {P, M}).internal_count() == 3);
  CHECK(diagrams::caduceus_braid(Model::UncoloredAbsorbing).boundary_size() == 4);
  CHECK(diagrams::fish_cap(Family::CapReflecting).boundary_size() == 2);
  CHECK(diagrams::reflection_left(Model::ColoredSigned, {-1, 0, 1}).boundary_size() == 4);
}
