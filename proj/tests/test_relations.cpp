#include "ssice/errors.hpp"
#include "ssice/relations.hpp"

#include <doctest.h>

using namespace ssice;

namespace {

constexpr Label P = kPlus, M = kMinus;
const Model U = Model::UncoloredReflecting;

ParamPoint point(std::uint64_t seed, std::size_t n = 2) { return sample_point(n, seed, singularities::all()); }

}  // namespace

TEST_CASE("uncolored YBE, all four kinds, with a named boundary") {
  const VertexKind G{Family::Gamma, U}, D{Family::Delta, U};
  const auto p = point(1);
  const WiringDiagram l = diagrams::ybe_left(G, G, {Family::RGammaGamma, U}, {P, M});
  const WiringDiagram r = diagrams::ybe_right(G, G, {Family::RGammaGamma, U}, {P, M});
  const std::vector<Label> b = {M, P, P, M, P, P};
  const Rational lhs = evaluate(l, b, p);
  CHECK_FALSE(is_zero(lhs));
  CHECK(lhs == evaluate(r, b, p));
  for (Side x : {Side::Gamma, Side::Delta})
    for (Side y : {Side::Gamma, Side::Delta}) {
      const auto rep = verify_ybe_uncolored(x, y, p);
      CHECK(rep.pass());
      CHECK(rep.boundaries_tested == 64);
    }
  (void)D;
}

TEST_CASE("parity vanishing in uncolored relations") {
  const VertexKind D{Family::Delta, U};
  const auto p = point(2);
  DiagramEvaluator e(diagrams::ybe_left(D, D, {Family::RDeltaDelta, U}, {P, M}), p);
  DiagramEvaluator c(diagrams::caduceus_braid(U), p);
  for (unsigned code = 0; code < 64; ++code) {
    std::vector<Label> b(6);
    int minus = 0;
    for (int i = 0; i < 6; ++i) minus += (b[i] = (code >> i) & 1 ? M : P) == M;
    if (minus % 2) CHECK(is_zero(e(b)));
  }
  for (const std::vector<Label>& b : {std::vector<Label>{P, P, P, M}, {M, P, P, P}, {M, M, M, P}}) CHECK(is_zero(c(b)));
}

TEST_CASE("Lemma YBE at free parameters and at the fish specialization") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto p = point(10 + s, 3);
    CHECK(verify_ybe_lemma(p.z(0), p.z(1), p.q()).pass());
  }
  CHECK(run_relation("ybe-lemma-rm", 5, 3).pass());
}

TEST_CASE("caduceus") {
  CHECK(caduceus_factor(ParamPoint({make_rational(1, 2), make_rational(1, 3)}, 2)) == 1);
  const auto p = point(4);
  for (Model cap : {Model::UncoloredReflecting, Model::UncoloredAbsorbing}) {
    const auto rep = verify_caduceus(p, cap);
    CHECK(rep.pass());
    CHECK(rep.boundaries_tested == 16);
  }
}

TEST_CASE("fish boundary values") {
  const auto p = point(5, 1);
  CHECK(evaluate(diagrams::fish_braid(Family::CapAbsorbing), {P, P}, p) == 0);
  CHECK(evaluate(diagrams::fish_cap(Family::CapAbsorbing), {P, P}, p) == 0);
  CHECK(evaluate(diagrams::fish_braid(Family::CapReflecting), {P, P}, p) == 1);
  CHECK(evaluate(diagrams::fish_cap(Family::CapReflecting), {P, P}, p) == 1);
  const Rational lhs = evaluate(diagrams::fish_braid(Family::CapAbsorbing), {P, M}, p);
  CHECK_FALSE(is_zero(lhs));
  CHECK(lhs == Rational(fish_factor(p, U) * evaluate(diagrams::fish_cap(Family::CapAbsorbing), {P, M}, p)));
  for (Model cap : {Model::UncoloredReflecting, Model::UncoloredAbsorbing}) CHECK(verify_fish(p, cap).pass());
}

TEST_CASE("colored YBE") {
  const auto p = point(6);
  for (Model m : {Model::ColoredSigned, Model::ColoredPositive}) {
    for (auto [x, y] : {std::pair{Side::Gamma, Side::Gamma}, {Side::Delta, Side::Gamma}, {Side::Delta, Side::Delta}}) {
      const auto rep = verify_ybe_colored(m, x, y, p);
      CHECK(rep.pass());
      CHECK(rep.boundaries_tested == 4096);
    }
    CHECK_THROWS_AS(verify_ybe_colored(m, Side::Gamma, Side::Delta, p), UsageError);
    const auto a = ybe_alphabet(m, false);
    const VertexKind G{Family::Gamma, m};
    CHECK(evaluate(diagrams::ybe_left(G, G, {Family::RGammaGamma, m}, a), std::vector<Label>(6, a[1]), p) == 1);
  }
}

TEST_CASE("positive model on {0,1} reproduces the uncolored check") {
  const auto p = point(7);
  const Model C = Model::ColoredPositive;
  DiagramEvaluator col(diagrams::ybe_left({Family::Gamma, C}, {Family::Gamma, C}, {Family::RGammaGamma, C}, {0, 1}), p);
  DiagramEvaluator unc(diagrams::ybe_left({Family::Gamma, U}, {Family::Gamma, U}, {Family::RGammaGamma, U}, {P, M}), p);
  for (unsigned code = 0; code < 64; ++code) {
    std::vector<Label> b(6);
    for (int i = 0; i < 6; ++i) b[i] = (code >> i) & 1;
    CHECK(col(b) == unc(b));
  }
}

TEST_CASE("reflection equation") {
  const auto p = point(8);
  const auto rep = verify_reflection(Model::ColoredSigned, p);
  CHECK(rep.pass());
  CHECK(rep.boundaries_tested == 625);
  CHECK(verify_reflection(Model::ColoredPositive, p).boundaries_tested == 81);
  const auto l = diagrams::reflection_left(Model::ColoredSigned, reflection_alphabet(Model::ColoredSigned, false));
  CHECK(evaluate(l, {0, 0, 0, 0}, p) ==
        evaluate(diagrams::reflection_right(Model::ColoredSigned, reflection_alphabet(Model::ColoredSigned, false)),
                 {0, 0, 0, 0}, p));
  CHECK(is_zero(evaluate(l, {1, 0, 0, 0}, p)));
  CHECK(is_zero(evaluate(l, {2, 2, 2, 0}, p)));
}

TEST_CASE("paranoid alphabets give the same verdict") {
  RelationOptions o;
  o.paranoid = true;
  CHECK(ybe_alphabet(Model::ColoredSigned, true).size() == 5);
  CHECK(run_relation("ybe-signed-dg", 1, 9, o).pass());
  CHECK(run_relation("reflection-positive", 2, 9, o).pass());
}

TEST_CASE("corrupted weights are caught with a counterexample") {
  RelationOptions o;
  o.system = WeightSystem::corrupted(Family::Gamma, make_rational(1, 7));
  const auto rep = run_relation("ybe-gg", 3, 1, o);
  REQUIRE_FALSE(rep.pass());
  const auto& f = rep.failures.front();
  CHECK(f.boundary.size() == 6);
  CHECK(f.lhs != f.rhs);
}

TEST_CASE("registry and determinism") {
  CHECK(relation_ids().size() == 18);
  CHECK(is_relation_id("fish-absorbing"));
  CHECK_FALSE(is_relation_id("fish"));
  CHECK_THROWS_AS(run_relation("nope", 1, 1), UsageError);
  RelationOptions two;
  two.jobs = 2;
  two.system = WeightSystem::corrupted(Family::Delta, 1);
  RelationOptions one = two;
  one.jobs = 1;
  const auto a = run_relation("ybe-dd", 2, 5, one), b = run_relation("ybe-dd", 2, 5, two);
  REQUIRE(a.failures.size() == b.failures.size());
  CHECK_FALSE(a.failures.empty());
  for (std::size_t i = 0; i < a.failures.size(); ++i) CHECK(a.failures[i].boundary == b.failures[i].boundary);
}
