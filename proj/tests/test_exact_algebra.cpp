#include "ssice/counter_rng.hpp"
#include "ssice/errors.hpp"
#include "ssice/param_point.hpp"

#include <doctest.h>

using namespace ssice;

namespace {

Rational random_rational(CounterRng& rng) {
  const long num = static_cast<long>(rng.below(2001)) - 1000;
  const long den = static_cast<long>(rng.below(1000)) + 1;
  return make_rational(num, den);
}

}  // namespace

TEST_CASE("rationals are canonical and parse round-trips") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(to_string(make_rational(3, -6)) == "-1/2");
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK(parse_rational("123456789012345678901234567890/3") * 3 == parse_rational("123456789012345678901234567890"));
  CHECK(parse_rational_list("1/2, 1/3").size() == 2);
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("x"), UsageError);
  CHECK(pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(pow(make_rational(5), 0) == 1);
}

TEST_CASE("field axioms on random rationals") {
  CounterRng rng(11, {1});
  for (int k = 0; k < 200; ++k) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK(Rational((a + b) - b) == a);
    CHECK(Rational((a * b) * c) == Rational(a * (b * c)));
    CHECK(Rational(a * (b + c)) == Rational(a * b + a * c));
    if (!is_zero(a)) CHECK(Rational(a * (1 / a)) == 1);
  }
}

TEST_CASE("zprime") {
  CHECK(zprime(1, make_rational(7, 3)) == make_rational(7, 3));
  CHECK(zprime(make_rational(1, 2), 2) == 1);
  const Rational q = make_rational(5, 2);
  CHECK(zprime(Rational(1 / (q + 1)), q) == 0);
  CHECK_THROWS_AS(zprime(0, q), DomainError);
  CounterRng rng(12, {});
  for (int k = 0; k < 50; ++k) {
    const Rational z = make_rational(static_cast<long>(rng.below(999)) + 1, 1000), qq = random_rational(rng);
    CHECK(Rational(1 / z + zprime(z, qq)) == Rational(qq + 1));
  }
}

TEST_CASE("stochastic regime") {
  CHECK(in_stochastic_regime(ParamPoint({make_rational(3, 4)}, make_rational(1, 2))));
  CHECK_FALSE(in_stochastic_regime(ParamPoint({make_rational(3, 4)}, 2)));
  CHECK(in_stochastic_regime(ParamPoint({make_rational(1, 2)}, 1)));
  CHECK_FALSE(in_stochastic_regime(ParamPoint({make_rational(1, 2)}, -2)));
  for (std::uint64_t s = 0; s < 50; ++s) CHECK(in_stochastic_regime(sample_regime_point(2, s)));
}

TEST_CASE("sample_point contracts") {
  CHECK(sample_point(1, 7, {}) == sample_point(1, 7, {}));
  CHECK_FALSE(sample_point(1, 7, {}) == sample_point(1, 8, {}));
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto p = sample_point(2, s, {singularities::z_equal()});
    CHECK(p.z(0) != p.z(1));
  }
  const Singularity always{"always", [](const ParamPoint&) { return true; }};
  CHECK_THROWS_AS(sample_point(1, 1, {always}, {1000, 50}), SamplingError);
  const auto p = sample_point(2, 3, singularities::all(), {1000});
  for (const auto& z : p.zs()) {
    CHECK(z > 0);
    CHECK(z.get_num() <= 1000);
    CHECK(z.get_den() <= 1000);
  }
}

TEST_CASE("counter rng is keyed, not sequenced") {
  CounterRng a(5, {1, 2, 3}), b(5, {1, 2, 3}), c(5, {1, 2, 4});
  const auto x = a.next();
  CHECK(x == b.next());
  CHECK(x != c.next());
  for (int k = 0; k < 1000; ++k) CHECK(a.below(7) < 7);
}
