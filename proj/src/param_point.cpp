#include "ssice/param_point.hpp"

#include "ssice/counter_rng.hpp"
#include "ssice/errors.hpp"

#include <algorithm>
#include <utility>

namespace ssice {

Rational zprime(const Rational& z, const Rational& q) {
  if (is_zero(z)) throw DomainError("z' undefined at z = 0");
  return q + 1 - 1 / z;
}

ParamPoint::ParamPoint(std::vector<Rational> z, Rational q) : z_(std::move(z)), q_(std::move(q)) {
  if (z_.empty()) throw DomainError("a parameter point needs n >= 1");
  if (is_zero(q_)) throw DomainError("q must be nonzero");
  for (const auto& v : z_)
    if (is_zero(v)) throw DomainError("spectral parameters must be nonzero");
}

ParamPoint ParamPoint::with_z(std::size_t k, Rational value) const {
  auto z = z_;
  z.at(k) = std::move(value);
  return {std::move(z), q_};
}

ParamPoint ParamPoint::swapped(std::size_t a, std::size_t b) const {
  auto z = z_;
  std::swap(z.at(a), z.at(b));
  return {std::move(z), q_};
}

std::string to_string(const ParamPoint& p) {
  std::string s = "q=" + to_string(p.q()) + " z=(";
  for (std::size_t k = 0; k < p.n(); ++k) s += (k ? "," : "") + to_string(p.z(k));
  return s + ")";
}

bool in_stochastic_regime(const ParamPoint& point) {
  const auto& q = point.q();
  if (q == -1) throw DomainError("1/(q+1) undefined at q = -1");
  if (sgn(q) <= 0) return false;
  const Rational lo = std::max(Rational(0), Rational(Rational(1) / (q + 1)));
  const Rational hi = std::min(Rational(Rational(1) / q), Rational(1));
  return std::all_of(point.zs().begin(), point.zs().end(),
                     [&](const Rational& z) { return lo <= z && z <= hi; });
}

namespace singularities {
namespace {

template <class F>
Singularity each(std::string name, F f) {
  return {std::move(name), [f](const ParamPoint& p) {
            for (std::size_t i = 0; i < p.n(); ++i)
              if (f(p, i)) return true;
            return false;
          }};
}

// Ordered pairs; `diagonal` also includes i == j.
template <class F>
Singularity pairs(std::string name, F f, bool diagonal = false) {
  return {std::move(name), [f, diagonal](const ParamPoint& p) {
            for (std::size_t i = 0; i < p.n(); ++i)
              for (std::size_t j = 0; j < p.n(); ++j)
                if ((i != j || diagonal) && f(p, i, j)) return true;
            return false;
          }};
}

bool u_of(const ParamPoint& p, std::size_t i, Rational& u) {
  if (p.z(i) == 1) return false;
  u = (1 - p.q() * p.z(i)) / (1 - p.z(i));
  return true;
}

}  // namespace

Singularity z_zero() {
  return each("z_i=0", [](const ParamPoint& p, std::size_t i) { return is_zero(p.z(i)); });
}
Singularity zprime_zero() {
  return each("z_i'=0", [](const ParamPoint& p, std::size_t i) { return is_zero(p.zprime(i)); });
}
Singularity z_equal() {
  return pairs("z_i=z_j", [](const ParamPoint& p, std::size_t i, std::size_t j) { return p.z(i) == p.z(j); });
}
Singularity one_minus_zprime_z() {
  return pairs("1-z_i'z_j=0",
               [](const ParamPoint& p, std::size_t i, std::size_t j) { return p.zprime(i) * p.z(j) == 1; });
}
Singularity gamma_gamma_denominator() {
  return pairs("1-(q+1)z_j+qz_iz_j=0", [](const ParamPoint& p, std::size_t i, std::size_t j) {
    const auto& q = p.q();
    return is_zero(1 - (q + 1) * p.z(j) + q * p.z(i) * p.z(j));
  });
}
Singularity delta_delta_denominator() {
  return pairs("q-(q+1)z_i'+z_i'z_j'=0", [](const ParamPoint& p, std::size_t i, std::size_t j) {
    const auto& q = p.q();
    return is_zero(q - (q + 1) * p.zprime(i) + p.zprime(i) * p.zprime(j));
  });
}
Singularity gamma_delta_denominator() {
  return pairs("z_iz_j'-1=0",
               [](const ParamPoint& p, std::size_t i, std::size_t j) { return p.z(i) * p.zprime(j) == 1; });
}
Singularity fish_denominator() {
  return pairs(
      "qz_i+z_j'-(q+1)=0",
      [](const ParamPoint& p, std::size_t i, std::size_t j) {
        const auto& q = p.q();
        return is_zero(q * p.z(i) + p.zprime(j) - (q + 1));
      },
      true);
}
Singularity caduceus_denominator() {
  return pairs("z_i+z_j-(q+1)z_iz_j=0", [](const ParamPoint& p, std::size_t i, std::size_t j) {
    return is_zero(p.z(i) + p.z(j) - (p.q() + 1) * p.z(i) * p.z(j));
  });
}
Singularity interchange_fixed_point() {
  return each("1-z_nz_n'=0", [](const ParamPoint& p, std::size_t i) { return p.z(i) * p.zprime(i) == 1; });
}
Singularity u_equal() {
  return pairs("u_i=u_j", [](const ParamPoint& p, std::size_t i, std::size_t j) {
    Rational a, b;
    if (!u_of(p, i, a) || !u_of(p, j, b)) return true;
    return a == b;
  });
}
Singularity u_square_one() {
  return each("u_n^2=1", [](const ParamPoint& p, std::size_t i) {
    Rational u;
    if (!u_of(p, i, u)) return true;
    return u * u == 1;
  });
}
Singularity z_one() {
  return each("z_i=1", [](const ParamPoint& p, std::size_t i) { return p.z(i) == 1; });
}
Singularity normalizer_factor() {
  return each("1-(q+1)z_i+qz_i/z_i'=0", [](const ParamPoint& p, std::size_t i) {
    const auto zp = p.zprime(i);
    if (is_zero(zp)) return true;
    return is_zero(1 - (p.q() + 1) * p.z(i) + p.q() * p.z(i) / zp);
  });
}
Singularity interchange_factor() {
  return each("1-(q+1)/z_i'+qz_i/z_i'=0", [](const ParamPoint& p, std::size_t i) {
    const auto zp = p.zprime(i);
    if (is_zero(zp)) return true;
    return is_zero(1 - (p.q() + 1) / zp + p.q() * p.z(i) / zp);
  });
}

AvoidSet all() {
  return {z_zero(),
          zprime_zero(),
          z_equal(),
          one_minus_zprime_z(),
          gamma_gamma_denominator(),
          delta_delta_denominator(),
          gamma_delta_denominator(),
          fish_denominator(),
          caduceus_denominator(),
          interchange_fixed_point(),
          u_equal(),
          u_square_one(),
          z_one(),
          normalizer_factor(),
          interchange_factor()};
}

}  // namespace singularities

namespace {

mpz_class big(std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); }

Rational draw(CounterRng& rng, std::uint64_t max_int) {
  const auto num = 1 + rng.below(max_int);
  const auto den = 1 + rng.below(max_int);
  Rational r(big(num), big(den));
  r.canonicalize();
  return r;
}

}  // namespace

ParamPoint sample_point(std::size_t n, std::uint64_t seed, const AvoidSet& avoid, const SampleOptions& options) {
  if (n == 0) throw UsageError("sample_point needs n >= 1");
  CounterRng rng(seed, {0x5a4d, n});
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<Rational> z;
    for (std::size_t k = 0; k < n; ++k) z.push_back(draw(rng, options.max_int));
    ParamPoint p(std::move(z), draw(rng, options.max_int));
    bool bad = std::any_of(avoid.begin(), avoid.end(), [&](const Singularity& s) { return s.hits(p); });
    if (!bad) return p;
  }
  throw SamplingError("rejection budget exhausted after " + std::to_string(options.max_attempts) + " attempts");
}

ParamPoint sample_regime_point(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw UsageError("sample_regime_point needs n >= 1");
  CounterRng rng(seed, {0x7e61, n});
  constexpr std::uint64_t grid = 1'000'000;
  Rational q(big(1 + rng.below(2 * grid)), big(grid));
  q.canonicalize();
  const Rational lo = Rational(1) / (q + 1);
  const Rational hi = std::min(Rational(Rational(1) / q), Rational(1));
  std::vector<Rational> z;
  for (std::size_t k = 0; k < n; ++k) {
    Rational t(big(rng.below(grid + 1)), big(grid));
    t.canonicalize();
    z.push_back(lo + (hi - lo) * t);
  }
  return {std::move(z), q};
}

}  // namespace ssice
