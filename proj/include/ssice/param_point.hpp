#pragma once

#include "ssice/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ssice {

Rational zprime(const Rational& z, const Rational& q);

// Spectral parameters z_1..z_n (stored 0-based) and deformation q.
class ParamPoint {
 public:
  ParamPoint(std::vector<Rational> z, Rational q);

  std::size_t n() const { return z_.size(); }
  const Rational& z(std::size_t k) const { return z_[k]; }
  const std::vector<Rational>& zs() const { return z_; }
  const Rational& q() const { return q_; }
  Rational zprime(std::size_t k) const { return ssice::zprime(z_[k], q_); }

  ParamPoint with_z(std::size_t k, Rational value) const;
  ParamPoint swapped(std::size_t a, std::size_t b) const;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;

 private:
  std::vector<Rational> z_;
  Rational q_;
};

std::string to_string(const ParamPoint& p);

bool in_stochastic_regime(const ParamPoint& point);

// A named condition under which a point is rejected by sample_point.
struct Singularity {
  std::string name;
  std::function<bool(const ParamPoint&)> hits;
};
using AvoidSet = std::vector<Singularity>;

namespace singularities {
Singularity z_zero();
Singularity zprime_zero();
Singularity z_equal();
Singularity one_minus_zprime_z();         // 1 - z_i' z_j
Singularity gamma_gamma_denominator();    // 1 - (q+1) z_j + q z_i z_j
Singularity delta_delta_denominator();    // q - (q+1) z_i' + z_i' z_j'
Singularity gamma_delta_denominator();    // z_i z_j' - 1
Singularity fish_denominator();           // q z_i + z_j' - (q+1), i = j allowed
Singularity caduceus_denominator();       // z_i + z_j - (q+1) z_i z_j
Singularity interchange_fixed_point();    // 1 - z_n z_n'
Singularity u_equal();                    // u_i = u_{i+1}
Singularity u_square_one();               // u_n^2 = 1
Singularity z_one();                      // u_i undefined
Singularity normalizer_factor();          // 1 - (q+1) z_i + q z_i / z_i'
Singularity interchange_factor();         // 1 - (q+1)/z_i' + q z_i / z_i'
AvoidSet all();
}  // namespace singularities

struct SampleOptions {
  std::uint64_t max_int = 1'000'000;  // numerators and denominators drawn from 1..max_int
  int max_attempts = 10'000;
};

ParamPoint sample_point(std::size_t n, std::uint64_t seed, const AvoidSet& avoid,
                        const SampleOptions& options = {});

// Random point inside the stochastic regime with q in (0, 2].
ParamPoint sample_regime_point(std::size_t n, std::uint64_t seed);

}  // namespace ssice
