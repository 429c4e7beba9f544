#pragma once

#include <stdexcept>
#include <string>

namespace ssice {

// Bad arguments to an operation (wrong arity, unknown format, violated hypothesis).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Value outside the domain of a formula, e.g. z = 0 in z' = q + 1 - 1/z.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Random point generation gave up, or a supplied point hits a registered singularity.
struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A denominator vanished while evaluating an operator.
struct SingularityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Lattice specification violates its invariants.
struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed wiring diagram.
struct ConstructionError : std::logic_error {
  using std::logic_error::logic_error;
};

// Sampler produced an outcome the exact law says is impossible.
struct SoundnessError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ssice
