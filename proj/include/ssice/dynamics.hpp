#pragma once

#include "ssice/lattice.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace ssice {

struct SamplerConfig {
  LatticeSpec spec;  // lambda and tau are ignored; the left boundary drives the sample
  std::uint64_t seed = 0;
  std::uint64_t num_samples = 0;
};

// Bottom result of one sample. Particles are listed left to right: lambda_i
// and the color tau_i of the i-th one (colors empty for uncolored models).
struct Outcome {
  bool escaped = false;
  Partition lambda;
  std::vector<int> colors;

  static Outcome escape() { return {true, {}, {}}; }
  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend auto operator<=>(const Outcome&, const Outcome&) = default;
};

Outcome outcome_of(const LatticeSpec& spec);
Outcome outcome_from_bottom(const Configuration& config, Model model);
std::string to_string(const Outcome& o);

struct SampleResult {
  Configuration config;
  Outcome outcome;
  std::optional<Rational> probability;  // product of the conditional probabilities used
};

// The conditional laws of every row, precomputed once per spec.
class Sampler {
 public:
  explicit Sampler(const LatticeSpec& spec);

  SampleResult sample(std::uint64_t seed, std::uint64_t index, bool track_probability = false) const;
  // Every computational path with its exact probability (no randomness).
  std::map<Outcome, Rational> exhaustive_distribution() const;

 private:
  struct Choice {
    Label out0, out1;
    Rational p;
    std::uint64_t threshold;  // take this choice when the draw is below it
  };
  const std::vector<Choice>& law(int row, Label in0, Label in1) const;

  LatticeSpec spec_;
  std::vector<Label> alphabet_;
  std::vector<Label> left_gamma_;
  std::vector<std::vector<std::vector<Choice>>> laws_;  // [row-1][in0 * a + in1]
  std::vector<Label> cap_map_;                         // [index(top)] -> bottom
  std::size_t index(Label l) const;
};

SampleResult sample_configuration(const SamplerConfig& config, std::uint64_t index, bool track_probability = false);

struct Trajectory {
  // positions[t]: (column, label) of occupied vertical edges crossed at time t.
  std::vector<std::vector<std::pair<int, Label>>> positions;
};

Trajectory trajectory_from_configuration(const Configuration& config);

struct SampleSummary {
  std::map<Outcome, std::uint64_t> histogram;  // non-escaping outcomes
  std::uint64_t escape_count = 0;
  std::uint64_t num_samples = 0;

  SampleSummary& merge(const SampleSummary& other);
};

SampleSummary summarize(const SamplerConfig& config, unsigned jobs = 1);

// Exact law of the bottom outcome; the escape probability is 1 - sum.
std::map<Outcome, Rational> exact_outcome_probabilities(const LatticeSpec& spec);

struct OutcomeStatistic {
  Outcome outcome;
  std::uint64_t count;
  Rational exact;
  double empirical;
  double z_score;
};

struct StatisticsReport {
  std::vector<OutcomeStatistic> outcomes;  // escape bucket last when present
  double chi_square = 0;
  int degrees_of_freedom = 0;
  double chi_square_quantile = 0;  // `level` quantile of chi-square(dof)
  double max_z = 0;
  bool pass(double z_limit = 5.0) const;
};

// Categories with expected count below 5 are pooled into one bucket for the
// chi-square statistic; dof = buckets - 1. Throws SoundnessError when an
// outcome with exact probability 0 was observed.
StatisticsReport compare_empirical_to_exact(const SampleSummary& summary, const std::map<Outcome, Rational>& exact,
                                            double level = 0.999);

}  // namespace ssice
