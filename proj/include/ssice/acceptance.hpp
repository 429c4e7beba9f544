#pragma once

#include "ssice/relations.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ssice::acceptance {

inline constexpr std::size_t kRelationPoints = 20;
inline constexpr std::size_t kColoredYbePoints = 5;
inline constexpr std::size_t kReflectionPoints = 10;
inline constexpr std::size_t kLatticePoints = 10;
inline constexpr std::size_t kOperatorPoints = 20;
inline constexpr std::size_t kRegimePoints = 100;
inline constexpr std::uint64_t kMonteCarloSamples = 100'000;
inline constexpr double kZScoreLimit = 5.0;
inline constexpr double kChiSquareLevel = 0.999;  // quantile the aggregate statistic must stay below
inline constexpr std::uint64_t kLatticeIntRange = 1000;

struct Options {
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;
};

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
  std::vector<RelationFailure> failures;  // first few counterexamples
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult(const Options&)> run;
};

const std::vector<Criterion>& criteria();
CriterionResult run_criterion(const Criterion& c, const Options& options);

// Lattice-level checks reused by `verify`: functional-weyl, closed-form,
// recursion, dl.
std::vector<std::string> functional_check_ids();
RelationReport run_functional_check(const std::string& id, std::size_t points, std::uint64_t seed);

}  // namespace ssice::acceptance
