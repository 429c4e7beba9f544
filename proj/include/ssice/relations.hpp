#pragma once

#include "ssice/diagram.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ssice {

struct RelationFailure {
  ParamPoint point;
  std::vector<Label> boundary;
  Rational lhs, rhs;
  std::string note;  // instance description for lattice-level checks
};

struct RelationReport {
  std::string id;
  std::size_t points_tested = 0;
  std::size_t boundaries_tested = 0;
  std::vector<RelationFailure> failures;

  bool pass() const { return failures.empty(); }
  RelationReport& merge(const RelationReport& other);
};

enum class Side { Gamma, Delta };

struct RelationOptions {
  WeightSystem system = WeightSystem::standard();
  unsigned jobs = 1;
  bool paranoid = false;  // widen the color-reduction alphabet by one label
};

// Compares factor * Z(right) with Z(left) over every boundary in alphabet^k.
RelationReport compare_diagrams(std::string id, const WiringDiagram& left, const WiringDiagram& right,
                                const Rational& factor, const ParamPoint& point, const RelationOptions& options);

RelationReport verify_ybe_uncolored(Side x, Side y, const ParamPoint& point, const RelationOptions& options = {});
RelationReport verify_ybe_lemma(const Rational& t1, const Rational& t2, const Rational& q,
                                const RelationOptions& options = {});
RelationReport verify_caduceus(const ParamPoint& point, Model cap, const RelationOptions& options = {});
RelationReport verify_fish(const ParamPoint& point, Model cap, const RelationOptions& options = {});
RelationReport verify_ybe_colored(Model model, Side x, Side y, const ParamPoint& point,
                                  const RelationOptions& options = {});
RelationReport verify_reflection(Model model, const ParamPoint& point, const RelationOptions& options = {});

Rational caduceus_factor(const ParamPoint& point);       // L(z, q, i) with (z_i, z_j) = (z_1, z_2)
Rational fish_factor(const ParamPoint& point, Model cap);  // uses z_n = z_1

std::vector<Label> ybe_alphabet(Model model, bool paranoid);
std::vector<Label> reflection_alphabet(Model model, bool paranoid);

// Named local relations, each checked at `points` seeded random points.
std::vector<std::string> relation_ids();
bool is_relation_id(const std::string& id);
RelationReport run_relation(const std::string& id, std::size_t points, std::uint64_t seed,
                            const RelationOptions& options = {});

}  // namespace ssice
