#pragma once

#include "ssice/param_point.hpp"
#include "ssice/signed_permutation.hpp"
#include "ssice/weights.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace ssice {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, nonnegative

  int length() const { return static_cast<int>(parts.size()); }
  int largest() const { return parts.empty() ? 0 : parts.front(); }
  bool valid() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

Partition parse_partition(std::string_view text);
std::string to_string(const Partition& p);

// Weakly decreasing sequences of exactly `len` parts in [0, max_part].
std::vector<Partition> partitions_in_box(int len, int max_part);

// Rows 1..2n bottom to top: row 2i is Gamma, row 2i-1 is Delta, both with z_i.
// Columns 1..L right to left. sigma/tau are ignored by the uncolored models.
struct LatticeSpec {
  Model model;
  int n;
  int L;
  Partition lambda;
  SignedPermutation sigma;
  SignedPermutation tau;
  ParamPoint point;

  LatticeSpec(Model model, int L, Partition lambda, ParamPoint point);
  LatticeSpec(Model model, int L, Partition lambda, SignedPermutation sigma, SignedPermutation tau,
              ParamPoint point);

  void validate() const;  // throws SpecError
  LatticeSpec with_point(ParamPoint p) const;
  LatticeSpec with_sigma(SignedPermutation s) const;
};

struct BoundaryLabels {
  std::vector<Label> left_gamma;  // [i-1]: label entering Gamma row 2i
  std::vector<Label> bottom;      // [c-1]: label on the bottom edge of column c
};

BoundaryLabels boundary_assignment(const LatticeSpec& spec);

// Edge labels of a full lattice. h(r, p) is the horizontal edge of row r at
// position p: p = L is the left boundary, p = 0 the cap side; the vertex in
// column c sits between h(r, c) (left) and h(r, c-1) (right). v(k, c) is the
// vertical edge of column c between rows k and k+1: k = 0 is the bottom
// boundary, k = 2n the top.
class Configuration {
 public:
  Configuration(int n, int L);

  int n() const { return n_; }
  int L() const { return L_; }
  Label& h(int r, int p) { return h_[static_cast<std::size_t>((r - 1) * (L_ + 1) + p)]; }
  Label h(int r, int p) const { return h_[static_cast<std::size_t>((r - 1) * (L_ + 1) + p)]; }
  Label& v(int k, int c) { return v_[static_cast<std::size_t>(k * L_ + c - 1)]; }
  Label v(int k, int c) const { return v_[static_cast<std::size_t>(k * L_ + c - 1)]; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  int n_, L_;
  std::vector<Label> h_, v_;
};

// Lazily cached vertex and cap weights for the rows of one spec.
class RowWeights {
 public:
  RowWeights(const LatticeSpec& spec, const WeightSystem& system = WeightSystem::standard());

  const Rational& vertex(int row, const Edges& e);
  const Rational& cap(Label top, Label bottom);
  const std::vector<Label>& alphabet() const { return alphabet_; }
  std::size_t index(Label l) const;
  VertexKind kind(int row) const;

 private:
  Model model_;
  std::vector<Label> alphabet_;
  WeightSystem system_;
  std::vector<WeightParams> params_;  // per row
  std::vector<std::vector<std::optional<Rational>>> vertex_cache_;
  std::vector<std::optional<Rational>> cap_cache_;
};

Rational configuration_weight(const LatticeSpec& spec, const Configuration& config,
                              const WeightSystem& system = WeightSystem::standard());

using StateVisitor = std::function<void(const Configuration&, const Rational&)>;

void enumerate_states(const LatticeSpec& spec, const StateVisitor& visit,
                      const WeightSystem& system = WeightSystem::standard());

Rational partition_function(const LatticeSpec& spec, const WeightSystem& system = WeightSystem::standard());

// Column transfer sweep; falls back to enumeration when the dense state would
// exceed kTransferStateLimit entries.
inline constexpr std::size_t kTransferStateLimit = 1'000'000;
Rational partition_function_transfer(const LatticeSpec& spec,
                                     const WeightSystem& system = WeightSystem::standard());

// All bottom outcomes a spec's left boundary could produce: every lambda (and
// tau for colored models) with the same model, n, L, sigma and point.
std::vector<LatticeSpec> all_outcome_specs(const LatticeSpec& base);

}  // namespace ssice
