#pragma once

#include "ssice/param_point.hpp"
#include "ssice/weights.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ssice {

inline constexpr std::size_t kMaxInternalEdges = 12;

// Nodes reference spectral parameters by index into the evaluation point.
struct DiagramNode {
  VertexKind kind;
  std::vector<std::size_t> params;
  std::vector<std::size_t> slots;  // edge ids, arity(kind.family) of them
  Rational scale = 1;
};

class WiringDiagram {
 public:
  class Builder {
   public:
    std::size_t boundary(std::size_t index);
    std::size_t internal();
    Builder& node(VertexKind kind, std::vector<std::size_t> params, std::vector<std::size_t> slots,
                  Rational scale = 1);
    WiringDiagram build(std::vector<Label> alphabet) const;

   private:
    struct Edge {
      std::optional<std::size_t> boundary;
    };
    std::vector<Edge> edges_;
    std::vector<DiagramNode> nodes_;
  };

  const std::vector<DiagramNode>& nodes() const { return nodes_; }
  const std::vector<Label>& alphabet() const { return alphabet_; }
  std::size_t boundary_size() const { return boundary_size_; }
  std::size_t internal_count() const { return internal_.size(); }

 private:
  friend class DiagramEvaluator;
  std::vector<DiagramNode> nodes_;
  std::vector<Label> alphabet_;
  std::size_t boundary_size_ = 0;
  // edge id -> boundary index or internal position
  std::vector<std::optional<std::size_t>> edge_boundary_;
  std::vector<std::size_t> internal_;  // edge ids of internal edges, in summation order
};

// Caches node weight tables for one point so sweeps over many boundaries stay cheap.
class DiagramEvaluator {
 public:
  DiagramEvaluator(WiringDiagram d, const ParamPoint& point,
                   const WeightSystem& system = WeightSystem::standard());

  Rational operator()(const std::vector<Label>& boundary);

 private:
  Rational node_weight(std::size_t k, const std::vector<Label>& edge_labels);
  std::size_t label_index(Label l) const;

  WiringDiagram d_;
  WeightSystem system_;
  std::vector<WeightParams> params_;
  std::vector<std::vector<std::optional<Rational>>> cache_;
  std::vector<std::vector<std::size_t>> completes_at_;  // internal position -> nodes completed there
  std::vector<std::size_t> constant_nodes_;
};

Rational evaluate(const WiringDiagram& d, const std::vector<Label>& boundary, const ParamPoint& point,
                  const WeightSystem& system = WeightSystem::standard());

// Named configurations. Boundary order is documented per builder.
namespace diagrams {

// Yang-Baxter sides with boundary (a, b, c, d, e, f): a, b enter on the left
// (bottom, top strand), c on top, d, e on the right (top, bottom), f at the
// bottom. S uses z_1, T uses z_2, R uses (z_1, z_2).
WiringDiagram ybe_left(VertexKind s, VertexKind t, VertexKind r, std::vector<Label> alphabet);
WiringDiagram ybe_right(VertexKind s, VertexKind t, VertexKind r, std::vector<Label> alphabet);

// Caduceus braid and bare caps; boundary (e1, e2, e3, e4) from top to bottom.
WiringDiagram caduceus_braid(Model cap_model);
WiringDiagram caduceus_caps(Model cap_model);

// Fish: R_Fish against a cap, and the bare cap; boundary (e1, e2) top to bottom.
WiringDiagram fish_braid(Family cap);
WiringDiagram fish_cap(Family cap);

// Reflection sides for a colored model; boundary (e1..e4) top to bottom.
WiringDiagram reflection_left(Model model, std::vector<Label> alphabet);
WiringDiagram reflection_right(Model model, std::vector<Label> alphabet);

}  // namespace diagrams

}  // namespace ssice
