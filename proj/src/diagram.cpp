#include "ssice/diagram.hpp"

#include "ssice/errors.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace ssice {

std::size_t WiringDiagram::Builder::boundary(std::size_t index) {
  edges_.push_back({index});
  return edges_.size() - 1;
}

std::size_t WiringDiagram::Builder::internal() {
  edges_.push_back({std::nullopt});
  return edges_.size() - 1;
}

WiringDiagram::Builder& WiringDiagram::Builder::node(VertexKind kind, std::vector<std::size_t> params,
                                                     std::vector<std::size_t> slots, Rational scale) {
  nodes_.push_back({kind, std::move(params), std::move(slots), std::move(scale)});
  return *this;
}

WiringDiagram WiringDiagram::Builder::build(std::vector<Label> alphabet) const {
  if (alphabet.empty()) throw ConstructionError("empty alphabet");
  std::vector<int> uses(edges_.size(), 0);
  for (const auto& nd : nodes_) {
    if (nd.slots.size() != arity(nd.kind.family))
      throw ConstructionError("node of kind " + std::string(to_string(nd.kind.family)) + " has " +
                              std::to_string(nd.slots.size()) + " slots");
    if (nd.params.size() != param_count(nd.kind.family))
      throw ConstructionError("node of kind " + std::string(to_string(nd.kind.family)) + " has wrong parameter count");
    for (auto s : nd.slots) {
      if (s >= edges_.size()) throw ConstructionError("slot attached to unknown edge");
      ++uses[s];
    }
  }
  WiringDiagram d;
  d.nodes_ = nodes_;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  d.alphabet_ = std::move(alphabet);
  std::vector<bool> seen_boundary;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& edge = edges_[e];
    d.edge_boundary_.push_back(edge.boundary);
    if (edge.boundary) {
      if (uses[e] != 1) throw ConstructionError("boundary stub " + std::to_string(*edge.boundary) + " is unattached");
      auto b = *edge.boundary;
      if (b >= seen_boundary.size()) seen_boundary.resize(b + 1, false);
      if (seen_boundary[b]) throw ConstructionError("boundary index used twice");
      seen_boundary[b] = true;
    } else {
      if (uses[e] != 2) throw ConstructionError("internal edge " + std::to_string(e) + " needs exactly two slots");
      d.internal_.push_back(e);
    }
  }
  if (std::find(seen_boundary.begin(), seen_boundary.end(), false) != seen_boundary.end())
    throw ConstructionError("boundary indices are not contiguous");
  if (d.internal_.size() > kMaxInternalEdges) throw ConstructionError("too many internal edges");
  d.boundary_size_ = seen_boundary.size();
  return d;
}

DiagramEvaluator::DiagramEvaluator(WiringDiagram d, const ParamPoint& point, const WeightSystem& system)
    : d_(std::move(d)), system_(system), cache_(d_.nodes_.size()), completes_at_(d_.internal_.size()) {
  std::vector<std::size_t> position(d_.edge_boundary_.size(), 0);
  for (std::size_t k = 0; k < d_.internal_.size(); ++k) position[d_.internal_[k]] = k + 1;
  for (std::size_t k = 0; k < d_.nodes_.size(); ++k) {
    const auto& nd = d_.nodes_[k];
    WeightParams wp{{}, point.q()};
    for (auto idx : nd.params) {
      if (idx >= point.n()) throw UsageError("diagram needs more spectral parameters than the point has");
      wp.values.push_back(point.z(idx));
    }
    params_.push_back(std::move(wp));
    std::size_t size = 1;
    for (std::size_t s = 0; s < nd.slots.size(); ++s) size *= d_.alphabet_.size();
    cache_[k].resize(size);
    std::size_t last = 0;
    for (auto s : nd.slots) last = std::max(last, position[s]);
    if (last == 0)
      constant_nodes_.push_back(k);
    else
      completes_at_[last - 1].push_back(k);
  }
}

std::size_t DiagramEvaluator::label_index(Label l) const {
  auto it = std::lower_bound(d_.alphabet_.begin(), d_.alphabet_.end(), l);
  if (it == d_.alphabet_.end() || *it != l) throw UsageError("label " + std::to_string(l) + " not in alphabet");
  return static_cast<std::size_t>(it - d_.alphabet_.begin());
}

Rational DiagramEvaluator::node_weight(std::size_t k, const std::vector<Label>& labels) {
  const auto& nd = d_.nodes_[k];
  std::size_t key = 0;
  Edges e{0, 0, 0, 0};
  for (std::size_t s = 0; s < nd.slots.size(); ++s) {
    e[s] = labels[nd.slots[s]];
    key = key * d_.alphabet_.size() + label_index(e[s]);
  }
  auto& slot = cache_[k][key];
  if (!slot) slot = nd.scale * system_.weight(nd.kind, e, params_[k]);
  return *slot;
}

Rational DiagramEvaluator::operator()(const std::vector<Label>& boundary) {
  if (boundary.size() != d_.boundary_size_)
    throw UsageError("boundary has " + std::to_string(boundary.size()) + " labels, diagram expects " +
                     std::to_string(d_.boundary_size_));
  std::vector<Label> labels(d_.edge_boundary_.size(), 0);
  for (std::size_t e = 0; e < labels.size(); ++e)
    if (auto b = d_.edge_boundary_[e]) labels[e] = boundary[*b];

  Rational prefix = 1;
  for (auto k : constant_nodes_) prefix *= node_weight(k, labels);
  if (is_zero(prefix)) return 0;

  Rational total = 0;
  std::function<void(std::size_t, const Rational&)> dfs = [&](std::size_t pos, const Rational& acc) {
    if (pos == d_.internal_.size()) {
      total += acc;
      return;
    }
    for (Label l : d_.alphabet_) {
      labels[d_.internal_[pos]] = l;
      Rational w = acc;
      for (auto k : completes_at_[pos]) {
        w *= node_weight(k, labels);
        if (is_zero(w)) break;
      }
      if (!is_zero(w)) dfs(pos + 1, w);
    }
  };
  dfs(0, prefix);
  return total;
}

Rational evaluate(const WiringDiagram& d, const std::vector<Label>& boundary, const ParamPoint& point,
                  const WeightSystem& system) {
  return DiagramEvaluator(d, point, system)(boundary);
}

namespace diagrams {

namespace {
constexpr Model kUncolored = Model::UncoloredReflecting;
}

WiringDiagram ybe_left(VertexKind s, VertexKind t, VertexKind r, std::vector<Label> alphabet) {
  WiringDiagram::Builder b;
  auto a = b.boundary(0), bb = b.boundary(1), c = b.boundary(2), d = b.boundary(3), e = b.boundary(4),
       f = b.boundary(5);
  auto g = b.internal(), i = b.internal(), h = b.internal();
  b.node(r, {0, 1}, {a, bb, g, i});
  b.node(s, {0}, {g, c, d, h});
  b.node(t, {1}, {i, h, e, f});
  return b.build(std::move(alphabet));
}

WiringDiagram ybe_right(VertexKind s, VertexKind t, VertexKind r, std::vector<Label> alphabet) {
  WiringDiagram::Builder b;
  auto a = b.boundary(0), bb = b.boundary(1), c = b.boundary(2), d = b.boundary(3), e = b.boundary(4),
       f = b.boundary(5);
  auto j = b.internal(), k = b.internal(), l = b.internal();
  b.node(t, {1}, {bb, c, j, k});
  b.node(s, {0}, {a, k, l, f});
  b.node(r, {0, 1}, {l, j, d, e});
  return b.build(std::move(alphabet));
}

WiringDiagram caduceus_braid(Model cap_model) {
  WiringDiagram::Builder b;
  auto e1 = b.boundary(0), e2 = b.boundary(1), e3 = b.boundary(2), e4 = b.boundary(3);
  auto da = b.internal(), db = b.internal(), u_top = b.internal(), ac = b.internal(), bc = b.internal(),
       l_bot = b.internal(), u_bot = b.internal(), l_top = b.internal();
  b.node({Family::RGammaDelta, kUncolored}, {0, 1}, {e3, e2, da, db});
  b.node({Family::RGammaGamma, kUncolored}, {0, 1}, {da, e1, u_top, ac});
  b.node({Family::RDeltaDelta, kUncolored}, {0, 1}, {e4, db, bc, l_bot});
  b.node({Family::RDeltaGamma, kUncolored}, {0, 1}, {bc, ac, u_bot, l_top});
  b.node({cap_family(cap_model), cap_model}, {}, {u_top, u_bot});
  b.node({cap_family(cap_model), cap_model}, {}, {l_top, l_bot});
  return b.build({kPlus, kMinus});
}

WiringDiagram caduceus_caps(Model cap_model) {
  WiringDiagram::Builder b;
  auto e1 = b.boundary(0), e2 = b.boundary(1), e3 = b.boundary(2), e4 = b.boundary(3);
  b.node({cap_family(cap_model), cap_model}, {}, {e1, e2});
  b.node({cap_family(cap_model), cap_model}, {}, {e3, e4});
  return b.build({kPlus, kMinus});
}

WiringDiagram fish_braid(Family cap) {
  WiringDiagram::Builder b;
  auto e1 = b.boundary(0), e2 = b.boundary(1);
  auto t = b.internal(), bot = b.internal();
  b.node({Family::RFish, kUncolored}, {0}, {e2, e1, t, bot});
  b.node({cap, kUncolored}, {}, {t, bot});
  return b.build({kPlus, kMinus});
}

WiringDiagram fish_cap(Family cap) {
  WiringDiagram::Builder b;
  auto e1 = b.boundary(0), e2 = b.boundary(1);
  b.node({cap, kUncolored}, {}, {e1, e2});
  return b.build({kPlus, kMinus});
}

WiringDiagram reflection_left(Model model, std::vector<Label> alphabet) {
  WiringDiagram::Builder b;
  auto e1 = b.boundary(0), e2 = b.boundary(1), e3 = b.boundary(2), e4 = b.boundary(3);
  auto x = b.internal(), u_top = b.internal(), u_bot = b.internal(), l_top = b.internal();
  const VertexKind cap{cap_family(model), model};
  b.node({Family::RGammaGamma, model}, {0, 1}, {e2, e1, u_top, x});
  b.node({Family::RDeltaGamma, model}, {0, 1}, {e3, x, u_bot, l_top});
  b.node(cap, {}, {u_top, u_bot});
  b.node(cap, {}, {l_top, e4});
  return b.build(std::move(alphabet));
}

WiringDiagram reflection_right(Model model, std::vector<Label> alphabet) {
  WiringDiagram::Builder b;
  auto e1 = b.boundary(0), e2 = b.boundary(1), e3 = b.boundary(2), e4 = b.boundary(3);
  auto y = b.internal(), l_bot = b.internal(), u_bot = b.internal(), l_top = b.internal();
  const VertexKind cap{cap_family(model), model};
  b.node({Family::RDeltaDelta, model}, {1, 0}, {e4, e3, y, l_bot});
  b.node({Family::RDeltaGamma, model}, {1, 0}, {y, e2, u_bot, l_top});
  b.node(cap, {}, {e1, u_bot});
  b.node(cap, {}, {l_top, l_bot});
  return b.build(std::move(alphabet));
}

}  // namespace diagrams

}  // namespace ssice
