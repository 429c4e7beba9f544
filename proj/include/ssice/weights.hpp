#pragma once

#include "ssice/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ssice {

// 0 is "+". Colors c_a are the integers a in [-n, n] with their natural order.
// The uncolored "-" spin is kMinus = 1: in the uncolored tables it behaves as
// the larger of the two labels.
using Label = int;
inline constexpr Label kPlus = 0;
inline constexpr Label kMinus = 1;

enum class Model { UncoloredReflecting, UncoloredAbsorbing, ColoredSigned, ColoredPositive };

enum class Family {
  Gamma,
  Delta,
  CapReflecting,
  CapAbsorbing,
  CapColoredSigned,
  CapColoredPositive,
  RGammaGamma,
  RDeltaGamma,
  RDeltaDelta,
  RGammaDelta,
  RLemma,
  RFish,
  LemmaS,
  LemmaT,
};

struct VertexKind {
  Family family;
  Model model;
  friend bool operator==(const VertexKind&, const VertexKind&) = default;
};

// Ordinary vertices: (left, top, right, bottom). R-vertices: (bl, tl, tr, br).
// Caps use the first two entries as (top, bottom).
using Edges = std::array<Label, 4>;

// values: (z) for Gamma/Delta, (z_i, z_j) for R-matrices, (z_n) for RFish,
// (t1) for LemmaS, (t2) for LemmaT, (t1, t2) for RLemma, empty for caps.
struct WeightParams {
  std::vector<Rational> values;
  Rational q;
};

std::string_view to_string(Model m);
std::string_view to_string(Family f);
std::optional<Model> parse_model(std::string_view s);
std::optional<Family> parse_family(std::string_view s);

bool is_colored(Model m);
bool is_cap(Family f);
std::size_t arity(Family f);        // number of edge slots: 2 for caps, 4 otherwise
std::size_t param_count(Family f);  // expected WeightParams::values size
Family cap_family(Model m);

// Label alphabet a model uses on a lattice with n row pairs.
std::vector<Label> model_alphabet(Model m, int n);

class WeightSystem {
 public:
  static WeightSystem standard() { return WeightSystem{}; }
  // Test fixture: the b1 entry of `family` is shifted by `delta`.
  static WeightSystem corrupted(Family family, Rational delta);

  Rational weight(VertexKind kind, const Edges& e, const WeightParams& p) const;
  bool is_corrupted() const { return corruption_.has_value(); }

 private:
  struct Corruption {
    Family family;
    Rational delta;
  };
  std::optional<Corruption> corruption_;
};

Rational vertex_weight(const WeightSystem& system, VertexKind kind, const Edges& e, const WeightParams& p);
Rational vertex_weight(VertexKind kind, const Edges& e, const WeightParams& p);

Rational cap_weight(Model model, Label top, Label bottom);

// Sum of weights over all output completions in `alphabet` for the given
// inputs. Inputs: Gamma (left, top); Delta (right, top); caps (top, ignored);
// RGammaGamma (bl, tl); RDeltaDelta (tr, br); RDeltaGamma (tr, tl).
Rational stochastic_row_check(const WeightSystem& system, VertexKind kind, std::array<Label, 2> inputs,
                              const WeightParams& p, const std::vector<Label>& alphabet);

// Denominator of an R-matrix kind; zero means the table is undefined.
Rational r_denominator(Family f, const WeightParams& p);

}  // namespace ssice
