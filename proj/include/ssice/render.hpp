#pragma once

#include "ssice/lattice.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ssice {

enum class RenderFormat { Ascii, Svg };

RenderFormat parse_render_format(std::string_view s);  // throws UsageError

// A strand is the path of one non-+ label. Points are (x, y) in lattice units:
// x = L - c + 1 for column c (cap side at x = L + 1/2), y = 2n - r + 1 for row r.
struct Strand {
  Label label;  // label at the start
  std::vector<std::pair<double, double>> points;
  enum class End { Bottom, Absorbed, Escaped } end;
};

std::vector<Strand> trace_strands(const LatticeSpec& spec, const Configuration& config);

std::string render_state(const LatticeSpec& spec, const Configuration& config, RenderFormat format);

// Glyph for a label in the ascii rendering: "+" for 0, "-" for the uncolored
// minus, otherwise the signed color index.
std::string label_glyph(Model model, Label l);

}  // namespace ssice
