#include "ssice/render.hpp"

#include "ssice/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ssice {

RenderFormat parse_render_format(std::string_view s) {
  if (s == "ascii") return RenderFormat::Ascii;
  if (s == "svg") return RenderFormat::Svg;
  throw UsageError("unknown render format '" + std::string(s) + "' (ascii|svg)");
}

std::string label_glyph(Model model, Label l) {
  if (l == kPlus) return "+";
  if (!is_colored(model)) return "-";
  return std::to_string(l);
}

std::vector<Strand> trace_strands(const LatticeSpec& spec, const Configuration& s) {
  const int n = spec.n, L = spec.L;
  auto X = [&](int c) { return static_cast<double>(L - c + 1); };
  auto Y = [&](int r) { return static_cast<double>(2 * n - r + 1); };
  enum class From { Left, Top, Right };
  std::vector<Strand> out;

  auto follow = [&](Strand& st, int r, int c, From from, Label l) {
    for (;;) {
      st.points.push_back({X(c), Y(r)});
      const bool gamma = r % 2 == 0;
      // Outputs: Gamma -> (right, bottom); Delta -> (left, bottom).
      const Label side = gamma ? s.h(r, c - 1) : s.h(r, c);
      const Label down = s.v(r - 1, c);
      bool go_down;
      if (side == l && down == l)
        go_down = from == From::Top;
      else
        go_down = down == l;
      if (go_down) {
        if (r == 1) {
          st.points.push_back({X(c), Y(0) - 0.5});
          st.end = Strand::End::Bottom;
          return;
        }
        r -= 1;
        from = From::Top;
        continue;
      }
      if (gamma) {
        if (c == 1) {
          const Label below = s.h(r - 1, 0);
          st.points.push_back({L + 0.5, Y(r)});
          if (spec.model == Model::UncoloredAbsorbing) {
            st.end = Strand::End::Absorbed;
            return;
          }
          st.points.push_back({L + 0.5, Y(r - 1)});
          r -= 1;
          l = below;
          from = From::Right;
          continue;
        }
        c -= 1;
        from = From::Left;
      } else {
        if (c == L) {
          st.points.push_back({0.5, Y(r)});
          st.end = Strand::End::Escaped;
          return;
        }
        c += 1;
        from = From::Right;
      }
    }
  };

  for (int r = 2 * n; r >= 1; --r) {
    if (r % 2 == 0 && s.h(r, L) != kPlus) {
      Strand st{s.h(r, L), {{0.5, Y(r)}}, Strand::End::Bottom};
      follow(st, r, L, From::Left, s.h(r, L));
      out.push_back(std::move(st));
    }
    if (r % 2 == 1 && spec.model == Model::UncoloredAbsorbing && s.h(r + 1, 0) == kPlus && s.h(r, 0) != kPlus) {
      Strand st{s.h(r, 0), {{L + 0.5, Y(r)}}, Strand::End::Bottom};
      follow(st, r, 1, From::Right, s.h(r, 0));
      out.push_back(std::move(st));
    }
  }
  return out;
}

namespace {

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

std::string ascii(const LatticeSpec& spec, const Configuration& s, std::size_t strands) {
  const int L = spec.L;
  auto g = [&](Label l) { return label_glyph(spec.model, l); };
  std::ostringstream os;
  os << "model " << to_string(spec.model) << "  n=" << spec.n << "  L=" << L << "  lambda=" << to_string(spec.lambda);
  if (is_colored(spec.model)) os << "  sigma=" << to_string(spec.sigma) << "  tau=" << to_string(spec.tau);
  os << "\n";
  auto vertical = [&](int k) {
    std::string line(6, ' ');
    for (int c = L; c >= 1; --c) line += pad(g(s.v(k, c)), 4) + " ";
    return line + "\n";
  };
  std::string header(6, ' ');
  for (int c = L; c >= 1; --c) header += pad("c" + std::to_string(c), 4) + " ";
  os << header << "\n";
  for (int r = 2 * spec.n; r >= 1; --r) {
    os << vertical(r);
    std::string line = "r" + std::to_string(r) + (r % 2 == 0 ? " G" : " D");
    line.resize(std::max<std::size_t>(line.size(), 6), ' ');
    for (int c = L; c >= 1; --c) line += pad(g(s.h(r, c)), 2) + " o ";
    line += pad(g(s.h(r, 0)), 2) + (r % 2 == 0 ? " ." : " '");
    os << line << "\n";
  }
  os << vertical(0);
  os << "strands: " << strands << "\n";
  return os.str();
}

const char* color_for(Label l) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};
  const int k = l < 0 ? -2 * l : 2 * l - 1;
  return palette[static_cast<std::size_t>(k) % 7];
}

std::string svg(const LatticeSpec& spec, const std::vector<Strand>& strands) {
  constexpr double u = 40;
  const int L = spec.L, rows = 2 * spec.n;
  const double width = (L + 2) * u, height = (rows + 1) * u;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (int r = 1; r <= rows; ++r) {
    const double y = (rows - r + 1) * u;
    os << "<line x1=\"" << 0.5 * u << "\" y1=\"" << y << "\" x2=\"" << (L + 0.5) * u << "\" y2=\"" << y << "\"/>\n";
  }
  for (int c = 1; c <= L; ++c) {
    const double x = (L - c + 1) * u;
    os << "<line x1=\"" << x << "\" y1=\"" << 0.5 * u << "\" x2=\"" << x << "\" y2=\"" << (rows + 0.5) * u << "\"/>\n";
  }
  for (int i = 1; i <= spec.n; ++i) {
    const double y1 = (rows - 2 * i + 1) * u, y2 = (rows - 2 * i + 2) * u;
    os << "<line x1=\"" << (L + 0.5) * u << "\" y1=\"" << y1 << "\" x2=\"" << (L + 0.5) * u << "\" y2=\"" << y2
       << "\"/>\n";
  }
  os << "</g>\n";
  for (const auto& st : strands) {
    os << "<path fill=\"none\" stroke-width=\"3\" stroke=\"" << color_for(st.label) << "\" d=\"";
    for (std::size_t k = 0; k < st.points.size(); ++k)
      os << (k ? " L " : "M ") << st.points[k].first * u << " " << st.points[k].second * u;
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_state(const LatticeSpec& spec, const Configuration& config, RenderFormat format) {
  const auto strands = trace_strands(spec, config);
  return format == RenderFormat::Ascii ? ascii(spec, config, strands.size()) : svg(spec, strands);
}

}  // namespace ssice
