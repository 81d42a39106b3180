#pragma once

// SVG rendering of configurations, halving edges, and chain decompositions.
// Output is presentation-only and deterministic: exact coordinates are
// converted once to fixed-precision decimals (round half to even) and no
// result ever feeds back into computation.

#include <halving/chains.hpp>

#include <sstream>
#include <string>

namespace halving {

struct RenderSpec {
  int canvas = 840;
  int margin = 60;
  unsigned decimals = 6;
  Scalar vertex_radius = Scalar(5);
  bool draw_halving = true;
  bool draw_chains = false;
  bool label_vertices = false;
};

namespace detail {

inline constexpr std::array<const char*, 8> kChainPalette{
    "#1b4f9c", "#b03a2e", "#1d8348", "#9a6d00", "#6c3483", "#117a8b", "#a84300", "#4a4a4a"};

}  // namespace detail

/// Renders the configuration as a standalone SVG 1.1 document. Chains (when
/// given) are drawn as polylines with strictly decreasing stroke widths in
/// chain discovery order, the first chain thickest.
inline std::string render_svg(const PointConfig& cfg, const ChainDecomposition* chains,
                              const RenderSpec& spec = {}) {
  Scalar minx = cfg.n() ? cfg[0].x : Scalar(0), maxx = minx;
  Scalar miny = cfg.n() ? cfg[0].y : Scalar(0), maxy = miny;
  for (const Point& p : cfg.points) {
    if (p.x < minx) minx = p.x;
    if (p.x > maxx) maxx = p.x;
    if (p.y < miny) miny = p.y;
    if (p.y > maxy) maxy = p.y;
  }
  Scalar side = maxx - minx;
  if (maxy - miny > side) side = maxy - miny;
  if (side.is_zero()) side = Scalar(1);
  const Scalar scale = Scalar(spec.canvas - 2 * spec.margin) / side;
  // center the shorter axis
  const Scalar offx =
      (Scalar(spec.canvas - 2 * spec.margin) - (maxx - minx) * scale) / 2 + spec.margin;
  const Scalar offy =
      (Scalar(spec.canvas - 2 * spec.margin) - (maxy - miny) * scale) / 2 + spec.margin;

  auto fx = [&](const Point& p) { return format_decimal(offx + (p.x - minx) * scale, spec.decimals); };
  auto fy = [&](const Point& p) {
    return format_decimal(Scalar(spec.canvas) - (offy + (p.y - miny) * scale), spec.decimals);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.canvas << "\" height=\""
      << spec.canvas << "\" viewBox=\"0 0 " << spec.canvas << " " << spec.canvas << "\">\n";
  out << "  <rect width=\"" << spec.canvas << "\" height=\"" << spec.canvas
      << "\" fill=\"#ffffff\"/>\n";

  if (spec.draw_halving) {
    const UnderlyingGeograph g = underlying_geograph(cfg, EnumMethod::rotational_sweep);
    out << "  <g stroke=\"#9aa4ad\" stroke-width=\"1.5\">\n";
    for (auto [i, j] : g.edges)
      out << "    <line x1=\"" << fx(cfg[i]) << "\" y1=\"" << fy(cfg[i]) << "\" x2=\""
          << fx(cfg[j]) << "\" y2=\"" << fy(cfg[j]) << "\"/>\n";
    out << "  </g>\n";
  }

  if (spec.draw_chains && chains != nullptr) {
    const std::size_t m = chains->chains.size();
    out << "  <g fill=\"none\" stroke-linejoin=\"round\">\n";
    for (std::size_t c = 0; c < m; ++c) {
      // widths fall from 6 toward 1.5 with the chain index
      const Scalar width = Scalar(3, 2) + Scalar(9, 2) * Scalar(m - c) / Scalar(m + 1);
      out << "    <polyline stroke=\"" << detail::kChainPalette[c % detail::kChainPalette.size()]
          << "\" stroke-width=\"" << format_decimal(width, 2) << "\" points=\"";
      bool first = true;
      for (int v : chains->chains[c].vertices) {
        if (!first) out << " ";
        first = false;
        out << fx(cfg[v]) << "," << fy(cfg[v]);
      }
      out << "\"/>\n";
    }
    out << "  </g>\n";
  }

  out << "  <g fill=\"#21282e\">\n";
  for (const Point& p : cfg.points)
    out << "    <circle cx=\"" << fx(p) << "\" cy=\"" << fy(p) << "\" r=\""
        << format_decimal(spec.vertex_radius, 2) << "\"/>\n";
  out << "  </g>\n";

  if (spec.label_vertices) {
    out << "  <g font-family=\"sans-serif\" font-size=\"14\" fill=\"#21282e\">\n";
    for (int i = 0; i < cfg.n(); ++i)
      out << "    <text x=\"" << fx(cfg[i]) << "\" y=\"" << fy(cfg[i]) << "\" dx=\"7\" dy=\"-7\">"
          << i << "</text>\n";
    out << "  </g>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace halving
