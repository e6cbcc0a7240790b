#include "ratvar/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

namespace ratvar {

namespace {

const char* const kPalette[] = {"#1f4e9c", "#b23a2e", "#2d7d46", "#8a5a00", "#6b3fa0", "#00727a"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

void write_lemniscate_svg(std::ostream& os, const RationalFunction& r, const Window& window,
                          std::span<const double> levels, std::size_t resolution) {
  const double size = 600.0;
  const double w = window.hi.real() - window.lo.real(), h = window.hi.imag() - window.lo.imag();
  const double s = size / std::max(w, h);
  auto px = [&](Complex z) { return fmt((z.real() - window.lo.real()) * s); };
  auto py = [&](Complex z) { return fmt((window.hi.imag() - z.imag()) * s); };
  auto inside = [&](Complex z) { return window.contains(z); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w * s) << "\" height=\"" << fmt(h * s)
     << "\" viewBox=\"0 0 " << fmt(w * s) << ' ' << fmt(h * s) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const Complex o{0.0, 0.0};
  if (window.lo.imag() < 0.0 && window.hi.imag() > 0.0)
    os << "<line x1=\"0\" y1=\"" << py(o) << "\" x2=\"" << fmt(w * s) << "\" y2=\"" << py(o)
       << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
  if (window.lo.real() < 0.0 && window.hi.real() > 0.0)
    os << "<line x1=\"" << px(o) << "\" y1=\"0\" x2=\"" << px(o) << "\" y2=\"" << fmt(h * s)
       << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";

  const GridField field = level_grid(r, window, resolution, resolution);
  for (std::size_t k = 0; k < levels.size(); ++k) {
    os << "<g fill=\"none\" stroke=\"" << kPalette[k % std::size(kPalette)] << "\" stroke-width=\"1.2\" data-level=\""
       << levels[k] << "\">\n";
    for (const auto& line : level_polylines(field, levels[k])) {
      os << "<polyline points=\"";
      for (std::size_t i = 0; i < line.size(); ++i) os << (i ? " " : "") << px(line[i]) << ',' << py(line[i]);
      os << "\"/>\n";
    }
    os << "</g>\n";
  }
  for (Complex z : r.lambdas())
    if (inside(z)) os << "<circle cx=\"" << px(z) << "\" cy=\"" << py(z) << "\" r=\"3\" fill=\"black\"/>\n";
  if (r.q().degree().value_or(0) > 0)
    for (Complex z : poly_roots(r.q()))
      if (inside(z))
        os << "<circle cx=\"" << px(z) << "\" cy=\"" << py(z)
           << "\" r=\"4\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
  os << "</svg>\n";
}

}  // namespace ratvar
