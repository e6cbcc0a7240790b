#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ratvar/ratfun.hpp"

namespace ratvar {

struct Window {
  Complex lo;  // lower-left corner
  Complex hi;  // upper-right corner

  static Window square(double half_width, Complex centre = 0.0);
  double diameter() const { return std::abs(hi - lo); }
  bool contains(Complex z) const;
};

// Square window about `centre` outside of which |r| > level.
Window enclosing_window(const RationalFunction& r, double level, double margin = 1.15, Complex centre = 0.0);

// |r| sampled on a regular grid, row-major with x fastest; +inf at poles.
class GridField {
 public:
  GridField(Window window, std::size_t nx, std::size_t ny, std::vector<double> values);

  const Window& window() const { return window_; }
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  double dx() const;
  double dy() const;
  Complex point(std::size_t i, std::size_t j) const;
  double at(std::size_t i, std::size_t j) const { return values_[j * nx_ + i]; }
  const std::vector<double>& values() const { return values_; }
  // Nearest grid node to z, clamped to the window.
  std::pair<std::size_t, std::size_t> nearest(Complex z) const;
  // Header x,y,absr; rows in storage order.
  void write_csv(std::ostream& os) const;

 private:
  Window window_;
  std::size_t nx_, ny_;
  std::vector<double> values_;
};

GridField level_grid(const RationalFunction& r, const Window& window, std::size_t nx, std::size_t ny);

// 4-connected components of grid nodes with |r| < level.
class SublevelComponents {
 public:
  SublevelComponents(const GridField& field, std::vector<int> labels, std::size_t count);

  std::size_t count() const { return count_; }
  int label(std::size_t i, std::size_t j) const { return labels_[j * nx_ + i]; }
  const std::vector<int>& labels() const { return labels_; }
  // Label of the grid node nearest z, -1 if that node is not in the sublevel set.
  int component_of(Complex z) const;
  // Grid points of component c.
  std::vector<Complex> samples(std::size_t c) const;

 private:
  Window window_;
  std::size_t nx_, ny_;
  std::vector<int> labels_;
  std::size_t count_;
};

SublevelComponents sublevel_components(const GridField& field, double level);

// Grid-resolution level polylines (open where they leave the window), for plotting.
std::vector<std::vector<Complex>> level_polylines(const GridField& field, double level);

struct ContourLoop {
  std::vector<Complex> vertices;  // closed, front() == back()
  int turns = 0;                  // winding number of r along the loop
  std::size_t component = 0;
  std::vector<Complex> nodes;  // trapezoid nodes, equispaced in arg r
  std::vector<Complex> dz;     // weights for the integral of f dλ
  std::vector<double> ds;      // weights for the integral of f |dλ|
};

// Winding number of a closed polyline around z.
int winding_number(std::span<const Complex> closed, Complex z);

// Level curve |r| = level, oriented with |r| < level on the left.
class Contour {
 public:
  Contour(RationalFunction r, double level, std::vector<ContourLoop> loops, std::size_t components);

  const RationalFunction& r() const { return r_; }
  double level() const { return level_; }
  const std::vector<ContourLoop>& loops() const { return loops_; }
  std::vector<ContourLoop>& loops() { return loops_; }
  std::size_t component_count() const { return components_; }
  // Indices j of the roots λ_j enclosed by component c.
  const std::vector<std::size_t>& component_roots(std::size_t c) const { return roots_[c]; }
  // Component whose loops wind once around z, or -1.
  int component_containing(Complex z) const;
  // Component holding λ_j.
  std::size_t component_of_root(std::size_t j) const;

 private:
  RationalFunction r_;
  double level_;
  std::vector<ContourLoop> loops_;
  std::size_t components_;
  std::vector<std::vector<std::size_t>> roots_;
};

struct TraceOptions {
  std::size_t nx = 401;
  std::size_t ny = 401;
  // Minimum distance from vertices to critical points; <= 0 means 1e-3 times the window diameter.
  double clearance = -1.0;
  std::size_t nodes_per_turn = 64;
};

Contour trace_level_curve(const RationalFunction& r, double rho, const Window& window, double refine_tol = 1e-10,
                          const TraceOptions& options = {});

struct Quadrature {
  std::vector<Complex> nodes;
  std::vector<Complex> dz;
  std::vector<double> ds;
  std::vector<std::size_t> loop;
};

// Fills each loop with nodes_per_turn * turns nodes equispaced in arg r.
void place_nodes(Contour& contour, std::size_t nodes_per_turn);

// Nodes and weights of the selected loops (all loops when empty) at the given density.
Quadrature contour_quadrature(const Contour& contour, std::size_t nodes_per_turn = 64,
                              std::span<const std::size_t> loops = {});

struct SeparationReport {
  double max_inside = 0.0;
  double min_outside = 0.0;
  double level = 1.0;
  bool pass = false;
};

SeparationReport verify_separation(const RationalFunction& r, std::span<const Complex> inside,
                                   std::span<const Complex> outside, double level, double slack = 1e-3);

// r = (1 - (z/R)^n) p0 / q0.
RationalFunction proper_scale(const Polynomial& p0, const Polynomial& q0, double R, unsigned n);
RationalFunction proper_scale(const RationalFunction& r0, double R, unsigned n);

struct FitResult {
  RationalFunction r;
  SeparationReport report;
  bool strong = false;  // max_inside < 1/2 and min_outside > 3/2
};

FitResult fit_separator(std::span<const Complex> inside, std::span<const Complex> outside, std::size_t dp,
                        std::size_t dq, std::size_t iterations = 40);

// Zeros ±a±i, poles 0 and ±ib.
RationalFunction two_segment_family(double a, double b);

// min |r(iy)| over 0 < y <= y_max.
double axis_minimum(const RationalFunction& r, double y_max);

// Largest level at which the grid component holding `reference` stays in x > 0.
double supremum_level(const RationalFunction& r, Complex reference, double spacing = 0.04);

struct SegmentFit {
  double x = 0.0;
  double y = 0.0;
  double angle_deg = 0.0;
};

// Best symmetric vertical segment x = x0, |y| <= y0 inside |r| < level with 0 < x0 <= x_max,
// maximizing y0/x0.
std::optional<SegmentFit> best_segment(const RationalFunction& r, double level, double x_max);

struct TwoSegmentOptions {
  double a_min = 1.0, a_max = 1.8;
  double b_min = 1.1, b_max = 1.9;
  double step = 0.05;
  std::optional<double> level;      // fixed level instead of the supremum
  std::optional<double> angle_deg;  // success threshold; maximize when absent
  double spacing = 0.04;
};

struct TwoSegmentCandidate {
  double a = 0.0, b = 0.0, level = 0.0;
  SegmentFit segment;
};

struct TwoSegmentResult {
  std::optional<TwoSegmentCandidate> best;
  std::vector<TwoSegmentCandidate> sweep;
  bool target_met = false;
};

TwoSegmentResult two_segment_search(const TwoSegmentOptions& options);

}  // namespace ratvar
