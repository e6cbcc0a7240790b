#include "ratvar/lemniscape.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <ostream>

namespace ratvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

double abs_r(const RationalFunction& r, Complex z) {
  if (r.is_pole(z)) return kInf;
  return std::abs(r.p()(z) / r.q()(z));
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Marching squares over a node field. inside[n] marks nodes below the level.
struct Segment {
  std::size_t from_edge;
  std::size_t to_edge;
  std::size_t ref_node;  // an inside node adjacent to the segment
};

struct March {
  std::vector<Segment> segments;
  std::map<std::size_t, Complex> crossing;  // edge id -> vertex
  std::vector<std::pair<std::size_t, std::size_t>> diagonal_links;
};

struct GridGeometry {
  Window window;
  std::size_t nx, ny;
  Complex point(std::size_t i, std::size_t j) const {
    double x = window.lo.real() + (window.hi.real() - window.lo.real()) * static_cast<double>(i) / static_cast<double>(nx - 1);
    double y = window.lo.imag() + (window.hi.imag() - window.lo.imag()) * static_cast<double>(j) / static_cast<double>(ny - 1);
    return {x, y};
  }
  std::size_t h_edge(std::size_t i, std::size_t j) const { return j * (nx - 1) + i; }
  std::size_t v_edge(std::size_t i, std::size_t j) const { return (nx - 1) * ny + j * nx + i; }
};

using CrossingFn = std::function<Complex(std::size_t in_node, std::size_t out_node)>;
using CentreFn = std::function<bool(std::size_t i, std::size_t j)>;

March march(const GridGeometry& g, const std::vector<char>& inside, const CrossingFn& crossing_at,
            const CentreFn& centre_inside) {
  March m;
  const std::size_t nx = g.nx;
  auto node = [&](std::size_t i, std::size_t j) { return j * nx + i; };
  auto vertex = [&](std::size_t edge, std::size_t a, std::size_t b) {
    auto it = m.crossing.find(edge);
    if (it != m.crossing.end()) return it->second;
    Complex v = inside[a] ? crossing_at(a, b) : crossing_at(b, a);
    m.crossing.emplace(edge, v);
    return v;
  };
  for (std::size_t j = 0; j + 1 < g.ny; ++j) {
    for (std::size_t i = 0; i + 1 < nx; ++i) {
      const std::size_t c[4] = {node(i, j), node(i + 1, j), node(i + 1, j + 1), node(i, j + 1)};
      const bool in[4] = {inside[c[0]] != 0, inside[c[1]] != 0, inside[c[2]] != 0, inside[c[3]] != 0};
      const int n_in = in[0] + in[1] + in[2] + in[3];
      if (n_in == 0 || n_in == 4) continue;
      const std::size_t e[4] = {g.h_edge(i, j), g.v_edge(i + 1, j), g.h_edge(i, j + 1), g.v_edge(i, j)};
      const int ends[4][2] = {{0, 1}, {1, 2}, {3, 2}, {0, 3}};
      Complex pos[4];
      Complex corner[4] = {g.point(i, j), g.point(i + 1, j), g.point(i + 1, j + 1), g.point(i, j + 1)};
      std::vector<int> crossed;
      for (int k = 0; k < 4; ++k) {
        int a = ends[k][0], b = ends[k][1];
        if (in[a] != in[b]) {
          pos[k] = vertex(e[k], c[a], c[b]);
          crossed.push_back(k);
        }
      }
      auto emit = [&](int ka, int kb, int ref_corner, bool ref_inside, std::size_t ref_node) {
        Complex a = pos[ka], b = pos[kb];
        double s = cross(b - a, corner[ref_corner] - a);
        bool forward = ref_inside ? s > 0 : s < 0;
        if (forward)
          m.segments.push_back({e[ka], e[kb], ref_node});
        else
          m.segments.push_back({e[kb], e[ka], ref_node});
      };
      if (crossed.size() == 2) {
        int best = -1;
        double best_abs = -1.0;
        for (int k = 0; k < 4; ++k) {
          if (!in[k]) continue;
          double s = std::abs(cross(pos[crossed[1]] - pos[crossed[0]], corner[k] - pos[crossed[0]]));
          if (s > best_abs) {
            best_abs = s;
            best = k;
          }
        }
        emit(crossed[0], crossed[1], best, true, c[best]);
      } else {
        const bool centre_in = centre_inside(i, j);
        if (centre_in) {
          if (in[0])
            m.diagonal_links.emplace_back(c[0], c[2]);
          else
            m.diagonal_links.emplace_back(c[1], c[3]);
        }
        // corners cut off by the two segments
        int cut_a, cut_b;
        if (centre_in == in[0]) {
          cut_a = 1;
          cut_b = 3;
        } else {
          cut_a = 0;
          cut_b = 2;
        }
        for (int cut : {cut_a, cut_b}) {
          // edges adjacent to corner `cut`
          int ka = -1, kb = -1;
          for (int k = 0; k < 4; ++k) {
            if (ends[k][0] == cut || ends[k][1] == cut) (ka < 0 ? ka : kb) = k;
          }
          std::size_t ref = in[cut] ? c[cut] : c[(cut + 1) % 4];
          emit(ka, kb, cut, in[cut], ref);
        }
      }
    }
  }
  return m;
}

std::vector<double> log_ratio(const GridField& field, double level) {
  std::vector<double> s(field.values().size());
  const double ll = std::log(level);
  for (std::size_t k = 0; k < s.size(); ++k) {
    double v = field.values()[k];
    double t = v == 0.0 ? -50.0 : (std::isinf(v) ? 50.0 : std::log(v) - ll);
    s[k] = std::clamp(t, -50.0, 50.0);
  }
  return s;
}

int round_turns(double total) { return static_cast<int>(std::lround(total / kTwoPi)); }

struct LoopNodes {
  std::vector<Complex> nodes, dz;
  std::vector<double> ds;
};

LoopNodes loop_nodes(const RationalFunction& r, double rho, const ContourLoop& loop, std::size_t per_turn) {
  const auto& v = loop.vertices;
  std::vector<double> theta(v.size());
  theta[0] = std::arg(r(v[0]));
  for (std::size_t i = 1; i < v.size(); ++i) theta[i] = theta[i - 1] + std::arg(r(v[i]) / r(v[i - 1]));
  const std::size_t n = per_turn * static_cast<std::size_t>(loop.turns);
  const double h = kTwoPi / static_cast<double>(per_turn);
  LoopNodes out;
  out.nodes.reserve(n);
  std::size_t seg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = theta[0] + h * static_cast<double>(k);
    while (seg + 2 < v.size() && theta[seg + 1] <= t) ++seg;
    const double span = theta[seg + 1] - theta[seg];
    const double frac = span > 0.0 ? std::clamp((t - theta[seg]) / span, 0.0, 1.0) : 0.0;
    Complex z = v[seg] + (v[seg + 1] - v[seg]) * frac;
    const Complex target = std::polar(rho, t);
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      Complex step = (r(z) - target) / r.derivative(z);
      z -= step;
      if (std::abs(step) <= 1e-14 * (1.0 + std::abs(z))) {
        ok = true;
        break;
      }
    }
    if (!ok && !(std::abs(r(z) - target) <= 1e-10 * std::max(1.0, rho)))
      throw ConvergenceError("quadrature node placement did not converge", std::abs(r(z) - target));
    const Complex ratio = r(z) / r.derivative(z);
    out.nodes.push_back(z);
    out.dz.push_back(Complex{0.0, 1.0} * ratio * h);
    out.ds.push_back(std::abs(ratio) * h);
  }
  return out;
}

}  // namespace

Window Window::square(double half_width, Complex centre) {
  return {centre - Complex{half_width, half_width}, centre + Complex{half_width, half_width}};
}

bool Window::contains(Complex z) const {
  return z.real() >= lo.real() && z.real() <= hi.real() && z.imag() >= lo.imag() && z.imag() <= hi.imag();
}

Window enclosing_window(const RationalFunction& r, double level, double margin, Complex centre) {
  // With coefficients about the centre, |r| > level beyond the positive root of
  // |a_n| t^n - sum_{k<n} |a_k| t^k - level sum |b_k| t^k.
  const auto a = taylor_shift(r.p(), centre, *r.p().degree());
  const auto b = taylor_shift(r.q(), centre, *r.q().degree());
  const std::size_t n = a.size() - 1;
  auto f = [&](double t) {
    double v = std::abs(a[n]) * std::pow(t, static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) v -= std::abs(a[k]) * std::pow(t, static_cast<double>(k));
    for (std::size_t k = 0; k < b.size(); ++k) v -= level * std::abs(b[k]) * std::pow(t, static_cast<double>(k));
    return v;
  };
  double hi = 1.0;
  while (f(hi) <= 0.0) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return Window::square(margin * hi + 1e-3, centre);
}

GridField::GridField(Window window, std::size_t nx, std::size_t ny, std::vector<double> values)
    : window_(window), nx_(nx), ny_(ny), values_(std::move(values)) {
  if (nx < 2 || ny < 2) throw InputError("grid resolution must be at least 2");
  if (values_.size() != nx * ny) throw InputError("grid value count mismatch");
}

double GridField::dx() const { return (window_.hi.real() - window_.lo.real()) / static_cast<double>(nx_ - 1); }
double GridField::dy() const { return (window_.hi.imag() - window_.lo.imag()) / static_cast<double>(ny_ - 1); }

Complex GridField::point(std::size_t i, std::size_t j) const {
  return GridGeometry{window_, nx_, ny_}.point(i, j);
}

std::pair<std::size_t, std::size_t> GridField::nearest(Complex z) const {
  auto idx = [](double t, double lo, double step, std::size_t n) {
    double k = std::round((t - lo) / step);
    return static_cast<std::size_t>(std::clamp(k, 0.0, static_cast<double>(n - 1)));
  };
  return {idx(z.real(), window_.lo.real(), dx(), nx_), idx(z.imag(), window_.lo.imag(), dy(), ny_)};
}

void GridField::write_csv(std::ostream& os) const {
  os << "x,y,absr\n";
  char buf[96];
  for (std::size_t j = 0; j < ny_; ++j)
    for (std::size_t i = 0; i < nx_; ++i) {
      Complex z = point(i, j);
      std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", z.real(), z.imag(), at(i, j));
      os << buf;
    }
}

GridField level_grid(const RationalFunction& r, const Window& window, std::size_t nx, std::size_t ny) {
  if (nx < 2 || ny < 2) throw InputError("grid resolution must be at least 2");
  GridGeometry g{window, nx, ny};
  std::vector<double> values(nx * ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) values[j * nx + i] = abs_r(r, g.point(i, j));
  return GridField(window, nx, ny, std::move(values));
}

SublevelComponents::SublevelComponents(const GridField& field, std::vector<int> labels, std::size_t count)
    : window_(field.window()), nx_(field.nx()), ny_(field.ny()), labels_(std::move(labels)), count_(count) {}

int SublevelComponents::component_of(Complex z) const {
  GridField probe(window_, nx_, ny_, std::vector<double>(nx_ * ny_));
  auto [i, j] = probe.nearest(z);
  return label(i, j);
}

std::vector<Complex> SublevelComponents::samples(std::size_t c) const {
  GridGeometry g{window_, nx_, ny_};
  std::vector<Complex> out;
  for (std::size_t j = 0; j < ny_; ++j)
    for (std::size_t i = 0; i < nx_; ++i)
      if (label(i, j) == static_cast<int>(c)) out.push_back(g.point(i, j));
  return out;
}

SublevelComponents sublevel_components(const GridField& field, double level) {
  if (!(level > 0.0)) throw InputError("level must be positive");
  const std::size_t nx = field.nx(), ny = field.ny();
  std::vector<int> labels(nx * ny, -1);
  int count = 0;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < labels.size(); ++start) {
    if (labels[start] >= 0 || !(field.values()[start] < level)) continue;
    labels[start] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      std::size_t k = stack.back();
      stack.pop_back();
      std::size_t i = k % nx, j = k / nx;
      auto visit = [&](std::size_t n) {
        if (labels[n] < 0 && field.values()[n] < level) {
          labels[n] = count;
          stack.push_back(n);
        }
      };
      if (i > 0) visit(k - 1);
      if (i + 1 < nx) visit(k + 1);
      if (j > 0) visit(k - nx);
      if (j + 1 < ny) visit(k + nx);
    }
    ++count;
  }
  return SublevelComponents(field, std::move(labels), static_cast<std::size_t>(count));
}

std::vector<std::vector<Complex>> level_polylines(const GridField& field, double level) {
  GridGeometry g{field.window(), field.nx(), field.ny()};
  const auto s = log_ratio(field, level);
  std::vector<char> inside(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) inside[k] = s[k] < 0.0;
  auto pt = [&](std::size_t n) { return g.point(n % g.nx, n / g.nx); };
  auto crossing = [&](std::size_t a, std::size_t b) {
    double t = s[a] / (s[a] - s[b]);
    return pt(a) + (pt(b) - pt(a)) * t;
  };
  auto centre = [&](std::size_t i, std::size_t j) {
    std::size_t n = j * g.nx + i;
    return s[n] + s[n + 1] + s[n + g.nx] + s[n + g.nx + 1] < 0.0;
  };
  March m = march(g, inside, crossing, centre);
  std::map<std::size_t, std::size_t> start_at;
  std::map<std::size_t, std::size_t> end_at;
  for (std::size_t k = 0; k < m.segments.size(); ++k) {
    start_at[m.segments[k].from_edge] = k;
    end_at[m.segments[k].to_edge] = k;
  }
  std::vector<char> used(m.segments.size(), 0);
  std::vector<std::vector<Complex>> out;
  auto follow = [&](std::size_t first) {
    std::vector<Complex> line{m.crossing.at(m.segments[first].from_edge)};
    std::size_t k = first;
    while (true) {
      used[k] = 1;
      line.push_back(m.crossing.at(m.segments[k].to_edge));
      auto it = start_at.find(m.segments[k].to_edge);
      if (it == start_at.end() || used[it->second]) break;
      k = it->second;
    }
    out.push_back(std::move(line));
  };
  for (std::size_t k = 0; k < m.segments.size(); ++k)
    if (!end_at.contains(m.segments[k].from_edge)) follow(k);
  for (std::size_t k = 0; k < m.segments.size(); ++k)
    if (!used[k]) follow(k);
  return out;
}

int winding_number(std::span<const Complex> closed, Complex z) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < closed.size(); ++i) total += std::arg((closed[i + 1] - z) / (closed[i] - z));
  return round_turns(total);
}

Contour::Contour(RationalFunction r, double level, std::vector<ContourLoop> loops, std::size_t components)
    : r_(std::move(r)), level_(level), loops_(std::move(loops)), components_(components), roots_(components) {
  for (std::size_t j = 0; j < r_.d(); ++j) {
    int c = component_containing(r_.lambdas()[j]);
    if (c >= 0) roots_[static_cast<std::size_t>(c)].push_back(j);
  }
}

int Contour::component_containing(Complex z) const {
  std::vector<int> total(components_, 0);
  for (const auto& loop : loops_) total[loop.component] += winding_number(loop.vertices, z);
  for (std::size_t c = 0; c < components_; ++c)
    if (total[c] == 1) return static_cast<int>(c);
  return -1;
}

std::size_t Contour::component_of_root(std::size_t j) const {
  for (std::size_t c = 0; c < components_; ++c)
    if (std::find(roots_[c].begin(), roots_[c].end(), j) != roots_[c].end()) return c;
  throw InputError("root is not enclosed by the contour");
}

Contour trace_level_curve(const RationalFunction& r, double rho, const Window& window, double refine_tol,
                          const TraceOptions& options) {
  if (!(rho > 0.0)) throw InputError("level must be positive");
  const double clearance = options.clearance > 0.0 ? options.clearance : 1e-3 * window.diameter();
  const auto crit = critical_points(r);
  for (const auto& c : crit)
    if (std::abs(std::abs(c.w) - rho) <= 1e-8 * std::max(1.0, rho))
      throw ClearanceError("critical value lies on the level curve");

  const GridField field = level_grid(r, window, options.nx, options.ny);
  GridGeometry g{window, field.nx(), field.ny()};
  const std::size_t nx = g.nx, ny = g.ny;
  std::vector<char> inside(nx * ny);
  for (std::size_t k = 0; k < inside.size(); ++k) inside[k] = field.values()[k] < rho;
  for (std::size_t i = 0; i < nx; ++i)
    if (inside[i] || inside[(ny - 1) * nx + i]) throw WindowError("sublevel set reaches the window boundary");
  for (std::size_t j = 0; j < ny; ++j)
    if (inside[j * nx] || inside[j * nx + nx - 1]) throw WindowError("sublevel set reaches the window boundary");

  const double log_rho = std::log(rho);
  auto below = [&](Complex z) { return !r.is_pole(z) && std::log(std::abs(r(z))) < log_rho; };
  auto pt = [&](std::size_t n) { return g.point(n % nx, n / nx); };
  auto crossing = [&](std::size_t in_node, std::size_t out_node) {
    Complex a = pt(in_node), b = pt(out_node);
    for (int it = 0; it < 200; ++it) {
      Complex mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      (below(mid) ? a : b) = mid;
    }
    Complex v = std::abs(std::abs(r(a)) - rho) <= std::abs(std::abs(r(b)) - rho) ? a : b;
    if (!(std::abs(std::abs(r(v)) - rho) <= refine_tol * std::max(1.0, rho)))
      throw ClearanceError("level crossing could not be refined (pole or critical point on a grid edge)");
    return v;
  };
  auto centre = [&](std::size_t i, std::size_t j) { return below(0.5 * (g.point(i, j) + g.point(i + 1, j + 1))); };
  March m = march(g, inside, crossing, centre);

  UnionFind uf(nx * ny);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      std::size_t n = j * nx + i;
      if (!inside[n]) continue;
      if (i + 1 < nx && inside[n + 1]) uf.unite(n, n + 1);
      if (j + 1 < ny && inside[n + nx]) uf.unite(n, n + nx);
    }
  for (auto [a, b] : m.diagonal_links) uf.unite(a, b);

  std::map<std::size_t, std::size_t> start_at;
  for (std::size_t k = 0; k < m.segments.size(); ++k) start_at[m.segments[k].from_edge] = k;
  std::vector<char> used(m.segments.size(), 0);
  std::vector<ContourLoop> loops;
  std::map<std::size_t, std::size_t> component_ids;
  for (std::size_t first = 0; first < m.segments.size(); ++first) {
    if (used[first]) continue;
    ContourLoop loop;
    std::size_t k = first;
    while (!used[k]) {
      used[k] = 1;
      loop.vertices.push_back(m.crossing.at(m.segments[k].from_edge));
      auto it = start_at.find(m.segments[k].to_edge);
      if (it == start_at.end()) throw WindowError("level curve is not closed inside the window");
      k = it->second;
    }
    if (k != first) throw WindowError("level curve linking failed");
    loop.vertices.push_back(loop.vertices.front());
    std::size_t root = uf.find(m.segments[first].ref_node);
    auto [pos, fresh] = component_ids.emplace(root, component_ids.size());
    loop.component = pos->second;
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < loop.vertices.size(); ++i)
      total += std::arg(r(loop.vertices[i + 1]) / r(loop.vertices[i]));
    loop.turns = round_turns(total);
    if (loop.turns < 1) throw ConvergenceError("loop orientation inconsistent with the level set", total);
    loops.push_back(std::move(loop));
  }
  if (loops.empty()) throw InputError("level curve is empty in the window");

  for (const auto& loop : loops)
    for (Complex v : loop.vertices)
      for (const auto& c : crit)
        if (std::abs(v - c.z) <= clearance)
          throw ClearanceError("level curve passes within the clearance of a critical point");

  Contour contour(r, rho, std::move(loops), component_ids.size());
  for (std::size_t j = 0; j < r.d(); ++j) {
    if (contour.component_containing(r.lambdas()[j]) < 0) throw WindowError("a root of p lies outside the window");
  }
  place_nodes(contour, options.nodes_per_turn);
  return contour;
}

void place_nodes(Contour& contour, std::size_t nodes_per_turn) {
  for (auto& loop : contour.loops()) {
    LoopNodes ln = loop_nodes(contour.r(), contour.level(), loop, nodes_per_turn);
    loop.nodes = std::move(ln.nodes);
    loop.dz = std::move(ln.dz);
    loop.ds = std::move(ln.ds);
  }
}

Quadrature contour_quadrature(const Contour& contour, std::size_t nodes_per_turn, std::span<const std::size_t> loops) {
  std::vector<std::size_t> chosen(loops.begin(), loops.end());
  if (chosen.empty()) {
    chosen.resize(contour.loops().size());
    std::iota(chosen.begin(), chosen.end(), std::size_t{0});
  }
  Quadrature q;
  for (std::size_t li : chosen) {
    const auto& loop = contour.loops().at(li);
    const bool cached = !loop.nodes.empty() &&
                        loop.nodes.size() == nodes_per_turn * static_cast<std::size_t>(loop.turns);
    LoopNodes ln = cached ? LoopNodes{loop.nodes, loop.dz, loop.ds}
                          : loop_nodes(contour.r(), contour.level(), loop, nodes_per_turn);
    q.nodes.insert(q.nodes.end(), ln.nodes.begin(), ln.nodes.end());
    q.dz.insert(q.dz.end(), ln.dz.begin(), ln.dz.end());
    q.ds.insert(q.ds.end(), ln.ds.begin(), ln.ds.end());
    q.loop.insert(q.loop.end(), ln.nodes.size(), li);
  }
  return q;
}

SeparationReport verify_separation(const RationalFunction& r, std::span<const Complex> inside,
                                   std::span<const Complex> outside, double level, double slack) {
  if (inside.empty() || outside.empty()) throw InputError("sample sets must be nonempty");
  SeparationReport rep;
  rep.level = level;
  rep.max_inside = 0.0;
  for (Complex z : inside) rep.max_inside = std::max(rep.max_inside, abs_r(r, z));
  rep.min_outside = kInf;
  for (Complex z : outside) rep.min_outside = std::min(rep.min_outside, abs_r(r, z));
  rep.pass = rep.max_inside <= level * (1.0 - slack) && rep.min_outside >= level * (1.0 + slack);
  return rep;
}

RationalFunction proper_scale(const Polynomial& p0, const Polynomial& q0, double R, unsigned n) {
  if (!(R > 0.0) || n < 1) throw InputError("proper_scale needs R > 0 and n >= 1");
  if (p0.is_zero() || q0.is_zero()) throw InputError("proper_scale needs nonzero p0 and q0");
  if (*p0.degree() + n <= *q0.degree()) throw InputError("n too small to make the scaled function proper");
  Polynomial P = Polynomial::constant(1.0) - Polynomial::monomial(n, std::pow(R, -static_cast<double>(n)));
  return RationalFunction(P * p0, q0);
}

RationalFunction proper_scale(const RationalFunction& r0, double R, unsigned n) {
  return proper_scale(r0.p(), r0.q(), R, n);
}

}  // namespace ratvar
