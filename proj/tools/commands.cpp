#include "commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "ratvar/opcalc.hpp"
#include "ratvar/polyalg.hpp"
#include "ratvar/svg.hpp"
#include "ratvar/sylvester.hpp"

namespace ratvar::cli {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

Json read_input(const std::string& path) {
  require(!path.empty(), "no input given");
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    require(in.good(), "cannot open input file " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

RationalFunction rational_of(const Json& input) {
  if (input.contains("r")) return rational_from_json(input["r"]);
  return rational_from_json(input);
}

Window window_of(const RunConfig& config, const Json& input, const RationalFunction& r, double level) {
  std::optional<std::array<double, 4>> w = config.window;
  if (!w && input.contains("window")) w = input["window"].get<std::array<double, 4>>();
  if (!w) return enclosing_window(r, level);
  require((*w)[0] < (*w)[1] && (*w)[2] < (*w)[3], "window must satisfy xmin < xmax and ymin < ymax");
  return Window{{(*w)[0], (*w)[2]}, {(*w)[1], (*w)[3]}};
}

Json window_json(const Window& w) { return Json::array({w.lo.real(), w.hi.real(), w.lo.imag(), w.hi.imag()}); }

TraceOptions trace_options(const RunConfig& config) {
  TraceOptions t;
  t.nx = t.ny = config.resolution;
  return t;
}

Json meta(const RunConfig& config) {
  return Json{{"command", config.command}, {"tol", config.tol}, {"resolution", config.resolution}, {"seed", config.seed}};
}

std::vector<Complex> points_of(const Json& j) {
  require(j.is_array(), "expected an array of points");
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

// φ from its JSON description: "one", "z", {"polynomial": [...]}, or
// {"piecewise": [{"point": z, "value": v}, ...]} (constant on the component holding each point, 0 elsewhere).
ComponentFunction phi_of(const Json& spec, const Contour& contour) {
  if (spec.is_string()) {
    const auto s = spec.get<std::string>();
    if (s == "one") return [](std::size_t, Complex) { return Complex{1.0}; };
    if (s == "z") return [](std::size_t, Complex z) { return z; };
    throw InputError("unknown phi \"" + s + "\"");
  }
  require(spec.is_object(), "phi must be a string or an object");
  if (spec.contains("polynomial")) {
    Polynomial p = polynomial_from_json(spec["polynomial"]);
    return [p](std::size_t, Complex z) { return p(z); };
  }
  if (spec.contains("piecewise")) {
    std::vector<Complex> values(contour.component_count(), 0.0);
    for (const auto& e : spec["piecewise"]) {
      const int c = contour.component_containing(complex_from_json(e.at("point")));
      require(c >= 0, "piecewise point is not inside the contour");
      values[static_cast<std::size_t>(c)] = complex_from_json(e.at("value"));
    }
    return [values](std::size_t c, Complex) { return values.at(c); };
  }
  throw InputError("phi object needs \"polynomial\" or \"piecewise\"");
}

Representation representation_of(const RunConfig& config, const Json& input) {
  if (input.contains("representation")) return representation_from_json(input["representation"]);
  if (input.contains("alpha")) return representation_from_json(input);
  const RationalFunction r = rational_of(input);
  const double rho = input.value("rho", 0.9);
  require(rho > 0.0, "rho must be positive");
  Contour contour = trace_level_curve(r, rho, window_of(config, input, r, rho), 1e-12, trace_options(config));
  CauchyOptions opt;
  opt.order = input.value("order", std::size_t{30});
  require(opt.order <= config.max_order, "order exceeds the truncation cap");
  opt.tol = config.tol;
  if (input.contains("support")) opt.support = input["support"].get<std::vector<std::size_t>>();
  require(input.contains("phi"), "input needs \"phi\"");
  return cauchy_coefficients(contour, phi_of(input["phi"], contour), opt);
}

std::vector<Complex> axis_samples(std::size_t n, double half) {
  std::vector<Complex> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back({0.0, -half + 2.0 * half * (static_cast<double>(k) + 0.5) / static_cast<double>(n)});
  return out;
}

// Margins of the symmetric segments ±x + it, |t| <= y, against the imaginary axis.
Json segment_margins(const RationalFunction& r, double level, const SegmentFit& s) {
  std::vector<Complex> inside;
  for (int k = 0; k < 100; ++k) {
    const double t = (-1.0 + 2.0 * k / 99.0) * s.y * (1.0 - 1e-6);
    inside.push_back({s.x, t});
    inside.push_back({-s.x, t});
  }
  const auto rep = verify_separation(r, inside, axis_samples(200, 20.0 * std::max(s.x, s.y)), level, 0.0);
  return Json{{"max_inside", rep.max_inside}, {"min_outside", rep.min_outside}, {"level", level}};
}

Json candidate_json(const TwoSegmentCandidate& c) {
  return Json{{"a", c.a},          {"b", c.b},          {"R", c.level},
              {"x", c.segment.x},  {"y", c.segment.y},  {"ratio", c.segment.y / c.segment.x},
              {"angle", c.segment.angle_deg}};
}

SylvesterProblem problem_of(const Json& input) {
  require(input.contains("A") && input.contains("B") && input.contains("C"), "input needs \"A\", \"B\" and \"C\"");
  return {matrix_from_json(input["A"]), matrix_from_json(input["B"]), matrix_from_json(input["C"])};
}

}  // namespace

void check_config(const RunConfig& c) {
  require(c.tol > 0.0, "--tol must be positive");
  require(c.resolution >= 2, "--resolution must be at least 2");
  require(c.max_order >= 1 && c.max_order <= 200, "--max-order must be in 1..200");
  for (double l : c.levels) require(l > 0.0, "levels must be positive");
}

Json cmd_lemniscate(const RunConfig& config, const Json& input) {
  const RationalFunction r = rational_of(input);
  std::vector<double> levels = config.levels;
  if (levels.empty() && input.contains("levels")) levels = input["levels"].get<std::vector<double>>();
  if (levels.empty()) levels = {1.0};
  for (double l : levels) require(l > 0.0, "levels must be positive");
  const double top = *std::max_element(levels.begin(), levels.end());
  const Window window = window_of(config, input, r, top);
  const GridField grid = level_grid(r, window, config.resolution, config.resolution);

  const std::string prefix = config.out.empty() ? "lemniscate" : config.out;
  {
    std::ofstream svg(prefix + ".svg");
    require(svg.good(), "cannot write " + prefix + ".svg");
    write_lemniscate_svg(svg, r, window, levels, config.resolution);
  }
  {
    std::ofstream csv(prefix + ".csv");
    require(csv.good(), "cannot write " + prefix + ".csv");
    grid.write_csv(csv);
  }
  Json lv = Json::array();
  for (double l : levels) lv.push_back(Json{{"level", l}, {"components", sublevel_components(grid, l).count()}});
  Json zeros = Json::array();
  for (Complex z : r.lambdas()) zeros.push_back(to_json(z));
  Json poles = Json::array();
  if (r.q().degree().value_or(0) > 0)
    for (Complex z : poly_roots(r.q())) poles.push_back(to_json(z));
  return Json{{"r", to_json(r)},          {"window", window_json(window)}, {"levels", lv},
              {"zeros", zeros},           {"poles", poles},                {"svg", prefix + ".svg"},
              {"csv", prefix + ".csv"},   {"meta", meta(config)}};
}

Json cmd_separate(const RunConfig& config, const Json& input, bool& met) {
  Json out{{"mode", config.mode}};
  if (config.mode == "segments") {
    require(config.dp == 4 && config.dq == 3, "the two-segment family has dp = 4 and dq = 3");
    TwoSegmentOptions opt;
    opt.level = config.level;
    opt.angle_deg = config.angle;
    if (input.is_object()) {
      opt.a_min = input.value("a_min", opt.a_min);
      opt.a_max = input.value("a_max", opt.a_max);
      opt.b_min = input.value("b_min", opt.b_min);
      opt.b_max = input.value("b_max", opt.b_max);
      opt.step = input.value("step", opt.step);
    }
    const TwoSegmentResult res = two_segment_search(opt);
    Json sweep = Json::array();
    for (const auto& c : res.sweep) sweep.push_back(candidate_json(c));
    if (res.best) {
      out["best"] = candidate_json(*res.best);
      out["best"]["margins"] = segment_margins(two_segment_family(res.best->a, res.best->b), res.best->level, res.best->segment);
    }
    out["sweep"] = std::move(sweep);
    met = res.target_met;
  } else if (config.mode == "deg2") {
    // z² − 1 and (z² − 1)/(2z), each at its supremum level.
    const std::vector<std::pair<std::string, RationalFunction>> members = {
        {"polynomial", RationalFunction(Polynomial({-1.0, 0.0, 1.0}), Polynomial::constant(1.0))},
        {"rational", RationalFunction(Polynomial({-1.0, 0.0, 1.0}), Polynomial({0.0, 2.0}))}};
    Json list = Json::array();
    double best = 0.0;
    for (const auto& [name, r] : members) {
      const double level = config.level.value_or(supremum_level(r, {1.0, 0.0}, 0.01));
      Json m{{"member", name}, {"r", to_json(r)}, {"R", level}};
      if (auto seg = best_segment(r, level, 1.0)) {
        m["x"] = seg->x;
        m["y"] = seg->y;
        m["angle"] = seg->angle_deg;
        m["margins"] = segment_margins(r, level, *seg);
        best = std::max(best, seg->angle_deg);
      }
      list.push_back(std::move(m));
    }
    out["members"] = std::move(list);
    out["angle"] = best;
    met = !config.angle || best >= *config.angle;
  } else if (config.mode == "fit") {
    require(input.contains("inside") && input.contains("outside"), "fit mode needs \"inside\" and \"outside\" points");
    const auto in = points_of(input["inside"]), outs = points_of(input["outside"]);
    const FitResult fit = fit_separator(in, outs, config.dp, config.dq);
    out["r"] = to_json(fit.r);
    out["strong"] = fit.strong;
    out["margins"] = Json{{"max_inside", fit.report.max_inside}, {"min_outside", fit.report.min_outside}, {"level", 1.0}};
    met = true;
  } else {
    throw InputError("unknown separate mode \"" + config.mode + "\" (segments, deg2, fit)");
  }
  out["target_met"] = met;
  if (config.angle) out["requested_angle"] = *config.angle;
  out["meta"] = meta(config);
  return out;
}

Json cmd_represent(const RunConfig& config, const Json& input) {
  Json out = to_json(representation_of(config, input));
  out["meta"] = meta(config);
  return out;
}

Json cmd_funmat(const RunConfig& config, const Json& input) {
  require(input.contains("A"), "input needs \"A\"");
  const Representation rep = representation_of(config, input);
  const ComplexMatrix a = matrix_from_json(input["A"]);
  const FunmatResult res = mat_apply(rep, a, config.tol);
  return Json{{"value", to_json(res.value)},
              {"truncation_order", res.truncation_order},
              {"tail_estimate", res.tail_estimate},
              {"rho_hat", res.rho_hat},
              {"r", to_json(rep.r)},
              {"meta", meta(config)}};
}

Json cmd_sylvester(const RunConfig& config, const Json& input) {
  const SylvesterProblem prob = problem_of(input);
  PlanOptions po;
  if (input.contains("r")) po.r = rational_from_json(input["r"]);
  if (input.contains("eps")) po.eps = input["eps"].get<double>();
  po.seed = config.seed;
  po.resolution = config.resolution;
  const SeparationPlan plan = plan_separation(prob, po);
  const SylvesterSolution sol = solve(prob, plan, config.tol);
  Json labels = Json::array();
  for (auto l : plan.labels) labels.push_back(label_name(l));
  return Json{{"X", to_json(sol.X)},
              {"residual", sol.residual},
              {"residual_bound", sol.residual_bound},
              {"eta", sol.eta},
              {"truncation_order", sol.truncation_order},
              {"convergence_ratio", sol.convergence_ratio},
              {"plan",
               {{"r", to_json(plan.r)},
                {"family", plan.family},
                {"contour_level", plan.contour_level},
                {"labels", labels}}},
              {"meta", meta(config)}};
}

Json cmd_kspectral(const RunConfig& config, const Json& input) {
  require(input.contains("R") && input.contains("A"), "input needs \"R\" and \"A\"");
  const RationalFunction r = rational_of(input);
  const KSpectralReport rep =
      kspectral(r, input["R"].get<double>(), matrix_from_json(input["A"]), input.value("samples", std::size_t{512}));
  return Json{{"C_rR", rep.C_rR}, {"delta_norms", rep.delta_norms}, {"K", rep.K}, {"R", rep.R},
              {"s_R", rep.s_R},   {"samples", rep.samples},         {"r", to_json(r)}, {"meta", meta(config)}};
}

Json cmd_algebra_check(const RunConfig& config, const Json& input) {
  const RationalFunction r = rational_of(input);
  const DeltaBasis basis(r);
  const MultiplicationTable table = table_from_rational(r);
  std::mt19937 rng(config.seed);
  std::vector<Complex> pts;
  if (input.contains("samples") && input["samples"].is_array()) {
    pts = points_of(input["samples"]);
  } else {
    double min_crit = 1.0;
    const auto crit = critical_points(r);
    if (!crit.empty()) {
      min_crit = INFINITY;
      for (const auto& c : crit) min_crit = std::min(min_crit, std::abs(c.w));
    }
    const double radius = input.value("radius", 0.7 * min_crit);
    const std::size_t count = input.value("samples", std::size_t{32});
    std::uniform_real_distribution<double> u(0.0, 1.0);
    while (pts.size() < count) {
      const Complex w = std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
      if (!fiber_matrix(basis, w).near_critical) pts.push_back(w);
    }
  }
  const SampleSet samples = make_samples(pts);
  std::normal_distribution<double> g;
  auto random_element = [&] {
    ComplexMatrix v(static_cast<Eigen::Index>(r.d()), static_cast<Eigen::Index>(pts.size()));
    for (Eigen::Index i = 0; i < v.rows(); ++i)
      for (Eigen::Index j = 0; j < v.cols(); ++j) v(i, j) = Complex{g(rng), g(rng)};
    return AlgebraElement(samples, v);
  };
  const AlgebraElement f = random_element(), h = random_element();
  const AlgebraElement one = AlgebraElement::unit(r.d(), samples);
  const bool unit = polyproduct(one, f, table).values() == f.values();
  const double nf = operator_norm(f, table), nh = operator_norm(h, table);
  const double nfh = operator_norm(polyproduct(f, h, table), table);
  double mult = 0.0, chareq = 0.0;
  for (Complex w : pts)
    for (const auto& eta : characters(basis, table, w)) {
      mult = std::max(mult, multiplicativity_defect(eta, table, w));
      chareq = std::max(chareq, character_equation_residual(eta, table, w));
    }
  const auto phi = [](Complex z) { return z * z + Complex{0.0, 1.0} * z; };
  const GelfandReport gel = gelfand_check(element_from_function(basis, phi, samples), basis, phi);
  return Json{{"r", to_json(r)},
              {"samples", pts.size()},
              {"unit_law_exact", unit},
              {"norm_f", nf},
              {"norm_g", nh},
              {"norm_fg", nfh},
              {"submultiplicative", nfh <= nf * nh * (1.0 + 1e-12)},
              {"norm_constant", empirical_norm_constant(table, samples)},
              {"character_multiplicativity_defect", mult},
              {"character_equation_residual", chareq},
              {"gelfand_max_error", gel.max_error},
              {"meta", meta(config)}};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_config(config);
    Json input = config.input.empty() && config.command == "separate" ? Json::object() : read_input(config.input);
    Json result;
    int code = kOk;
    if (config.command == "lemniscate") {
      result = cmd_lemniscate(config, input);
    } else if (config.command == "separate") {
      bool met = false;
      result = cmd_separate(config, input, met);
      if (!met) code = kSearchFailure;
    } else if (config.command == "represent") {
      result = cmd_represent(config, input);
    } else if (config.command == "funmat") {
      result = cmd_funmat(config, input);
    } else if (config.command == "sylvester") {
      result = cmd_sylvester(config, input);
    } else if (config.command == "kspectral") {
      result = cmd_kspectral(config, input);
    } else if (config.command == "algebra-check") {
      result = cmd_algebra_check(config, input);
    } else {
      throw InputError("unknown command \"" + config.command + "\"");
    }
    const std::string text = result.dump(2) + "\n";
    if (!config.out.empty() && config.command != "lemniscate") {
      std::ofstream f(config.out);
      if (!f.good()) throw InputError("cannot write " + config.out);
      f << text;
    } else {
      out << text;
    }
    if (code == kSearchFailure) err << "error: no separator meets the requested target\n";
    return code;
  } catch (const SeparationError& e) {
    err << "error: " << e.what() << "\n";
    return kSearchFailure;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kConvergenceFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kInputError;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational lemniscates, multicentric representations and Sylvester solves"};
  app.require_subcommand(1);
  RunConfig config;
  std::vector<double> window;
  app.add_option("--tol", config.tol, "Tolerance")->capture_default_str();
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--window", window, "xmin,xmax,ymin,ymax")->delimiter(',')->expected(4);
  app.add_option("--resolution", config.resolution, "Grid nodes per side")->capture_default_str();
  app.add_option("--max-order", config.max_order, "Series truncation cap")->capture_default_str();
  app.add_option("--out", config.out, "Output path (file prefix for lemniscate)");

  auto input_option = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("input", config.input, "Input JSON file, - for stdin");
    if (required) o->required();
  };
  auto* lem = app.add_subcommand("lemniscate", "Level curves as SVG plus a CSV grid of |r|");
  input_option(lem, true);
  lem->add_option("--levels", config.levels, "Comma separated levels")->delimiter(',');
  auto* sep = app.add_subcommand("separate", "Two-segment family search, degree-2 family or discrete fit");
  input_option(sep, false);
  sep->add_option("--mode", config.mode, "segments, deg2 or fit")->capture_default_str();
  sep->add_option("--angle", config.angle, "Target angle in degrees");
  sep->add_option("--level", config.level, "Fixed level instead of the supremum");
  sep->add_option("--dp", config.dp, "Degree of p")->capture_default_str();
  sep->add_option("--dq", config.dq, "Degree of q")->capture_default_str();
  for (const char* name : {"represent", "funmat", "sylvester", "kspectral", "algebra-check"}) {
    auto* sub = app.add_subcommand(name, "");
    input_option(sub, true);
  }
  app.get_subcommand("represent")->description("Cauchy coefficients of phi on a traced contour");
  app.get_subcommand("funmat")->description("phi(A) through the series representation");
  app.get_subcommand("sylvester")->description("Solve AX - XB = C through psi(M)");
  app.get_subcommand("kspectral")->description("C(r,R), delta norms and K for a matrix");
  app.get_subcommand("algebra-check")->description("Banach algebra identities on a sample set");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  if (!window.empty()) config.window = std::array<double, 4>{window[0], window[1], window[2], window[3]};
  config.command = app.get_subcommands().front()->get_name();
  return run(config, out, err);
}

}  // namespace ratvar::cli
