#include "ratvar/json_io.hpp"

#include <cmath>
#include <limits>

namespace ratvar {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InputError(what);
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(), "complex number must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (Complex c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  require(j.is_array(), "polynomial must be an array of coefficients");
  std::vector<Complex> c;
  for (const auto& e : j) c.push_back(complex_from_json(e));
  return Polynomial(std::move(c));
}

Json to_json(const RationalFunction& r) { return Json{{"p", to_json(r.p())}, {"q", to_json(r.q())}}; }

RationalFunction rational_from_json(const Json& j) {
  require(j.is_object() && j.contains("p"), "rational function needs \"p\"");
  Polynomial q = j.contains("q") ? polynomial_from_json(j["q"]) : Polynomial::constant(1.0);
  return RationalFunction(polynomial_from_json(j["p"]), q);
}

Json to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) entries.push_back(to_json(m(i, k)));
  Json out;
  if (m.rows() == m.cols()) out["n"] = m.rows();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  require(j.is_object() && j.contains("entries") && j["entries"].is_array(), "matrix needs \"entries\"");
  Eigen::Index rows = 0, cols = 0;
  if (j.contains("rows") || j.contains("cols")) {
    require(j.contains("rows") && j.contains("cols"), "matrix needs both \"rows\" and \"cols\"");
    rows = j["rows"].get<Eigen::Index>();
    cols = j["cols"].get<Eigen::Index>();
  } else {
    require(j.contains("n"), "matrix needs \"n\" or \"rows\"/\"cols\"");
    rows = cols = j["n"].get<Eigen::Index>();
  }
  require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
  const auto& e = j["entries"];
  require(e.size() == static_cast<std::size_t>(rows * cols), "matrix entry count does not match its shape");
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(e[static_cast<std::size_t>(i * cols + k)]);
  return m;
}

Json to_json(const Representation& rep) {
  Json alpha = Json::array();
  for (Eigen::Index j = 0; j < rep.alpha.rows(); ++j) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < rep.alpha.cols(); ++k) row.push_back(to_json(rep.alpha(j, k)));
    alpha.push_back(std::move(row));
  }
  Json out;
  out["r"] = to_json(rep.r);
  out["lambdas"] = Json::array();
  for (Complex l : rep.r.lambdas()) out["lambdas"].push_back(to_json(l));
  if (std::isinf(rep.rho))
    out["rho"] = "inf";
  else
    out["rho"] = rep.rho;
  out["alpha"] = std::move(alpha);
  out["L"] = rep.L;
  out["tail_bound"] = rep.tail_bound;
  out["phi_max"] = rep.phi_max;
  return out;
}

Representation representation_from_json(const Json& j) {
  require(j.is_object() && j.contains("r") && j.contains("rho") && j.contains("alpha"),
          "representation needs \"r\", \"rho\" and \"alpha\"");
  Representation rep{rational_from_json(j["r"]), 0.0, {}, 0.0, {}, 0.0};
  if (j.contains("lambdas")) {
    // Keep the stored root order so that the rows of alpha stay aligned.
    std::vector<Complex> l;
    for (const auto& e : j["lambdas"]) l.push_back(complex_from_json(e));
    rep.r = RationalFunction(rep.r.p(), rep.r.q(), l);
  }
  if (j["rho"].is_string()) {
    require(j["rho"].get<std::string>() == "inf", "rho must be a number or \"inf\"");
    rep.rho = std::numeric_limits<double>::infinity();
  } else {
    rep.rho = j["rho"].get<double>();
  }
  const auto& a = j["alpha"];
  require(a.is_array() && a.size() == rep.r.d(), "alpha needs one row per root of p");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  require(cols > 0, "alpha rows must be nonempty");
  rep.alpha.resize(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < a.size(); ++r) {
    require(a[r].size() == cols, "alpha rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k)
      rep.alpha(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = complex_from_json(a[r][k]);
  }
  if (j.contains("L")) rep.L = j["L"].get<std::vector<double>>();
  rep.tail_bound = j.value("tail_bound", 0.0);
  rep.phi_max = j.value("phi_max", 0.0);
  return rep;
}

}  // namespace ratvar
