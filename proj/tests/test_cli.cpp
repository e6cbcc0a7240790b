#include "helpers.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/commands.hpp"
#include "ratvar/json_io.hpp"

using namespace ratvar;
using test::Complex;

namespace {

namespace fs = std::filesystem;

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "ratvar_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path path = scratch() / name;
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code = 0;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ratvar");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  Run r;
  r.code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const char* kJoukowski = R"({"p": [[-1,0],[0,0],[1,0]], "q": [[0,0],[2,0]]})";

}  // namespace

TEST_SUITE("json") {
  TEST_CASE("scalars and polynomials") {
    CHECK(complex_from_json(to_json(Complex{1.5, -2.0})) == Complex{1.5, -2.0});
    CHECK(complex_from_json(Json(3.0)) == Complex{3.0});
    const Polynomial p({Complex{1.0, 2.0}, 0.0, Complex{-0.5, 0.25}});
    CHECK(polynomial_from_json(to_json(p)) == p);
    CHECK(to_json(p).dump() == "[[1.0,2.0],[0.0,0.0],[-0.5,0.25]]");
    CHECK_THROWS(complex_from_json(Json::parse(R"("x")")));
  }

  TEST_CASE("rational functions and matrices") {
    const auto r = rational_from_json(Json::parse(kJoukowski));
    CHECK(std::abs(r(2.0) - 0.75) < 1e-15);
    const auto back = rational_from_json(to_json(r));
    CHECK(back.p() == r.p());
    CHECK(back.q() == r.q());
    CHECK(rational_from_json(Json::parse(R"({"p": [[-1,0],[0,0],[1,0]]})")).q() == Polynomial::constant(1.0));

    ComplexMatrix m(2, 3);
    m << 1.0, Complex{0.0, 1.0}, 2.0, -1.0, 0.5, Complex{3.0, -3.0};
    CHECK(matrix_from_json(to_json(m)) == m);
    const auto sq = matrix_from_json(Json::parse(R"({"n": 2, "entries": [[1,0],[2,0],[3,0],[4,0]]})"));
    CHECK(sq(0, 1) == Complex{2.0});
    CHECK(sq(1, 0) == Complex{3.0});
    CHECK_THROWS(matrix_from_json(Json::parse(R"({"n": 2, "entries": [[1,0]]})")));
  }

  TEST_CASE("representations") {
    Representation rep{test::half_joukowski(), 0.5, ComplexMatrix(2, 2), 1.5, {1.0, 1.0}, 2.0};
    rep.alpha << 1.0, 2.0, -1.0, 2.0;
    const auto back = representation_from_json(to_json(rep));
    CHECK(back.rho == 0.5);
    CHECK(back.alpha == rep.alpha);
    CHECK(back.r.lambdas() == rep.r.lambdas());
    CHECK(to_json(back).dump() == to_json(rep).dump());
    rep.rho = std::numeric_limits<double>::infinity();
    CHECK(to_json(rep)["rho"] == "inf");
    CHECK(std::isinf(representation_from_json(to_json(rep)).rho));
  }
}

TEST_SUITE("cli") {
  TEST_CASE("configuration checks") {
    cli::RunConfig c;
    c.command = "funmat";
    CHECK_NOTHROW(cli::check_config(c));
    c.tol = 0.0;
    CHECK_THROWS_AS(cli::check_config(c), InputError);
    c.tol = 1e-10;
    c.resolution = 1;
    CHECK_THROWS_AS(cli::check_config(c), InputError);
  }

  TEST_CASE("lemniscate output") {
    const auto in = write("ex24.json", R"({"p": [[9,0],[0,0],[-2,0],[0,0],[1,0]], "q": [[0,0],[3,0],[0,0],[1,0]]})");
    const std::string prefix = (scratch() / "ex24").string();
    const auto a = invoke({"--window", "-4,4,-4,4", "--resolution", "201", "--out", prefix, "lemniscate", in.string(),
                        "--levels", "5.6"});
    REQUIRE(a.code == 0);
    const auto j = Json::parse(a.out);
    CHECK(j["levels"][0]["components"] == 2);
    const std::string csv = slurp(prefix + ".csv"), svg = slurp(prefix + ".svg");
    CHECK(csv.rfind("x,y,absr\n", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    const auto b = invoke({"--window", "-4,4,-4,4", "--resolution", "201", "--out", prefix, "lemniscate", in.string(),
                        "--levels", "5.6"});
    CHECK(b.out == a.out);
    CHECK(slurp(prefix + ".csv") == csv);
    CHECK(slurp(prefix + ".svg") == svg);
  }

  TEST_CASE("sylvester is deterministic") {
    const auto in = write("syl.json", R"({"A": {"n": 1, "entries": [[1,0]]}, "B": {"n": 1, "entries": [[-1,0]]},
                                          "C": {"n": 1, "entries": [[0.7,0]]}})");
    const auto a = invoke({"sylvester", in.string()}), b = invoke({"sylvester", in.string()});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto x = matrix_from_json(Json::parse(a.out)["X"]);
    CHECK(std::abs(x(0, 0) - 0.35) < 1e-10);
  }

  TEST_CASE("represent round-trips its output") {
    const auto in = write("rep.json", std::string(R"({"r": )") + kJoukowski + R"(, "rho": 0.5, "order": 12, "phi": "z"})");
    const auto a = invoke({"represent", in.string()});
    REQUIRE(a.code == 0);
    const auto again = write("rep_out.json", a.out);
    const auto b = invoke({"represent", again.string()});
    REQUIRE(b.code == 0);
    CHECK(b.out == a.out);

    auto fm = Json::parse(a.out);
    fm["A"] = Json::parse(R"({"n": 2, "entries": [[1,0],[0.5,0],[0,0],[-1,0]]})");
    const auto fin = write("funmat.json", fm.dump());
    const auto f = invoke({"funmat", fin.string()});
    REQUIRE(f.code == 0);
    const auto v = matrix_from_json(Json::parse(f.out)["value"]);
    CHECK(std::abs(v(0, 1) - 0.5) < 1e-8);
  }

  TEST_CASE("kspectral and algebra-check") {
    const auto in = write("ks.json", std::string(R"({"r": )") + kJoukowski +
                                         R"(, "R": 0, "A": {"n": 2, "entries": [[1,0],[0.5,0],[0,0],[-1,0]]}})");
    const auto k = invoke({"kspectral", in.string()});
    REQUIRE(k.code == 0);
    CHECK(std::abs(Json::parse(k.out)["C_rR"].get<double>() - 1.0) < 1e-12);
    const auto ac = write("ac.json", std::string(R"({"r": )") + kJoukowski + "}");
    CHECK(invoke({"algebra-check", ac.string()}).code == 0);
  }

  TEST_CASE("exit codes") {
    const auto broken = write("broken.json", "{\"p\": [1, 2");
    CHECK(invoke({"represent", broken.string()}).code == cli::kInputError);
    CHECK(invoke({"represent", (scratch() / "missing.json").string()}).code == cli::kInputError);
    CHECK(invoke({"--tol", "-1", "algebra-check", broken.string()}).code == cli::kInputError);
    CHECK(invoke({"nonsense"}).code == cli::kInputError);

    const auto narrow = write("narrow.json", R"({"a_min": 1.3, "a_max": 1.5, "b_min": 1.4, "b_max": 1.6, "step": 0.1})");
    CHECK(invoke({"separate", narrow.string(), "--angle", "89"}).code == cli::kSearchFailure);
    const auto same = write("same.json", R"({"A": {"n": 1, "entries": [[1,0]]}, "B": {"n": 1, "entries": [[1.05,0]]},
                                             "C": {"n": 1, "entries": [[1,0]]}, "r": )" + std::string(kJoukowski) + "}");
    CHECK(invoke({"sylvester", same.string()}).code == cli::kSearchFailure);

    const auto rep = write("short.json", std::string(R"({"r": )") + kJoukowski +
                                             R"(, "rho": 0.9, "order": 8,
                                                 "phi": {"piecewise": [{"point": [1, 0], "value": 1}]},
                                                 "A": {"n": 2, "entries": [[0.9,0],[0,0],[0,0],[-1.1,0]]}})");
    CHECK(invoke({"--tol", "1e-12", "funmat", rep.string()}).code == cli::kConvergenceFailure);
  }
}
