#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "pseudospline/service.hpp"
#include "reference_values.hpp"

using namespace pseudospline;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PSEUDOSPLINE_EXE) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string& args) {
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      cells.push_back(cell);
    }
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("symbol") {
  const Json j = run_json("symbol pseudo 3 3 3");
  CHECK(j["b"]["coeffs"] == Json::array({"-4/3", "11/3", "-4/3"}));
  CHECK(run_json("symbol pseudo 2 1 1")["a"]["coeffs"] == Json::array({"1/2", "1", "1/2"}));

  const Run lian = run("symbol lian 4 1");
  CHECK(lian.code == 2);
  CHECK(lian.out.find("arity must be odd") != std::string::npos);
  CHECK(run("symbol pseudo 2 2 4").code == 2);
  CHECK(run("symbol pseudo 2 2").code == 2);
  CHECK(run("symbol nope 2 2").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("symbol custom 2 -1 1/2 1 1/2").code == 0);
}

TEST_CASE("regularity") {
  CHECK(run_json("regularity pseudo 2 2 3")["display"] == "1.19265");
  CHECK(run_json("regularity pseudo 3 6 7")["display"] == "1.88409");
  CHECK(run_json("regularity pseudo 4 7 7")["display"] == "2.35154");
  const Run text = run("regularity pseudo 3 3 3 --format text");
  CHECK(text.out.rfind("regularity 1.81734", 0) == 0);
  CHECK(run("regularity pseudo 2 2 3 --format csv").code == 2);
  // even symmetric b has no folded-matrix analysis
  const Run dual = run("regularity dd-dual 3 1");
  CHECK(dual.code == 2);
  CHECK(dual.out.find("not odd symmetric") != std::string::npos);
  // a lower bound still exits 0
  const Json bound = run_json("regularity custom 2 -2 1/8 1/4 3/8 1/2 3/8 1/4 1/8");
  CHECK(bound["exact"] == false);
  CHECK(bound["positivity"] == "nonneg");
}

TEST_CASE("json output re-serializes byte-identically") {
  for (const char* args : {"symbol pseudo 4 5 3", "symbol tension 3 1/3", "regularity pseudo 2 6 5",
                           "regularity lian 5 2", "sample bspline 3 2 --levels 2 --format json",
                           "sweep-tension 4 --steps 3 --format json", "table 2 5 2 --format json"}) {
    const Run r = run(args);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
  }
  const Run sym = run("symbol pseudo 4 5 3");
  CHECK(to_json(scheme_from_json(Json::parse(sym.out))).dump(2) + "\n" == sym.out);
  const Run reg = run("regularity pseudo 4 5 3");
  CHECK(to_json(report_from_json(Json::parse(reg.out))).dump(2) + "\n" == reg.out);
}

TEST_CASE("table blocks match the reference values") {
  for (int m = 2; m <= 4; ++m) {
    const Run r = run("table " + std::to_string(m) + " 7 3 --format csv");
    REQUIRE(r.code == 0);
    const auto rows = csv_rows(r.out);
    REQUIRE(rows.size() > 1);
    CHECK(rows[0] == std::vector<std::string>{"m", "n", "lprime", "regularity"});
    int matched = 0;
    for (const auto& cell : kRegularityTable) {
      if (cell.m != m) {
        continue;
      }
      for (const auto& row : rows) {
        if (row[0] == std::to_string(m) && row[1] == std::to_string(cell.n) && row[2] == std::to_string(cell.lprime)) {
          CHECK(std::fabs(std::stod(row[3]) - cell.regularity) <= 1e-5);
          ++matched;
        }
      }
    }
    CHECK(matched == 19);
  }
  CHECK(run("table 3 7 3").out == run("table 3 7 3").out);
  CHECK(run("table 3 7 3").out.find("1.81734") != std::string::npos);
  CHECK(run("table 10 7 3").code == 2);
  CHECK(run("table 2 13 3").code == 2);
}

TEST_CASE("sample") {
  const auto hat = csv_rows(run("sample bspline 2 1 --levels 6").out);
  CHECK(hat[0] == std::vector<std::string>{"t", "value"});
  double peak = 0;
  for (std::size_t i = 1; i < hat.size(); ++i) {
    peak = std::max(peak, std::stod(hat[i][1]));
  }
  CHECK(peak == 1.0);

  const auto dd = csv_rows(run("sample dd-primal 2 1 --levels 6").out);
  for (std::size_t i = 1; i < dd.size(); ++i) {
    const double t = std::stod(dd[i][0]);
    if (t == std::floor(t)) {
      CHECK(std::stod(dd[i][1]) == (t == 0.0 ? 1.0 : 0.0));
    }
  }

  const SchemeSpec s = make_pseudo_spline(3, 3, 3);
  const Json j = run_json("sample pseudo 3 3 3 --levels 5 --format json");
  const Rational width = Rational::parse(j["support"]["hi"].get<std::string>()) -
                         Rational::parse(j["support"]["lo"].get<std::string>());
  CHECK(width == Rational(s.a.high() - s.a.low(), 2));

  const auto path = std::filesystem::temp_directory_path() / "pseudospline_sample_test.csv";
  CHECK(run("sample bspline 2 1 --levels 3 --out " + path.string()).code == 0);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "t,value");
  std::filesystem::remove(path);

  CHECK(run("sample bspline 2 1 --levels 3 --out /nonexistent-dir/x.csv").code == 3);
  CHECK(run("sample bspline 2 1 --levels 13").code == 2);
}

TEST_CASE("sweep-tension") {
  const auto rows = csv_rows(run("sweep-tension 2 --steps 5").out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"omega", "rho", "regularity"});
  CHECK(std::stod(rows[1][2]) == doctest::Approx(1.0));
  CHECK(std::stod(rows[5][2]) == doctest::Approx(2.0));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double w = std::stod(rows[i][0]);
    CHECK(std::fabs(std::stod(rows[i][2]) - tension_closed_form(2, w)) <= 1e-10);
  }
  const auto ternary = csv_rows(run("sweep-tension 3 --steps 2").out);
  CHECK(std::stod(ternary[2][1]) == doctest::Approx(11.0 / 27.0));
  CHECK(run("sweep-tension 2 --steps 1").code == 2);
}

TEST_CASE("dd-curve") {
  const auto rows = csv_rows(run("dd-curve 2 --lprime-max 3 --steps 2").out);
  CHECK(rows[0] == std::vector<std::string>{"m", "lprime", "omega", "x", "regularity", "exact"});
  // nodes at omega = 1 are the primal DD schemes
  bool saw_node = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i][1] == "1" && rows[i][2] == "1") {
      CHECK(std::stod(rows[i][4]) == doctest::Approx(2.0));
      saw_node = true;
    }
  }
  CHECK(saw_node);
  CHECK(run("dd-curve 8").code == 2);
}

TEST_CASE("verify") {
  for (const char* suite : {"lp1", "dual-conjecture", "rioul"}) {
    const Run r = run(std::string("verify ") + suite);
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  CHECK(run("verify nonsense").code == 2);
}

TEST_CASE("service responses equal CLI output for random queries") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> arity(2, 5);
  std::uniform_int_distribution<int> small(0, 3);
  for (int i = 0; i < 20; ++i) {
    const int m = arity(rng);
    std::string positional;
    QueryParams params{{"m", std::to_string(m)}};
    switch (i % 4) {
      case 0: {
        const int lp = small(rng);
        const int n = 2 * lp + small(rng) + 1;
        positional = "pseudo " + std::to_string(m) + " " + std::to_string(n) + " " + std::to_string(2 * lp + 1);
        params.insert({{"family", "pseudo"}, {"n", std::to_string(n)}, {"l", std::to_string(2 * lp + 1)}});
        break;
      }
      case 1: {
        const int lp = small(rng);
        positional = "dd-primal " + std::to_string(m) + " " + std::to_string(lp);
        params.insert({{"family", "dd-primal"}, {"lprime", std::to_string(lp)}});
        break;
      }
      case 2: {
        const std::string w = std::to_string(small(rng)) + "/3";
        positional = "tension " + std::to_string(m) + " " + w;
        params.insert({{"family", "tension"}, {"omega", w}});
        break;
      }
      default: {
        const int n = small(rng) + 1;
        positional = "bspline " + std::to_string(m) + " " + std::to_string(n);
        params.insert({{"family", "bspline"}, {"n", std::to_string(n)}});
        break;
      }
    }
    CAPTURE(positional);
    const Response resp = handle_scheme(params);
    REQUIRE(resp.status == 200);
    CHECK(run_json("symbol " + positional) == resp.body["spec"]);
    CHECK(run_json("regularity " + positional) == resp.body["regularity"]);
  }
}
