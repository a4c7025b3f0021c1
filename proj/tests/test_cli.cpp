#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#ifndef HBOUNDS_BIN
#error "HBOUNDS_BIN must point at the command-line binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(HBOUNDS_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_occurrences(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

// Extracts the points="..." payload of the first polyline whose class
// attribute matches, and parses it into coordinate pairs.
std::vector<std::pair<double, double>> polyline_points(const std::string& svg,
                                                       const std::string& cls) {
  std::string marker = "class=\"" + cls + "\"";
  std::size_t at = svg.find(marker);
  REQUIRE(at != std::string::npos);
  std::size_t pts = svg.find("points=\"", at);
  REQUIRE(pts != std::string::npos);
  pts += 8;
  std::size_t end = svg.find('"', pts);
  REQUIRE(end != std::string::npos);
  std::istringstream ss(svg.substr(pts, end - pts));
  std::vector<std::pair<double, double>> result;
  std::string pair;
  while (ss >> pair) {
    std::size_t comma = pair.find(',');
    REQUIRE(comma != std::string::npos);
    result.emplace_back(std::stod(pair.substr(0, comma)),
                        std::stod(pair.substr(comma + 1)));
  }
  return result;
}

}  // namespace

TEST_CASE("usage errors exit with 64") {
  CHECK(run("").exit_code == 64);
  CHECK(run("nosuchcmd").exit_code == 64);
  CHECK(run("bounds 2 5 alpha52").exit_code == 64);
  CHECK(run("bounds 5 3 alpha52").exit_code == 64);
  CHECK(run("radius 0 1").exit_code == 64);
  CHECK(run("threshold 0.01 alpha17").exit_code == 64);
  CHECK(run("threshold 1.0 alpha17").exit_code == 64);
  CHECK(run("bounds 3 4 nosuchfamily").exit_code == 64);
  CHECK(run("plot nosuchmode 3..4").exit_code == 64);
  CHECK(run("plot bounds xyz").exit_code == 64);
  CHECK(run("plot bounds 2..50").exit_code == 64);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("bounds: CSV shape, envelope anchor, determinism") {
  RunResult r = run("bounds 3 3 alpha52");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,a_bound,a_envelope,b_bound,b_envelope,minimizer_a,"
                    "minimizer_b\n",
                    0) == 0);
  CHECK(r.out.find("\n3,") != std::string::npos);
  CHECK(r.out.find(",20.25,") != std::string::npos);
  CHECK(r.out.find("\r") == std::string::npos);  // LF line endings only

  RunResult again = run("bounds 3 3 alpha52");
  CHECK(again.out == r.out);

  RunResult range = run("bounds 3 12 alpha17");
  CHECK(range.exit_code == 0);
  CHECK(count_occurrences(range.out, "\n") == 11);  // header + 10 rows
}

TEST_CASE("radius: identity section saturates, deeper sections solve") {
  RunResult ident = run("radius 1 1 alpha52");
  CHECK(ident.exit_code == 0);
  CHECK(ident.out.find("saturated true") != std::string::npos);

  RunResult r = run("radius 50 50 alpha52 --json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["n"] == 50);
  CHECK(doc["family"] == "alpha52");
  CHECK(std::abs(doc["radius"].get<double>() - 0.6257787071) < 1e-6);
  CHECK(!doc["saturated"].get<bool>());
  CHECK(doc["lo"].get<double>() <= doc["radius"].get<double>());

  RunResult def = run("radius 3 3 --json");  // default family alpha52
  auto doc3 = nlohmann::json::parse(def.out);
  CHECK(std::abs(doc3["radius"].get<double>() - 0.09526339469) < 1e-6);
}

TEST_CASE("threshold: both families, flag and positional family forms") {
  CHECK(run("threshold 0.25 alpha17").out == "81\n");
  CHECK(run("threshold 0.25 --family alpha17").out == "81\n");
  CHECK(run("threshold 0.25 alpha52").out == "10\n");
  CHECK(run("threshold 0.75 alpha52").out == "98\n");
  RunResult j = run("threshold 0.5 alpha17 --json");
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["least_n"] == 220);
}

TEST_CASE("table1: all pinned rows reproduce") {
  RunResult r = run("table1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,published,computed,status\n", 0) == 0);
  CHECK(count_occurrences(r.out, ",pass\n") == 8);
  CHECK(r.out.find("\n354,") != std::string::npos);

  RunResult j = run("table1 --json");
  auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 8);
  CHECK(doc[0]["n"] == 2);
  CHECK(doc[0]["status"] == "pass");
}

TEST_CASE("verify: report file, exit code, IO failure") {
  std::string path = "cli_verify_report.json";
  std::remove(path.c_str());
  RunResult r = run("verify --skip-oracle --n-cap 2000 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[pass]") != std::string::npos);
  CHECK(r.out.find("fail=0") != std::string::npos);

  auto doc = nlohmann::json::parse(slurp(path));
  CHECK(doc["schema"] == 1);
  CHECK(doc["claims"].size() >= 30);
  for (const auto& claim : doc["claims"]) {
    CHECK(claim["status"] != "fail");
  }

  RunResult bad =
      run("verify --skip-oracle --n-cap 200 --out /nonexistent-dir/x.json");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("plot radius-curve: one sample per order plus overlays") {
  std::string path = "cli_radius_curve.svg";
  std::remove(path.c_str());
  RunResult r = run("plot radius-curve 2..100 alpha52 --out " + path);
  CHECK(r.exit_code == 0);
  std::string svg = slurp(path);
  CHECK(svg.find("<svg") != std::string::npos);

  auto radius = polyline_points(svg, "radius");
  CHECK(radius.size() == 99);
  CHECK(radius.front().first == doctest::Approx(2.0));
  CHECK(radius.back().first == doctest::Approx(100.0));
  CHECK(radius.front().second == doctest::Approx(0.06358).epsilon(1e-3));
  for (std::size_t i = 1; i < radius.size(); ++i) {
    CHECK(radius[i].second > radius[i - 1].second);
  }

  auto lower = polyline_points(svg, "log-lower-bound");
  CHECK(lower.size() == 81);  // n = 20..100
  for (std::size_t i = 0; i < lower.size(); ++i) {
    // overlay stays below the certified radius curve
    std::size_t idx = static_cast<std::size_t>(std::lround(lower[i].first)) - 2;
    REQUIRE(idx < radius.size());
    CHECK(lower[i].second <= radius[idx].second);
  }
  CHECK(svg.find("classical-quarter") != std::string::npos);
}

TEST_CASE("plot disk-image: certified disk circle radius") {
  std::string path = "cli_disk.svg";
  std::remove(path.c_str());
  RunResult r = run("plot disk-image n=4 --out " + path);
  CHECK(r.exit_code == 0);
  std::string svg = slurp(path);
  CHECK(svg.find("class=\"certified-disk\"") != std::string::npos);
  CHECK(svg.find("r=\"0.12535\"") != std::string::npos);
}

TEST_CASE("plot bounds: envelope series grows monotonically") {
  std::string path = "cli_bounds.svg";
  std::remove(path.c_str());
  RunResult r = run("plot bounds 3..50 alpha17 --out " + path);
  CHECK(r.exit_code == 0);
  std::string svg = slurp(path);
  auto env = polyline_points(svg, "a-envelope");
  CHECK(env.size() == 48);
  for (std::size_t i = 1; i < env.size(); ++i) {
    CHECK(env[i].second > env[i - 1].second);
  }
  auto bound = polyline_points(svg, "a-bound");
  REQUIRE(bound.size() == 48);
  for (std::size_t i = 0; i < bound.size(); ++i) {
    CHECK(bound[i].second <= env[i].second);  // log-envelope dominates
  }
}
