#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hbounds/coeff_bounds.hpp"
#include "hbounds/harmonic.hpp"
#include "hbounds/numerics.hpp"
#include "hbounds/report.hpp"
#include "hbounds/section_radii.hpp"
#include "hbounds/svg.hpp"

namespace {

using namespace hbounds;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitSolverOrIo = 2;
constexpr int kExitUsage = 64;

Family parse_family(const std::string& flag_value,
                    const std::string& positional_value) {
  const std::string& chosen =
      !flag_value.empty() ? flag_value
                          : (!positional_value.empty() ? positional_value
                                                       : std::string("alpha52"));
  if (chosen == "alpha17") return Family::alpha17;
  if (chosen == "alpha52") return Family::alpha52;
  throw std::domain_error("family must be alpha17 or alpha52, got '" + chosen +
                          "'");
}

const char* family_name(Family f) {
  return f == Family::alpha17 ? "alpha17" : "alpha52";
}

double family_alpha(Family f) {
  return f == Family::alpha17 ? alpha_sh : alpha_conj;
}

void note_threads_env() {
  if (const char* v = std::getenv("HBOUNDS_THREADS")) {
    std::cerr << "note: HBOUNDS_THREADS=" << v
              << " acknowledged; execution is single-threaded\n";
  }
}

// Writes content to path, or to stdout when path is empty.
int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error: cannot write to '" << path << "'\n";
    return kExitSolverOrIo;
  }
  return kExitOk;
}

int cmd_bounds(std::int64_t n_min, std::int64_t n_max, Family family,
               const std::string& out_path) {
  if (n_min < 3 || n_min > n_max) {
    std::cerr << "usage error: requires 3 <= n_min <= n_max\n";
    return kExitUsage;
  }
  double alpha = family_alpha(family);
  std::string csv =
      "n,a_bound,a_envelope,b_bound,b_envelope,minimizer_a,minimizer_b\n";
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    BoundResult a = a_bound(n, alpha);
    BoundResult b = b_bound(n, alpha);
    csv += std::to_string(n) + ',' + format_double(a.bound) + ',' +
           format_double(a.envelope) + ',' + format_double(b.bound) + ',' +
           format_double(b.envelope) + ',' + format_double(a.minimizer) + ',' +
           format_double(b.minimizer) + '\n';
  }
  return write_output(out_path, csv);
}

nlohmann::ordered_json radius_json(const RadiusResult& res) {
  nlohmann::ordered_json j;
  j["n"] = res.n;
  j["m"] = res.m;
  j["family"] = family_name(res.family);
  j["radius"] = res.radius;
  j["residual"] = res.residual;
  j["lo"] = res.lo;
  j["hi"] = res.hi;
  j["saturated"] = res.saturated;
  return j;
}

int cmd_radius(std::int64_t n, std::int64_t m, Family family, double tol,
               int grid, bool json) {
  if (n < 1 || m < 1) {
    std::cerr << "usage error: requires n, m >= 1\n";
    return kExitUsage;
  }
  RadiusResult res;
  if (n == 1 && m == 1) {
    // the (1,1) section is the identity map, univalent on the whole disk;
    // report the saturated near-1 radius instead of solving
    res = {n, m, family, 1.0 - 1e-9, 0.0, 1.0 - 1e-9, 1.0 - 1e-9, true};
  } else {
    SolverConfig cfg;
    cfg.abs_tol_x = tol;
    cfg.grid_points = grid;
    res = radius_root(n, m, family, cfg);
  }
  if (json) {
    std::cout << radius_json(res).dump(2) << "\n";
  } else {
    std::cout << "family    " << family_name(res.family) << "\n"
              << "section   (" << res.n << ", " << res.m << ")\n"
              << "radius    " << format_human(res.radius) << "\n"
              << "residual  " << format_human(res.residual) << "\n"
              << "bracket   [" << format_human(res.lo) << ", "
              << format_human(res.hi) << "]\n"
              << "saturated " << (res.saturated ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int cmd_threshold(double r, Family family, bool json) {
  std::int64_t n = family == Family::alpha17 ? n_threshold(r)
                                             : least_n_for_radius(r, family);
  if (json) {
    nlohmann::ordered_json j;
    j["r"] = r;
    j["family"] = family_name(family);
    j["least_n"] = n;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << n << "\n";
  }
  return kExitOk;
}

int cmd_table1(bool json, const std::string& out_path) {
  struct Row {
    std::int64_t n;
    double published;
    double computed;
    ClaimStatus status;
  };
  std::vector<Row> rows;
  for (const Table1Row& row : table1_rows()) {
    double computed = radius_root(row.n, row.n, Family::alpha52).radius;
    rows.push_back({row.n, row.published, computed,
                    judge(ClaimKind::eq, row.published, computed, 5e-4)});
  }
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Row& r : rows) {
      nlohmann::ordered_json j;
      j["n"] = r.n;
      j["published"] = r.published;
      j["computed"] = r.computed;
      j["status"] = to_string(r.status);
      arr.push_back(std::move(j));
    }
    std::cout << arr.dump(2) << "\n";
    return kExitOk;
  }
  std::string text = "n,published,computed,status\n";
  for (const Row& r : rows) {
    text += std::to_string(r.n) + ',' + format_double(r.published) + ',' +
            format_double(r.computed) + ',' + to_string(r.status) + '\n';
  }
  return write_output(out_path, text);
}

int cmd_verify(const std::string& out_path, std::int64_t n_cap, bool json,
               bool skip_oracle) {
  VerifyOptions opts;
  opts.n_cap = n_cap;
  opts.run_oracle = !skip_oracle;
  VerificationReport rep = run_verification(opts);

  int pass = 0, fail = 0, boundary = 0, info = 0;
  for (const ClaimRecord& c : rep.claims) {
    switch (c.status) {
      case ClaimStatus::pass: ++pass; break;
      case ClaimStatus::fail: ++fail; break;
      case ClaimStatus::boundary_sensitive: ++boundary; break;
      case ClaimStatus::informational: ++info; break;
    }
    std::cout << '[' << to_string(c.status) << "] " << c.id
              << " computed=" << format_human(c.computed_value)
              << " published=" << format_human(c.published_value)
              << " tol=" << format_human(c.tolerance) << "\n";
  }
  std::cout << "claims=" << rep.claims.size() << " pass=" << pass
            << " fail=" << fail << " boundary-sensitive=" << boundary
            << " informational=" << info << "\n";

  std::string payload = report_to_json(rep);
  if (json) std::cout << payload;
  if (!out_path.empty()) {
    int code = write_output(out_path, payload);
    if (code != kExitOk) return code;
    std::cout << "report written to " << out_path << "\n";
  }
  return rep.all_passed() ? kExitOk : kExitVerifyFail;
}

struct PlotParams {
  std::int64_t range_lo = -1;
  std::int64_t range_hi = -1;
  std::int64_t n = -1;
  std::string family;
};

bool parse_plot_token(const std::string& tok, PlotParams& p) {
  if (tok == "alpha17" || tok == "alpha52") {
    p.family = tok;
    return true;
  }
  if (tok.rfind("n=", 0) == 0) {
    try {
      p.n = std::stoll(tok.substr(2));
    } catch (...) {
      return false;
    }
    return true;
  }
  auto dots = tok.find("..");
  if (dots != std::string::npos) {
    try {
      p.range_lo = std::stoll(tok.substr(0, dots));
      p.range_hi = std::stoll(tok.substr(dots + 2));
    } catch (...) {
      return false;
    }
    return true;
  }
  return false;
}

int cmd_plot(const std::string& mode, const std::vector<std::string>& params,
             const std::string& family_flag, const std::string& out_path) {
  PlotParams p;
  for (const std::string& tok : params) {
    if (!parse_plot_token(tok, p)) {
      std::cerr << "usage error: unrecognized plot parameter '" << tok << "'\n";
      return kExitUsage;
    }
  }
  Family family = parse_family(family_flag, p.family);

  std::string svg;
  if (mode == "bounds") {
    std::int64_t lo = p.range_lo < 0 ? 3 : p.range_lo;
    std::int64_t hi = p.range_hi < 0 ? 50 : p.range_hi;
    if (lo < 3 || lo > hi) {
      std::cerr << "usage error: bounds plot requires 3 <= lo <= hi\n";
      return kExitUsage;
    }
    double alpha = family_alpha(family);
    PlotSeries sa{"a-bound", {}}, sae{"a-envelope", {}};
    PlotSeries sb{"b-bound", {}}, sbe{"b-envelope", {}};
    for (std::int64_t n = lo; n <= hi; ++n) {
      double x = static_cast<double>(n);
      BoundResult a = a_bound(n, alpha);
      BoundResult b = b_bound(n, alpha);
      sa.points.emplace_back(x, std::log10(a.bound));
      sae.points.emplace_back(x, std::log10(a.envelope));
      sb.points.emplace_back(x, std::log10(b.bound));
      sbe.points.emplace_back(x, std::log10(b.envelope));
    }
    svg = svg_line_plot({sa, sae, sb, sbe},
                        std::string("coefficient bounds, ") +
                            family_name(family),
                        "n", "log10(bound)");
  } else if (mode == "radius-curve") {
    std::int64_t lo = p.range_lo < 0 ? 2 : p.range_lo;
    std::int64_t hi = p.range_hi < 0 ? 100 : p.range_hi;
    if (lo < 2 || lo > hi) {
      std::cerr << "usage error: radius-curve requires 2 <= lo <= hi\n";
      return kExitUsage;
    }
    PlotSeries radii{"radius", {}};
    PlotSeries lower{"log-lower-bound", {}};
    PlotSeries classical{"classical-quarter", {}};
    for (std::int64_t n = lo; n <= hi; ++n) {
      radii.points.emplace_back(static_cast<double>(n),
                                radius_root(n, n, family).radius);
      if (family == Family::alpha52 && n >= 20) {
        lower.points.emplace_back(static_cast<double>(n),
                                  log_radius_curve(n, RefCurve::order52).r_lower);
      }
    }
    classical.points.emplace_back(static_cast<double>(lo), szego_radius);
    classical.points.emplace_back(static_cast<double>(hi), szego_radius);
    std::vector<PlotSeries> series{radii};
    if (!lower.points.empty()) series.push_back(lower);
    series.push_back(classical);
    svg = svg_line_plot(series,
                        std::string("diagonal univalence radius, ") +
                            family_name(family),
                        "n", "radius");
  } else if (mode == "disk-image") {
    std::int64_t n = p.n < 0 ? 4 : p.n;
    if (n < 2) {
      std::cerr << "usage error: disk-image requires n >= 2\n";
      return kExitUsage;
    }
    double guaranteed = radius_root(n, n, family).radius;
    CoefficientSeries sec = harmonic_koebe(static_cast<std::size_t>(n));
    svg = svg_disk_image(sec, guaranteed);
  } else {
    std::cerr << "usage error: plot mode must be bounds, radius-curve, or "
                 "disk-image\n";
    return kExitUsage;
  }
  return write_output(out_path.empty() ? "plot.svg" : out_path, svg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hbounds: coefficient bounds and partial-sum univalence radii for "
      "normalized planar harmonic mappings"};
  app.require_subcommand(1);

  std::string family_flag, family_pos;
  std::string out_path;
  double tol = 1e-12;
  int grid = 10000;
  std::int64_t n_cap = 10000;
  bool json = false;

  // bounds
  auto* sc_bounds = app.add_subcommand(
      "bounds", "CSV of coefficient bounds and envelopes for a range of n");
  std::int64_t b_nmin = 0, b_nmax = 0;
  sc_bounds->add_option("n_min", b_nmin, "first index (>= 3)")->required();
  sc_bounds->add_option("n_max", b_nmax, "last index")->required();
  sc_bounds->add_option("family-name", family_pos, "alpha17 or alpha52");
  sc_bounds->add_option("--family", family_flag, "alpha17 or alpha52");
  sc_bounds->add_option("--out", out_path, "output path (default stdout)");

  // radius
  auto* sc_radius = app.add_subcommand(
      "radius", "univalence radius of the (n, m) section");
  std::int64_t r_n = 0, r_m = 0;
  sc_radius->add_option("n", r_n, "analytic-part order")->required();
  sc_radius->add_option("m", r_m, "co-analytic-part order")->required();
  sc_radius->add_option("family-name", family_pos, "alpha17 or alpha52");
  sc_radius->add_option("--family", family_flag, "alpha17 or alpha52");
  sc_radius->add_option("--tol", tol, "bisection tolerance in r");
  sc_radius->add_option("--grid", grid, "bracketing grid points");
  sc_radius->add_flag("--json", json, "emit JSON");

  // threshold
  auto* sc_threshold = app.add_subcommand(
      "threshold", "least section order covering a given radius");
  double t_r = 0.0;
  sc_threshold->add_option("r", t_r, "target radius")->required();
  sc_threshold->add_option("family-name", family_pos, "alpha17 or alpha52");
  sc_threshold->add_option("--family", family_flag, "alpha17 or alpha52");
  sc_threshold->add_flag("--json", json, "emit JSON");

  // table1
  auto* sc_table1 = app.add_subcommand(
      "table1", "reproduce the printed diagonal-radius table");
  sc_table1->add_flag("--json", json, "emit JSON");
  sc_table1->add_option("--out", out_path, "output path (default stdout)");

  // verify
  auto* sc_verify = app.add_subcommand(
      "verify", "run the full claim suite and write the JSON report");
  bool skip_oracle = false;
  sc_verify->add_option("--out", out_path,
                        "report path (default verification_report.json)");
  sc_verify->add_option("--n-cap", n_cap, "sweep cap (default 10000)");
  sc_verify->add_flag("--json", json, "also print the JSON report to stdout");
  sc_verify->add_flag("--skip-oracle", skip_oracle,
                      "skip the brute-force oracle cross-checks");

  // plot
  auto* sc_plot = app.add_subcommand("plot", "emit an SVG figure");
  std::string plot_mode;
  std::vector<std::string> plot_params;
  sc_plot->add_option("mode", plot_mode,
                      "bounds | radius-curve | disk-image")->required();
  sc_plot->add_option("params", plot_params,
                      "range A..B, n=K, or a family tag");
  sc_plot->add_option("--family", family_flag, "alpha17 or alpha52");
  sc_plot->add_option("--out", out_path, "output path (default plot.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  note_threads_env();
  try {
    if (sc_bounds->parsed()) {
      return cmd_bounds(b_nmin, b_nmax, parse_family(family_flag, family_pos),
                        out_path);
    }
    if (sc_radius->parsed()) {
      return cmd_radius(r_n, r_m, parse_family(family_flag, family_pos), tol,
                        grid, json);
    }
    if (sc_threshold->parsed()) {
      return cmd_threshold(t_r, parse_family(family_flag, family_pos), json);
    }
    if (sc_table1->parsed()) {
      return cmd_table1(json, out_path);
    }
    if (sc_verify->parsed()) {
      return cmd_verify(out_path.empty() ? "verification_report.json" : out_path,
                        n_cap, json, skip_oracle);
    }
    if (sc_plot->parsed()) {
      return cmd_plot(plot_mode, plot_params, family_flag, out_path);
    }
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoRootError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolverOrIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolverOrIo;
  }
  return kExitUsage;
}
