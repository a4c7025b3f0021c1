// Acceptance gate: every primary quantitative guarantee of the toolkit,
// checked at its pinned tolerance. Prints one line per criterion and exits
// nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hbounds/coeff_bounds.hpp"
#include "hbounds/harmonic.hpp"
#include "hbounds/numerics.hpp"
#include "hbounds/oracle.hpp"
#include "hbounds/report.hpp"
#include "hbounds/section_radii.hpp"

using namespace hbounds;

namespace {

int failures = 0;

void line(int index, bool ok, const std::string& what,
          const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", index,
              what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct Check {
  int index;
  std::string what;
  std::function<std::pair<bool, std::string>()> run;
};

}  // namespace

int main() {
  std::vector<Check> checks;

  // 1. The printed diagonal-radius table reproduces within 5e-4, quickly.
  checks.push_back({1, "diagonal radius table within 5e-4", [] {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const Table1Row& row : table1_rows()) {
      double computed = radius_root(row.n, row.n, Family::alpha52).radius;
      worst = std::max(worst, std::abs(computed - row.published));
    }
    double dt = seconds_since(t0);
    bool ok = worst <= 5e-4 && dt < 10.0;
    return std::make_pair(ok, "worst |diff| = " + format_human(worst) +
                                  ", " + format_human(dt) + " s");
  }});

  // 2. Section-order thresholds are exactly the published integers.
  checks.push_back({2, "order thresholds 81 / 131 / 220", [] {
    std::int64_t a = n_threshold(0.25);
    std::int64_t b = n_threshold(std::exp(-1.0));
    std::int64_t c = n_threshold(0.5);
    bool ok = a == 81 && b == 131 && c == 220;
    return std::make_pair(ok, "got " + std::to_string(a) + " / " +
                                  std::to_string(b) + " / " +
                                  std::to_string(c));
  }});

  // 3. Least diagonal orders covering 1/4, 1/2, 3/4 are exact.
  checks.push_back({3, "least covering orders 10 / 29 / 98", [] {
    std::int64_t a = least_n_for_radius(0.25, Family::alpha52);
    std::int64_t b = least_n_for_radius(0.5, Family::alpha52);
    std::int64_t c = least_n_for_radius(0.75, Family::alpha52);
    bool ok = a == 10 && b == 29 && c == 98;
    return std::make_pair(ok, "got " + std::to_string(a) + " / " +
                                  std::to_string(b) + " / " +
                                  std::to_string(c));
  }});

  // 4. Order-n^17 coefficient envelopes, including the sharper large-n pair.
  checks.push_back({4, "n^17 envelopes (base and sharper constants)", [] {
    double ra = 0.0, rb = 0.0, sa = 0.0, sb = 0.0;
    for (std::int64_t n = 3; n <= 10000; ++n) {
      double n17 = std::pow(static_cast<double>(n), 17.0);
      double qa = a_bound(n, alpha_sh).bound / n17;
      double qb = b_bound(n, alpha_sh).bound / n17;
      ra = std::max(ra, qa);
      rb = std::max(rb, qb);
      if (n >= 19) sa = std::max(sa, qa);
      if (n >= 18) sb = std::max(sb, qb);
    }
    bool ok = ra <= 5.24e-6 && rb <= 2.32e-7 && sa <= 4.1006e-6 && sb <= 2.25e-7;
    return std::make_pair(ok, "max ratios " + format_human(ra) + ", " +
                                  format_human(rb) + "; sharper " +
                                  format_human(sa) + ", " + format_human(sb));
  }});

  // 5. Order-n^3 envelopes and the radical closed forms.
  checks.push_back({5, "n^3 envelopes and closed-form agreement", [] {
    double ra = 0.0, rb = 0.0;
    for (std::int64_t n = 3; n <= 10000; ++n) {
      double n3 = std::pow(static_cast<double>(n), 3.0);
      ra = std::max(ra, a_bound(n, alpha_conj).bound / n3);
      rb = std::max(rb, b_bound(n, alpha_conj).bound / n3);
    }
    double worst = 0.0;
    for (std::int64_t n = 3; n <= 500; ++n) {
      ClosedFormBounds cf = closed_form_bounds_52(n);
      double da = std::abs(cf.a - a_bound(n, alpha_conj).bound) / cf.a;
      double db = std::abs(cf.b - b_bound(n, alpha_conj).bound) / cf.b;
      worst = std::max(worst, std::max(da, db));
    }
    bool ok = ra <= 0.75 && rb <= 0.43 && worst <= 1e-10;
    return std::make_pair(ok, "max ratios " + format_human(ra) + ", " +
                                  format_human(rb) + "; closed-form rel " +
                                  format_human(worst));
  }});

  // 6. The envelope-ratio control function: bounded by 1, increasing,
  //    positive sign polynomial, near-1 at 1e6.
  checks.push_back({6, "ratio control function monotone below 1", [] {
    double prev = 0.0;
    bool mono = true, below = true;
    const int pts = 1000;
    for (int i = 0; i <= pts; ++i) {
      double x = 2.0 * std::pow(5e5, static_cast<double>(i) / pts);
      double v = capital_psi(x);
      below = below && v <= 1.0;
      mono = mono && v > prev;
      prev = v;
    }
    bool qpos = true;
    for (int i = 0; i <= 1000; ++i) {
      double x = 2.0 + (1000.0 - 2.0) * static_cast<double>(i) / 1000.0;
      qpos = qpos && q_sign(x) > 0.0;
    }
    double tail = capital_psi(1e6);
    bool ok = mono && below && qpos && tail > 0.999;
    return std::make_pair(ok, "Psi(1e6) = " + format_human(tail));
  }});

  // 7. Exact identities: rational floor, order-4 tail, majorant shift,
  //    floor limit, minimizer closed forms, stationarity.
  checks.push_back({7, "identity suite at pinned tolerances", [] {
    double w_floor = 0.0;
    for (int i = 1; i < 100; ++i) {
      double r = static_cast<double>(i) / 100.0;
      w_floor = std::max(w_floor, std::abs(distortion_floor(3.0, r) -
                                           distortion_floor3_rational(r)));
    }
    double w_tail = 0.0;
    for (std::int64_t n : {2, 5, 10}) {
      for (double r : {0.1, 0.3, 0.6}) {
        TailSpec direct{4, 59.0 / 50.0, n + 1};
        double cf = tail_closed_form_p4(n, r);
        w_tail = std::max(w_tail, std::abs(cf - tail_sum(direct, r)) / cf);
      }
    }
    double w_shift = 0.0;
    for (std::int64_t n : {3, 10, 57}) {
      for (double r : {0.05, 0.3, 0.8}) {
        double lhs = log_phi_growth(n, r, alpha_sh);
        double rhs = std::log((static_cast<double>(n) - 1.0) /
                              static_cast<double>(n)) +
                     log_psi_growth(n - 1, r, alpha_sh);
        w_shift = std::max(w_shift, std::abs(std::expm1(lhs - rhs)));
      }
    }
    double w_lim = std::abs(distortion_floor(17.0, 1e-6) - 1.0);
    double w_min = 0.0;
    for (std::int64_t n : {2, 3, 7}) {
      MinimizeResult m = minimize_scalar(
          [n](double r) { return log_psi_growth(n, r, alpha_sh); }, 1e-6,
          1.0 - 1e-6);
      w_min = std::max(w_min, std::abs(m.x - tau_minimizer(n, alpha_sh)));
    }
    double w_stat = 0.0;
    const double h = 1e-7;
    for (std::int64_t n : {3, 25}) {
      double tau = tau_minimizer(n, alpha_sh);
      double d = (log_psi_growth(n, tau + h, alpha_sh) -
                  log_psi_growth(n, tau - h, alpha_sh)) /
                 (2.0 * h);
      w_stat = std::max(w_stat, std::abs(d));
    }
    bool ok = w_floor <= 1e-14 && w_tail <= 1e-12 && w_shift <= 1e-12 &&
              w_lim <= 1e-4 && w_min <= 1e-8 && w_stat <= 1e-4;
    return std::make_pair(
        ok, "floor " + format_human(w_floor) + ", tail " + format_human(w_tail) +
                ", shift " + format_human(w_shift) + ", limit " +
                format_human(w_lim) + ", minimizer " + format_human(w_min) +
                ", stationarity " + format_human(w_stat));
  }});

  // 8. Slack chain gates at n = 20 and the certified-radius dominance sweep.
  checks.push_back({8, "slack chain gates and curve dominance", [] {
    SlackChain c = t_bound_chain(20);
    bool gates = c.t1 <= 0.000555 && c.t2 <= 4787.08 * 1.01 &&
                 c.t3 <= 0.333 * 1.01 && c.value <= 0.885 * 1.01;
    bool below_one = true;
    for (std::int64_t n = 20; n <= 10000; ++n) {
      below_one = below_one && t_bound_chain(n).value < 1.0;
    }
    double min_gap = 1.0;
    for (std::int64_t n : {20, 30, 50, 100, 300, 1000, 3000, 10000}) {
      double gap = radius_root(n, n, Family::alpha52).radius -
                   log_radius_curve(n, RefCurve::order52).r_lower;
      min_gap = std::min(min_gap, gap);
    }
    bool ok = gates && below_one && min_gap >= 0.0;
    return std::make_pair(ok, "t1 = " + format_human(c.t1) + ", t " +
                                  format_human(c.value) + ", min gap " +
                                  format_human(min_gap));
  }});

  // 9. Brute-force probe never contradicts an analytic certificate.
  checks.push_back({9, "oracle cross-checks stay consistent", [] {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    double worst = 1.0;
    for (std::int64_t n : {2, 3, 5, 10}) {
      for (Family fam : {Family::alpha52, Family::alpha17}) {
        OracleVerdict v = cross_check(n, fam);
        ok = ok && v.consistent;
        worst = std::min(worst, v.estimated_radius - v.guaranteed_radius);
      }
    }
    double dt = seconds_since(t0);
    ok = ok && worst >= -1e-6 && dt < 120.0;
    return std::make_pair(ok, "min estimate-certificate gap " +
                                  format_human(worst) + ", " +
                                  format_human(dt) + " s");
  }});

  // 10. The harness itself can reject: a tampered zero-tolerance claim fails,
  //     and the report serialization is byte-deterministic.
  checks.push_back({10, "harness self-test and deterministic report", [] {
    double computed = radius_root(2, 2, Family::alpha52).radius;
    bool can_fail =
        judge(ClaimKind::eq, 0.0635798, computed, 0.0) == ClaimStatus::fail;
    VerificationReport rep;
    rep.claims.push_back({"determinism.anchor", 0.0635798, computed, 5e-4,
                          judge(ClaimKind::eq, 0.0635798, computed, 5e-4),
                          ClaimKind::eq, "fixed anchor claim"});
    bool deterministic = report_to_json(rep) == report_to_json(rep);
    bool judged = rep.claims[0].status == ClaimStatus::pass;
    bool ok = can_fail && deterministic && judged;
    return std::make_pair(ok, std::string("zero-tolerance rejection ") +
                                  (can_fail ? "works" : "broken") +
                                  ", serialization " +
                                  (deterministic ? "stable" : "unstable"));
  }});

  for (const Check& c : checks) {
    std::pair<bool, std::string> r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    line(c.index, r.first, c.what, r.second);
  }

  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", checks.size());
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
