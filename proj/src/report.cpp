#include "hbounds/report.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

#include "json.hpp"

#include "hbounds/coeff_bounds.hpp"
#include "hbounds/harmonic.hpp"
#include "hbounds/numerics.hpp"
#include "hbounds/oracle.hpp"
#include "hbounds/section_radii.hpp"

namespace hbounds {

std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::eq: return "eq";
    case ClaimKind::integer: return "int";
    case ClaimKind::le: return "le";
    case ClaimKind::ge: return "ge";
    case ClaimKind::info: return "info";
  }
  return "unknown";
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::boundary_sensitive: return "boundary-sensitive";
    case ClaimStatus::informational: return "informational";
  }
  return "unknown";
}

ClaimStatus judge(ClaimKind kind, double published, double computed,
                  double tolerance) {
  if (kind == ClaimKind::info) return ClaimStatus::informational;
  if (!std::isfinite(computed)) return ClaimStatus::fail;
  switch (kind) {
    case ClaimKind::eq:
      return std::abs(computed - published) <= tolerance ? ClaimStatus::pass
                                                         : ClaimStatus::fail;
    case ClaimKind::integer: {
      long long diff = std::llround(computed) - std::llround(published);
      if (diff == 0) return ClaimStatus::pass;
      if (diff == 1 || diff == -1) return ClaimStatus::boundary_sensitive;
      return ClaimStatus::fail;
    }
    case ClaimKind::le:
      return computed <= published + tolerance ? ClaimStatus::pass
                                               : ClaimStatus::fail;
    case ClaimKind::ge:
      return computed >= published - tolerance ? ClaimStatus::pass
                                               : ClaimStatus::fail;
    default:
      return ClaimStatus::fail;
  }
}

bool VerificationReport::all_passed() const {
  for (const ClaimRecord& c : claims) {
    if (c.status == ClaimStatus::fail) return false;
  }
  return true;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {2, 0.0635798},  {3, 0.0952634}, {4, 0.12535},    {5, 0.153603},
      {10, 0.269796},  {50, 0.625779}, {100, 0.753905}, {354, 0.900055},
  };
  return rows;
}

namespace {

// Collects claims; a throwing computation is recorded as fail (or stays
// informational) with the diagnostic appended to the citation.
struct Builder {
  VerificationReport rep;

  void add(std::string id, ClaimKind kind, double published, double tolerance,
           std::string citation, const std::function<double()>& compute) {
    ClaimRecord rec;
    rec.id = std::move(id);
    rec.kind = kind;
    rec.published_value = published;
    rec.tolerance = tolerance;
    rec.citation = std::move(citation);
    try {
      rec.computed_value = compute();
      rec.status = judge(kind, published, rec.computed_value, tolerance);
    } catch (const std::exception& e) {
      rec.computed_value = std::numeric_limits<double>::quiet_NaN();
      rec.status = kind == ClaimKind::info ? ClaimStatus::informational
                                           : ClaimStatus::fail;
      rec.citation += std::string("; error: ") + e.what();
    }
    rep.claims.push_back(std::move(rec));
  }
};

double ratio_to_power(const BoundResult& b, double power) {
  return b.bound / std::pow(static_cast<double>(b.n), power);
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& opts) {
  Builder b;
  const std::int64_t cap = std::max<std::int64_t>(opts.n_cap, 20);

  // --- coefficient envelopes, n^17 growth family -------------------------
  b.add("envelope.a17", ClaimKind::le, 5.24e-6, 0.0,
        "published envelope 5.24e-6 n^17 for the analytic-part coefficients",
        [&] {
          double worst = 0.0;
          for (std::int64_t n = 3; n <= cap; ++n) {
            worst = std::max(worst, ratio_to_power(a_bound(n, alpha_sh), 17.0));
          }
          return worst;
        });
  b.add("envelope.b17", ClaimKind::le, 2.32e-7, 0.0,
        "published envelope 2.32e-7 n^17 for the co-analytic-part coefficients",
        [&] {
          double worst = 0.0;
          for (std::int64_t n = 3; n <= cap; ++n) {
            worst = std::max(worst, ratio_to_power(b_bound(n, alpha_sh), 17.0));
          }
          return worst;
        });
  b.add("envelope.a17.sharper", ClaimKind::le, 4.1006e-6, 0.0,
        "published sharper constant 4.1006e-6, judged against n^17 for n >= 19",
        [&] {
          double worst = 0.0;
          for (std::int64_t n = 19; n <= cap; ++n) {
            worst = std::max(worst, ratio_to_power(a_bound(n, alpha_sh), 17.0));
          }
          return worst;
        });
  b.add("envelope.b17.sharper", ClaimKind::le, 2.25e-7, 0.0,
        "published sharper constant 2.25e-7 against n^17 for n >= 18",
        [&] {
          double worst = 0.0;
          for (std::int64_t n = 18; n <= cap; ++n) {
            worst = std::max(worst, ratio_to_power(b_bound(n, alpha_sh), 17.0));
          }
          return worst;
        });
  b.add("envelope.a17.shifted", ClaimKind::info, 4.1006e-6, 0.0,
        "alternative reading of the sharper constant against (n-3)^17; "
        "reported for the record, judged on the n^17 reading above",
        [&] {
          double worst = 0.0;
          for (std::int64_t n = 19; n <= cap; ++n) {
            double shifted = std::pow(static_cast<double>(n - 3), 17.0);
            worst = std::max(worst, a_bound(n, alpha_sh).bound / shifted);
          }
          return worst;
        });

  // --- coefficient envelopes, n^3 growth family --------------------------
  b.add("envelope.a52", ClaimKind::le, 0.75, 0.0,
        "published envelope (3/4) n^3 for the analytic-part coefficients",
        [&] {
          double worst = 0.0;
          for (std::int64_t n = 3; n <= cap; ++n) {
            worst = std::max(worst, ratio_to_power(a_bound(n, alpha_conj), 3.0));
          }
          return worst;
        });
  b.add("envelope.b52", ClaimKind::le, 0.43, 0.0,
        "published envelope (43/100) n^3 for the co-analytic-part coefficients",
        [&] {
          double worst = 0.0;
          for (std::int64_t n = 3; n <= cap; ++n) {
            worst = std::max(worst, ratio_to_power(b_bound(n, alpha_conj), 3.0));
          }
          return worst;
        });
  b.add("closed-form.a52", ClaimKind::eq, 0.0, 1e-10,
        "radical closed form of the |a_n| bound vs the general minimization",
        [&] {
          double worst = 0.0;
          for (std::int64_t n = 3; n <= 500; ++n) {
            double general = a_bound(n, alpha_conj).bound;
            double closed = closed_form_bounds_52(n).a;
            worst = std::max(worst, std::abs(closed - general) / general);
          }
          return worst;
        });
  b.add("closed-form.b52", ClaimKind::eq, 0.0, 1e-10,
        "radical closed form of the |b_n| bound vs the general minimization",
        [&] {
          double worst = 0.0;
          for (std::int64_t n = 3; n <= 500; ++n) {
            double general = b_bound(n, alpha_conj).bound;
            double closed = closed_form_bounds_52(n).b;
            worst = std::max(worst, std::abs(closed - general) / general);
          }
          return worst;
        });

  // --- growth-ratio function and its sign polynomial ---------------------
  const int psi_grid = 1000;
  auto psi_x = [&](int i) {
    double lo = std::log(2.0), hi = std::log(1e6);
    return std::exp(lo + (hi - lo) * static_cast<double>(i) / (psi_grid - 1));
  };
  b.add("growth-ratio.le-one", ClaimKind::le, 1.0, 0.0,
        "ratio function bounded by 1 on [2, 1e6] (log grid, 1000 points)",
        [&] {
          double worst = 0.0;
          for (int i = 0; i < psi_grid; ++i) {
            worst = std::max(worst, capital_psi(psi_x(i)));
          }
          return worst;
        });
  b.add("growth-ratio.monotone", ClaimKind::eq, 0.0, 0.0,
        "ratio function strictly increasing: count of non-increasing steps",
        [&] {
          int bad = 0;
          double prev = capital_psi(psi_x(0));
          for (int i = 1; i < psi_grid; ++i) {
            double cur = capital_psi(psi_x(i));
            if (!(cur > prev)) ++bad;
            prev = cur;
          }
          return static_cast<double>(bad);
        });
  b.add("growth-ratio.at-1e6", ClaimKind::ge, 0.999, 0.0,
        "ratio function exceeds 0.999 at x = 1e6 (limit-1 behavior)",
        [&] { return capital_psi(1e6); });
  b.add("sign-poly.min", ClaimKind::ge, 0.0, 0.0,
        "sign polynomial positive on [2, 1e3] (1000-point grid minimum)",
        [&] {
          double worst = std::numeric_limits<double>::infinity();
          for (int i = 0; i < 1000; ++i) {
            double x = 2.0 + (1000.0 - 2.0) * static_cast<double>(i) / 999.0;
            worst = std::min(worst, q_sign(x));
          }
          return worst;
        });
  b.add("sign-poly.at-2", ClaimKind::eq, 8363520.0, 1e-3,
        "sign polynomial at x = 2 equals the exact integer 8363520",
        [&] { return q_sign(2.0); });
  b.add("sign-poly.route-agreement", ClaimKind::eq, 0.0, 1e-8,
        "factored vs expanded evaluation: worst relative difference",
        [&] {
          double worst = 0.0;
          for (int i = 0; i < 1000; ++i) {
            double x = 2.0 + (1000.0 - 2.0) * static_cast<double>(i) / 999.0;
            QSignRoutes r = q_sign_routes(x);
            double scale = std::max(std::abs(r.factored), 1.0);
            worst = std::max(worst, std::abs(r.direct - r.factored) / scale);
          }
          return worst;
        });

  // --- algebraic identities ----------------------------------------------
  b.add("identity.floor3", ClaimKind::eq, 0.0, 1e-14,
        "order-3 distortion floor vs its rational form: worst relative diff",
        [&] {
          double worst = 0.0;
          for (int i = 1; i < 1000; ++i) {
            double r = static_cast<double>(i) / 1000.0;
            double rational = distortion_floor3_rational(r);
            worst = std::max(
                worst, std::abs(distortion_floor(3.0, r) - rational) / rational);
          }
          return worst;
        });
  b.add("identity.tail4", ClaimKind::eq, 0.0, 1e-12,
        "p=4 tail: closed form vs direct summation on the 3x3 grid",
        [&] {
          double worst = 0.0;
          for (std::int64_t n : {2, 5, 10}) {
            for (double r : {0.1, 0.3, 0.6}) {
              double direct = tail_sum({4, 59.0 / 50.0, n + 1}, r);
              double closed = tail_closed_form_p4(n, r);
              worst = std::max(worst, std::abs(closed - direct) / direct);
            }
          }
          return worst;
        });
  b.add("identity.phi-shift", ClaimKind::eq, 0.0, 1e-12,
        "pointwise identity phi_n = ((n-1)/n) psi_{n-1}: worst relative diff",
        [&] {
          double worst = 0.0;
          for (std::int64_t n : {3, 5, 17, 100}) {
            for (double r : {0.05, 0.3, 0.7, 0.95}) {
              for (double alpha : {alpha_sh, alpha_conj}) {
                double lhs = log_phi_growth(n, r, alpha);
                double rhs = std::log((static_cast<double>(n) - 1.0) /
                                      static_cast<double>(n)) +
                             log_psi_growth(n - 1, r, alpha);
                worst = std::max(worst, std::abs(std::expm1(lhs - rhs)));
              }
            }
          }
          return worst;
        });
  b.add("identity.floor17-limit", ClaimKind::eq, 1.0, 1e-4,
        "order-17 distortion floor tends to 1 as r -> 0+ (probe at r = 1e-6)",
        [&] { return distortion_floor(17.0, 1e-6); });
  b.add("identity.tau", ClaimKind::eq, 0.0, 1e-8,
        "quadratic-root minimizer vs golden-section search: worst abs diff",
        [&] {
          double worst = 0.0;
          for (std::int64_t n : {2, 5, 50}) {
            for (double alpha : {alpha_sh, alpha_conj}) {
              auto f = [&](double r) { return log_psi_growth(n, r, alpha); };
              MinimizeResult m = minimize_scalar(f, 1e-6, 1.0 - 1e-6);
              worst = std::max(worst, std::abs(m.x - tau_minimizer(n, alpha)));
            }
          }
          return worst;
        });
  b.add("identity.rho", ClaimKind::eq, 0.0, 1e-8,
        "co-analytic minimizer vs golden-section search: worst abs diff",
        [&] {
          double worst = 0.0;
          for (std::int64_t n : {3, 7, 50}) {
            for (double alpha : {alpha_sh, alpha_conj}) {
              auto f = [&](double r) { return log_phi_growth(n, r, alpha); };
              MinimizeResult m = minimize_scalar(f, 1e-6, 1.0 - 1e-6);
              worst = std::max(worst, std::abs(m.x - rho_minimizer(n, alpha)));
            }
          }
          return worst;
        });
  b.add("identity.stationarity", ClaimKind::eq, 0.0, 1e-4,
        "centered finite difference of the log majorant at its minimizer",
        [&] {
          double worst = 0.0;
          const double h = 1e-7;
          for (std::int64_t n : {2, 5, 50, 500}) {
            for (double alpha : {alpha_sh, alpha_conj}) {
              double tau = tau_minimizer(n, alpha);
              double fd = (log_psi_growth(n, tau + h, alpha) -
                           log_psi_growth(n, tau - h, alpha)) /
                          (2.0 * h);
              worst = std::max(worst, std::abs(fd));
            }
          }
          return worst;
        });

  // --- order offset U ------------------------------------------------------
  b.add("offset-u.monotone", ClaimKind::eq, 0.0, 0.0,
        "order offset strictly increasing on (0.016155, 1): bad-step count",
        [&] {
          int bad = 0;
          const int grid = 2000;
          double prev = index_offset_u(0.016156);
          for (int i = 1; i < grid; ++i) {
            double r = 0.016156 + (0.999 - 0.016156) * static_cast<double>(i) /
                                      (grid - 1);
            double cur = index_offset_u(r);
            if (!(cur > prev)) ++bad;
            prev = cur;
          }
          return static_cast<double>(bad);
        });
  b.add("offset-u.aggregate", ClaimKind::info, 28.5, 0.0,
        "the printed constant 28.5 vs the reconstructed aggregate "
        "log(68 * 54.72e-7 * 18!)",
        [&] { return std::log(68.0) + std::log(54.72e-7) + std::lgamma(19.0); });

  // --- diagonal radius table ----------------------------------------------
  double table1_n2_computed = std::numeric_limits<double>::quiet_NaN();
  for (const Table1Row& row : table1_rows()) {
    b.add("table1.n" + std::to_string(row.n), ClaimKind::eq, row.published,
          5e-4, "published diagonal radius table, row n = " +
                    std::to_string(row.n),
          [&, row] {
            double radius = radius_root(row.n, row.n, Family::alpha52).radius;
            if (row.n == 2) table1_n2_computed = radius;
            return radius;
          });
  }
  b.add("table1.n2.residual", ClaimKind::info, 0.0, 0.0,
        "margin of the n = 2 section evaluated at the published radius",
        [&] { return family_margin(Family::alpha52, 2, 2, 0.0635798); });
  b.add("harness.self-test", ClaimKind::eq, 1.0, 0.0,
        "tampering self-test: re-judging table1.n2 with tolerance 0 must fail",
        [&] {
          ClaimStatus tampered =
              judge(ClaimKind::eq, 0.0635798, table1_n2_computed, 0.0);
          return tampered == ClaimStatus::fail ? 1.0 : 0.0;
        });

  // --- integer thresholds --------------------------------------------------
  b.add("threshold.quarter", ClaimKind::integer, 81.0, 0.0,
        "published least order whose offset certificate covers |z| < 1/4",
        [&] { return static_cast<double>(n_threshold(0.25)); });
  b.add("threshold.inv-e", ClaimKind::integer, 131.0, 0.0,
        "published least order whose offset certificate covers |z| < 1/e",
        [&] { return static_cast<double>(n_threshold(std::exp(-1.0))); });
  b.add("threshold.half", ClaimKind::integer, 220.0, 0.0,
        "published least order whose offset certificate covers |z| < 1/2",
        [&] { return static_cast<double>(n_threshold(0.5)); });
  b.add("least-n.quarter", ClaimKind::integer, 10.0, 0.0,
        "published least order with diagonal radius >= 1/4",
        [&] { return static_cast<double>(least_n_for_radius(0.25,
                                                            Family::alpha52)); });
  b.add("least-n.half", ClaimKind::integer, 29.0, 0.0,
        "published least order with diagonal radius >= 1/2",
        [&] { return static_cast<double>(least_n_for_radius(0.5,
                                                            Family::alpha52)); });
  b.add("least-n.three-quarters", ClaimKind::integer, 98.0, 0.0,
        "published least order with diagonal radius >= 3/4",
        [&] { return static_cast<double>(least_n_for_radius(0.75,
                                                            Family::alpha52)); });

  // --- slack chain and logarithmic lower-bound curve ----------------------
  b.add("slack.t1", ClaimKind::le, 0.000555, 0.0,
        "published first slack factor at n = 20",
        [&] { return t_bound_chain(20).t1; });
  b.add("slack.t2", ClaimKind::le, 4787.08, 47.8708,
        "published second slack factor at n = 20 (1% slack)",
        [&] { return t_bound_chain(20).t2; });
  b.add("slack.t3", ClaimKind::le, 0.333, 0.00333,
        "published third slack factor at n = 20 (1% slack)",
        [&] { return t_bound_chain(20).t3; });
  b.add("slack.t", ClaimKind::le, 0.885, 0.00885,
        "published slack product at n = 20 (1% slack)",
        [&] { return t_bound_chain(20).value; });
  b.add("slack.t-sweep", ClaimKind::le, 1.0, 0.0,
        "slack product below 1 for every n in [20, n_cap]",
        [&] {
          double worst = 0.0;
          for (std::int64_t n = 20; n <= cap; ++n) {
            worst = std::max(worst, t_bound_chain(n).value);
          }
          return worst;
        });
  b.add("curve.dominance", ClaimKind::ge, 0.0, 0.0,
        "diagonal radius stays above the logarithmic lower-bound curve: "
        "minimum gap over [20, n_cap]",
        [&] {
          double worst = std::numeric_limits<double>::infinity();
          for (std::int64_t n = 20; n <= cap; ++n) {
            double radius = radius_root(n, n, Family::alpha52).radius;
            double lower = log_radius_curve(n, RefCurve::order52).r_lower;
            worst = std::min(worst, radius - lower);
          }
          return worst;
        });

  // --- brute-force oracle cross-checks -------------------------------------
  if (opts.run_oracle) {
    for (std::int64_t n : {2, 3, 5, 10}) {
      for (Family family : {Family::alpha52, Family::alpha17}) {
        std::string fam = family == Family::alpha52 ? "alpha52" : "alpha17";
        b.add("oracle.n" + std::to_string(n) + "." + fam, ClaimKind::ge, 0.0,
              1e-6,
              "gap between the probe estimate and the certified radius; "
              "the certificate is a lower bound, so the gap must be >= 0",
              [&, n, family] {
                OracleVerdict v = cross_check(n, family);
                return v.estimated_radius - v.guaranteed_radius;
              });
      }
    }
  }

  return b.rep;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_human(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

std::string report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ClaimRecord& c : rep.claims) {
    nlohmann::ordered_json rec;
    rec["id"] = c.id;
    rec["published_value"] = c.published_value;
    rec["computed_value"] = c.computed_value;
    rec["tolerance"] = c.tolerance;
    rec["status"] = to_string(c.status);
    rec["kind"] = to_string(c.kind);
    rec["citation"] = c.citation;
    arr.push_back(std::move(rec));
  }
  j["claims"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace hbounds
