#include "hbounds/coeff_bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hbounds {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

void require_r(double r) {
  require(r > 0.0 && r < 1.0, "growth majorant: r in (0,1) required");
}

// Positive root of (n+2) r^2 + 2 alpha r - (n-1) = 0, written to avoid
// cancellation between -alpha and the square root.
double quadratic_minimizer(double n, double alpha) {
  double disc = std::sqrt(alpha * alpha + (n + 2.0) * (n - 1.0));
  return (n - 1.0) / (disc + alpha);  // == (-alpha + disc) / (n + 2)
}

}  // namespace

double log_psi_growth(std::int64_t n, double r, double alpha) {
  require(n >= 2, "log_psi_growth: n >= 2 required");
  require_r(r);
  double dn = static_cast<double>(n);
  return -std::log(dn) - (dn - 1.0) * std::log(r) +
         (alpha - 1.5) * std::log1p(r) - (alpha + 1.5) * std::log1p(-r);
}

LogValue psi_growth(std::int64_t n, double r, double alpha) {
  return LogValue::from_log(1, log_psi_growth(n, r, alpha));
}

double log_phi_growth(std::int64_t n, double r, double alpha) {
  require(n >= 2, "log_phi_growth: n >= 2 required");
  require_r(r);
  double dn = static_cast<double>(n);
  return -std::log(dn) - (dn - 2.0) * std::log(r) +
         (alpha - 1.5) * std::log1p(r) - (alpha + 1.5) * std::log1p(-r);
}

LogValue phi_growth(std::int64_t n, double r, double alpha) {
  return LogValue::from_log(1, log_phi_growth(n, r, alpha));
}

double tau_minimizer(std::int64_t n, double alpha) {
  require(n >= 2, "tau_minimizer: n >= 2 required");
  return quadratic_minimizer(static_cast<double>(n), alpha);
}

double rho_minimizer(std::int64_t n, double alpha) {
  require(n >= 3, "rho_minimizer: n >= 3 required");
  return quadratic_minimizer(static_cast<double>(n) - 1.0, alpha);
}

double envelope_a(std::int64_t n, double alpha) {
  double dn = static_cast<double>(n);
  if (alpha == alpha_sh) return 5.24e-6 * std::pow(dn, 17.0);
  if (alpha == alpha_conj) return 0.75 * dn * dn * dn;
  throw std::invalid_argument("envelope_a: no published envelope for this alpha");
}

double envelope_b(std::int64_t n, double alpha) {
  double dn = static_cast<double>(n);
  if (alpha == alpha_sh) return 2.32e-7 * std::pow(dn, 17.0);
  if (alpha == alpha_conj) return 0.43 * dn * dn * dn;
  throw std::invalid_argument("envelope_b: no published envelope for this alpha");
}

BoundResult a_bound(std::int64_t n, double alpha) {
  require(n >= 3, "a_bound: n >= 3 required");
  double dn = static_cast<double>(n);
  double tau = tau_minimizer(n, alpha);
  double log_fa = (1.0 - dn) * std::log(tau);
  double log_fb = -std::log(dn) + (alpha - 1.5) * std::log1p(tau) -
                  (alpha + 1.5) * std::log1p(-tau);
  BoundResult res;
  res.n = n;
  res.alpha = alpha;
  res.minimizer = tau;
  res.factor_a = std::exp(log_fa);
  res.factor_b = std::exp(log_fb);
  res.bound = std::exp(log_fa + log_fb);
  res.envelope = envelope_a(n, alpha);
  return res;
}

BoundResult b_bound(std::int64_t n, double alpha) {
  require(n >= 3, "b_bound: n >= 3 required");
  double dn = static_cast<double>(n);
  double rho = rho_minimizer(n, alpha);
  double log_fa = (2.0 - dn) * std::log(rho);
  double log_fb = -std::log(dn) + (alpha - 1.5) * std::log1p(rho) -
                  (alpha + 1.5) * std::log1p(-rho);
  BoundResult res;
  res.n = n;
  res.alpha = alpha;
  res.minimizer = rho;
  res.factor_a = std::exp(log_fa);
  res.factor_b = std::exp(log_fb);
  res.bound = std::exp(log_fa + log_fb);
  res.envelope = envelope_b(n, alpha);
  return res;
}

ClosedFormBounds closed_form_bounds_52(std::int64_t n) {
  require(n >= 3, "closed_form_bounds_52: n >= 3 required");
  double dn = static_cast<double>(n);
  double s = std::sqrt(4.0 * dn * dn + 4.0 * dn + 17.0);
  double s1 = std::sqrt(4.0 * dn * dn - 4.0 * dn + 17.0);

  // log-domain so the ((s-5)/(2(n+2)))^(1-n) part cannot overflow for large n
  double log_a = std::log(8.0) + 3.0 * std::log(dn + 2.0) +
                 std::log(s + 2.0 * dn - 1.0) - std::log(dn) -
                 4.0 * std::log(2.0 * dn + 9.0 - s) +
                 (1.0 - dn) * std::log((s - 5.0) / (2.0 * (dn + 2.0)));
  double log_b = std::log(8.0) + 3.0 * std::log(dn + 1.0) +
                 std::log(s1 + 2.0 * dn - 3.0) - std::log(dn) -
                 4.0 * std::log(2.0 * dn + 7.0 - s1) +
                 (2.0 - dn) * std::log((s1 - 5.0) / (2.0 * (dn + 1.0)));
  return {std::exp(log_a), std::exp(log_b)};
}

double capital_psi(double x) {
  require(x >= 2.0, "capital_psi: x >= 2 required");
  return 2.0 * (x + 2.0) * std::exp(-18.0 / x) /
         (std::sqrt(4.0 * x * x + 4.0 * x + 1081.0) - 33.0);
}

QSignRoutes q_sign_routes(double x) {
  double q1 = 12972.0 + x * (6534.0 + x * (431.0 + x * 22.0));
  double q2 = (396.0 + x * (198.0 + x * 11.0)) *
              std::sqrt(4.0 * x * x + 4.0 * x + 1081.0);
  double direct = q1 * q1 - q2 * q2;
  double factored = 24.0 * (x + 2.0) * (x + 2.0) *
                    (-12972.0 + x * (6438.0 + x * (5381.0 + x * 44.0)));
  return {direct, factored};
}

double q_sign(double x) {
  require(x >= 2.0, "q_sign: x >= 2 required");
  QSignRoutes r = q_sign_routes(x);
  double scale = std::max({std::abs(r.direct), std::abs(r.factored), 1.0});
  if (std::abs(r.direct - r.factored) > 1e-8 * scale) {
    throw std::runtime_error("q_sign: evaluation routes disagree at x = " +
                             std::to_string(x));
  }
  return r.factored;
}

}  // namespace hbounds
