#include "hbounds/section_radii.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hbounds {

namespace {

constexpr double kBracketEps = 1e-9;
constexpr double kTailA17 = 5.24e-6;  // analytic-part envelope constant
constexpr double kTailB17 = 2.32e-7;  // co-analytic-part envelope constant
constexpr double kTailA52 = 0.75;
constexpr double kTailB52 = 0.43;

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

double distortion_floor(double alpha, double r) {
  require(alpha >= 1.0, "distortion_floor: alpha >= 1 required");
  require(r > 0.0 && r < 1.0, "distortion_floor: r in (0,1) required");
  double log_u = std::log1p(-r) - std::log1p(r);  // u = (1-r)/(1+r)
  // (1 - u^(2 alpha)) via expm1 keeps precision for small r
  return -std::expm1(2.0 * alpha * log_u) * std::exp(alpha * log_u) /
         (4.0 * alpha * r);
}

double distortion_floor3_rational(double r) {
  double omr = 1.0 - r, opr = 1.0 + r;
  double num = omr * omr * omr * (3.0 + r * r * (10.0 + 3.0 * r * r));
  double opr3 = opr * opr * opr;
  double opr9 = opr3 * opr3 * opr3;
  return num / (3.0 * opr9);
}

double floor3_numerator(double r) {
  double omr = 1.0 - r;
  return omr * omr * omr * (3.0 + r * r * (10.0 + 3.0 * r * r));
}

double floor3_numerator_derivative(double r) {
  double omr = 1.0 - r;
  return omr * omr *
         (-9.0 + r * (20.0 + r * (-50.0 + r * (12.0 - 21.0 * r))));
}

double tail_sum(const TailSpec& spec, double r, const SeriesLimits& lim) {
  require(spec.start >= 1, "tail_sum: start >= 1 required");
  require(r >= 0.0, "tail_sum: r >= 0 required");
  if (r >= 1.0) throw std::domain_error("tail_sum: series diverges for r >= 1");
  if (r == 0.0) return 0.0;  // empty geometric mass
  int p = spec.p;
  double c = spec.c;
  return sum_series(
      [p, c, r](std::int64_t k) {
        double dk = static_cast<double>(k);
        return c * std::pow(dk, p) * std::pow(r, dk - 1.0);
      },
      spec.start, lim);
}

double tail_power4(std::int64_t n, double r) {
  require(n >= 0, "tail_power4: n >= 0 required");
  require(r > 0.0 && r < 1.0, "tail_power4: r in (0,1) required");
  double dn = static_cast<double>(n);
  double omr = 1.0 - r;
  double omr2 = omr * omr;
  // every group is nonnegative on (0,1): no cancellation
  double poly = 1.0 + r * (11.0 + r * (11.0 + r)) +
                dn * dn * dn * dn * omr2 * omr2 +
                4.0 * dn * dn * dn * omr2 * omr +
                6.0 * dn * dn * omr2 * (1.0 + r) +
                4.0 * dn * (1.0 + r * (3.0 - r * (3.0 + r)));
  return std::pow(r, dn) * poly / (omr2 * omr2 * omr);
}

double tail_closed_form_p4(std::int64_t n, double r) {
  require(n >= 1, "tail_closed_form_p4: n >= 1 required");
  return (59.0 / 50.0) * tail_power4(n, r);
}

LogValue tail_upper_bound_p18(std::int64_t n, double r, double a) {
  require(n >= 2, "tail_upper_bound_p18: n >= 2 required");
  require(r > 0.0 && r < 1.0, "tail_upper_bound_p18: r in (0,1) required");
  require(a > 1.0, "tail_upper_bound_p18: a > 1 required");
  double dn = static_cast<double>(n);
  double log_r = std::log(r);
  double log_n = std::log(dn);
  if (!(a * log_n >= 1.0)) {
    throw std::domain_error("tail_upper_bound_p18: requires a log n >= 1");
  }
  if (!(-dn * log_r >= 18.0 * a * log_n)) {
    throw std::domain_error("tail_upper_bound_p18: requires -n log r >= 18 a log n");
  }
  double log_fact18 = std::lgamma(19.0);
  double value = log_fact18 + (dn * (a - 1.0) / a - 2.0) * log_r -
                 19.0 * std::log(-log_r);
  return LogValue::from_log(1, value);
}

namespace {

// alpha17 margin: direct guarded summation of the k^18 tails with an early
// exit once the sign is settled. Terms are strictly positive, so the partial
// margin decreases monotonically and a negative partial certifies a negative
// final value (its magnitude is then a lower bound, which bisection only
// uses for the sign).
double margin_alpha17(std::int64_t n, std::int64_t m, double r) {
  double floor = distortion_floor(17.0, r);
  double margin = floor;
  double subtotal = 0.0;
  std::int64_t k0 = std::min(n, m) + 1;
  double dk0 = static_cast<double>(k0);
  double term = std::exp(18.0 * std::log(dk0) + (dk0 - 1.0) * std::log(r));
  for (std::int64_t k = k0; k - k0 < 10'000'000; ++k) {
    double c = (k > n ? kTailA17 : 0.0) + (k > m ? kTailB17 : 0.0);
    double sub = c * term;
    subtotal += sub;
    margin -= sub;
    if (margin < -1e-6) return margin;  // sign settled, magnitude truncated
    if (term * (kTailA17 + kTailB17) < 1e-30 * std::max(floor, subtotal)) {
      return margin;
    }
    double dk = static_cast<double>(k);
    term *= r * std::pow((dk + 1.0) / dk, 18.0);
  }
  throw ConvergenceTooSlowError("margin_alpha17: tail did not converge");
}

double margin_alpha52(std::int64_t n, std::int64_t m, double r) {
  return distortion_floor(3.0, r) - kTailA52 * tail_power4(n, r) -
         kTailB52 * tail_power4(m, r);
}

}  // namespace

double family_margin(Family family, std::int64_t n, std::int64_t m, double r) {
  require(n >= 1 && m >= 1, "family_margin: n, m >= 1 required");
  require(r > 0.0 && r < 1.0, "family_margin: r in (0,1) required");
  return family == Family::alpha17 ? margin_alpha17(n, m, r)
                                   : margin_alpha52(n, m, r);
}

RadiusResult radius_root_on(const std::function<double(double)>& margin,
                            const SolverConfig& cfg) {
  RadiusResult res{};
  res.n = 0;
  res.m = 0;
  res.family = Family::alpha52;
  double lo = kBracketEps, hi = 1.0 - kBracketEps;
  try {
    BisectResult b = bisect_tracked(margin, lo, hi, cfg);
    res.radius = b.root;
    res.residual = b.residual;
    res.lo = b.lo;
    res.hi = b.hi;
    res.saturated = false;
  } catch (const NoRootError&) {
    res.radius = hi;
    res.residual = margin(hi);
    res.lo = hi;
    res.hi = hi;
    res.saturated = true;
  }
  return res;
}

RadiusResult radius_root(std::int64_t n, std::int64_t m, Family family,
                         const SolverConfig& cfg) {
  RadiusResult res = radius_root_on(
      [family, n, m](double r) { return family_margin(family, n, m, r); }, cfg);
  res.n = n;
  res.m = m;
  res.family = family;
  return res;
}

double u1_positive_numerator(double r) {
  require(r > 0.0 && r < 1.0, "u1_positive_numerator: r in (0,1) required");
  double log_r = std::log(r);
  double big_l = -log_r;  // log(1/r) > 0
  double log_u = std::log1p(-r) - std::log1p(r);
  // log(u^17 - u^51) = 17 log u + log(1 - u^34)
  double log_gap = 17.0 * log_u + std::log(-std::expm1(34.0 * log_u));
  return 28.5 - (log_r + 19.0 * std::log(big_l)) - log_gap;
}

double u1_prime(double r) {
  require(r > 0.0 && r < 1.0, "u1_prime: r in (0,1) required");
  double log_r = std::log(r);
  double ratio34 = std::pow((1.0 + r) / (1.0 - r), 34.0);
  return (1.0 / r) * (-1.0 - 19.0 / log_r) +
         (34.0 / (1.0 - r * r)) * (1.0 - 2.0 / (ratio34 - 1.0));
}

double index_offset_u(double r) {
  return u1_positive_numerator(r) / -std::log(r);
}

RadiusResult radius_via_offset(std::int64_t n, const SolverConfig& cfg) {
  require(n >= 2, "radius_via_offset: n >= 2 required");
  double log_n = std::log(static_cast<double>(n));
  auto g = [n, log_n](double r) {
    return 18.0 * log_n + (static_cast<double>(n) - index_offset_u(r)) * std::log(r);
  };
  double lo = kBracketEps, hi = 1.0 - kBracketEps;
  int grid = std::max(cfg.grid_points, 2);
  bool found = false;
  BisectResult best{};
  auto consider = [&](const BisectResult& b) {
    if (!found || b.root > best.root) best = b;
    found = true;
  };
  double prev_r = lo, prev_g = g(lo);
  for (int i = 1; i < grid; ++i) {
    double r = lo + (hi - lo) * static_cast<double>(i) / (grid - 1);
    double cur = g(r);
    if (prev_g == 0.0) {
      consider({prev_r, prev_r, prev_r, 0.0});
    } else if ((prev_g > 0.0) != (cur > 0.0)) {
      consider(bisect_tracked(g, prev_r, r, cfg));
    }
    prev_r = r;
    prev_g = cur;
  }
  if (prev_g == 0.0) consider({prev_r, prev_r, prev_r, 0.0});
  if (!found) throw NoRootError("radius_via_offset: no root on (0,1)");
  return {n, n, Family::alpha17, best.root, best.residual,
          best.lo, best.hi, false};
}

std::int64_t n_threshold(double r, std::int64_t cap) {
  require(r > 0.016155 && r < 1.0, "n_threshold: r in (0.016155, 1) required");
  double u = index_offset_u(r);
  double log_r = std::log(r);
  std::int64_t n0 = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::ceil(u)));
  for (std::int64_t n = n0; n <= cap; ++n) {
    double dn = static_cast<double>(n);
    if (18.0 * std::log(dn) <= -(dn - u) * log_r) return n;
  }
  throw NotConvergedError("n_threshold: no admissible order below cap");
}

std::int64_t least_n_for_radius(double target, Family family, std::int64_t cap,
                                const SolverConfig& cfg) {
  require(target > 0.0 && target < 1.0,
          "least_n_for_radius: target in (0,1) required");
  for (std::int64_t n = 1; n <= cap; ++n) {
    RadiusResult res = radius_root(n, n, family, cfg);
    if (!res.saturated && res.radius >= target) return n;
  }
  throw NotConvergedError("least_n_for_radius: target not reached below cap");
}

CurvePoint log_radius_curve(std::int64_t n, RefCurve curve) {
  double a = 0.0, b = 0.0;
  std::int64_t n_min = 0;
  switch (curve) {
    case RefCurve::order52:
      a = 8.0, b = 4.0, n_min = 20;
      break;
    case RefCurve::starlike:
      a = 7.0, b = 4.0, n_min = 15;
      break;
    case RefCurve::convex:
      a = 4.0, b = 2.0, n_min = 7;
      break;
  }
  require(n >= n_min, "log_radius_curve: n below curve validity threshold");
  double log_n = std::log(static_cast<double>(n));
  double x = a * log_n - b * std::log(log_n);
  return {x, 1.0 - x / static_cast<double>(n)};
}

double q_poly(double x, std::int64_t n) {
  double dn = static_cast<double>(n);
  double inner = dn * dn * dn * (24.0 + x * (24.0 + x * (12.0 + x * (4.0 + x)))) -
                 6.0 * dn * dn * x * (6.0 + x * (4.0 + x)) +
                 2.0 * dn * x * x * (7.0 + 2.0 * x) - x * x * x;
  return dn * inner;
}

double t_direct(double x, std::int64_t n) {
  double dn = static_cast<double>(n);
  double n8 = std::pow(dn, 8.0);
  double x8 = std::pow(x, 8.0);
  double base = 2.0 - x / dn;
  double pow9 = std::pow(base, 9.0);
  double denom = 16.0 * dn * dn * dn * dn - 32.0 * dn * dn * dn * x +
                 28.0 * dn * dn * x * x - 12.0 * dn * x * x * x +
                 3.0 * x * x * x * x;
  return (177.0 * std::exp(-x) * n8 / (50.0 * x8)) * pow9 * q_poly(x, n) / denom;
}

SlackChain t_bound_chain(std::int64_t n) {
  require(n >= 20, "t_bound_chain: n >= 20 required");
  double dn = static_cast<double>(n);
  double log_n = std::log(dn);
  double loglog_n = std::log(log_n);
  double lambda = loglog_n / log_n;
  double x = 8.0 * log_n - 4.0 * loglog_n;
  double y = x / dn;
  SlackChain chain;
  chain.t1 = 177.0 / (50.0 * 128.0 * std::pow(2.0 - lambda, 8.0)) *
             std::pow(1.0 - (4.0 * log_n - 2.0 * loglog_n) / dn, 9.0);
  chain.t2 = q_poly(x, n) / std::pow(dn * log_n, 4.0);
  chain.t3 = 1.0 / (16.0 + y * (-32.0 + y * (28.0 + y * (-12.0 + 3.0 * y))));
  chain.value = chain.t1 * chain.t2 * chain.t3;
  return chain;
}

double k_ratio(std::int64_t n, double r) {
  require(n >= 2, "k_ratio: n >= 2 required");
  require(r > 0.0 && r < 1.0, "k_ratio: r in (0,1) required");
  return tail_closed_form_p4(n, r) / distortion_floor3_rational(r);
}

}  // namespace hbounds
