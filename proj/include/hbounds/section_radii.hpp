#pragma once

#include <cstdint>

#include "hbounds/numerics.hpp"

namespace hbounds {

// The two section-radius regimes exposed by the CLI. The suffix is the
// distortion-floor exponent: alpha17 pairs the n^17 coefficient envelopes
// with the order-17 floor, alpha52 pairs the n^3 envelopes (growth exponent
// 5/2) with the order-3 floor.
enum class Family { alpha17, alpha52 };

// C(alpha, r) = (1 / (4 alpha r)) u^alpha (1 - u^(2 alpha)),  u = (1-r)/(1+r).
// Lower bound for |h'| - |g'| type distortion on |z| = r; C(alpha, 0+) = 1.
// Requires alpha >= 1 and r strictly inside (0, 1).
double distortion_floor(double alpha, double r);

// Rational identity for the alpha = 3 floor:
//   C(3, r) = (1-r)^3 (3 + 10 r^2 + 3 r^4) / (3 (1+r)^9).
double distortion_floor3_rational(double r);

// Numerator polynomial of that identity and its printed derivative:
//   p(r)  = (1-r)^3 (3 + 10 r^2 + 3 r^4)
//   p'(r) = (1-r)^2 (-9 + 20 r - 50 r^2 + 12 r^3 - 21 r^4)
double floor3_numerator(double r);
double floor3_numerator_derivative(double r);

// Weighted power-sum tail  c * sum_{k >= start} k^p r^(k-1), summed directly
// with the guarded series loop. r = 0 returns 0 (empty geometric mass);
// r >= 1 is rejected as divergent.
struct TailSpec {
  int p = 4;
  double c = 1.0;
  std::int64_t start = 2;
};
double tail_sum(const TailSpec& spec, double r, const SeriesLimits& lim = {});

// Closed form of sum_{k > n} k^4 r^(k-1)  (fourth-order Eulerian identity).
double tail_power4(std::int64_t n, double r);

// (59/50) * tail_power4(n, r): the two alpha52 tail constants 3/4 and 43/100
// merged for the diagonal case n = m. Requires n >= 1.
double tail_closed_form_p4(std::int64_t n, double r);

// Integral-comparison upper bound for sum_{k > n} k^18 r^k:
//   18! * r^(n (a-1)/a - 2) / |log r|^19,
// valid when -n log r >= 18 a log n and a log n >= 1 (a > 1). The log-domain
// result can exceed double range for r near 1.
LogValue tail_upper_bound_p18(std::int64_t n, double r, double a);

// Section univalence margin at radius r: the distortion floor minus the
// weighted coefficient-envelope tails beyond orders n (analytic part) and m
// (co-analytic part). Positive margin certifies the section is univalent on
// |z| < r; the margin is strictly decreasing in r.
//   alpha52: C(3, r)  - (3/4)   sum_{k>n} k^4  r^(k-1) - (43/100) sum_{k>m} ...
//   alpha17: C(17, r) - 5.24e-6 sum_{k>n} k^18 r^(k-1) - 2.32e-7  sum_{k>m} ...
double family_margin(Family family, std::int64_t n, std::int64_t m, double r);

struct RadiusResult {
  std::int64_t n;
  std::int64_t m;
  Family family;
  double radius;
  double residual;  // margin value at the reported radius
  double lo;        // final bracket
  double hi;
  bool saturated;   // no sign change on (eps, 1-eps); radius reported as 1-eps
};

// Root of r -> family_margin(family, n, m, r) on (1e-9, 1 - 1e-9) by
// bisection; the returned radius is a certified univalence radius for the
// (n, m) section of the family.
RadiusResult radius_root(std::int64_t n, std::int64_t m, Family family,
                         const SolverConfig& cfg = {});

// Same solver against an arbitrary strictly decreasing margin function.
RadiusResult radius_root_on(const std::function<double(double)>& margin,
                            const SolverConfig& cfg = {});

// U1(r) = 28.5 - log(r (log 1/r)^19) - log(u^17 - u^51),  u = (1-r)/(1+r).
// Positive on (0, 1); numerator of the order-offset function below.
double u1_positive_numerator(double r);

// Printed derivative of U1 (verified against finite differences):
//   U1'(r) = (1/r)(-1 - 19/log r)
//          + (34/(1-r^2)) (1 - 2 / (((1+r)/(1-r))^34 - 1)).
double u1_prime(double r);

// U(r) = U1(r) / log(1/r): the order offset such that sections of order
// n >= U(r) have their n^18-tail below the order-17 floor at radius r.
// Strictly increasing on (0.0162, 1).
double index_offset_u(double r);

// Largest root of g(r) = 18 log n + (n - U(r)) log r: radius certified for
// the diagonal (n, n) section in the alpha17 regime via the 18! tail bound.
// Scans cfg.grid_points points on (1e-9, 1 - 1e-9), bisects every bracket,
// keeps the largest root. Requires n >= 2.
RadiusResult radius_via_offset(std::int64_t n, const SolverConfig& cfg = {});

// N(r) = min{ n >= U(r) : 18 log n <= -(n - U(r)) log r }: least section
// order whose alpha17 certificate covers radius r. Requires r inside
// (0.016155, 1), where U is positive and increasing; throws if no
// admissible n <= cap exists.
std::int64_t n_threshold(double r, std::int64_t cap = 10'000'000);

// Least n with radius_root(n, n, family) >= target.
std::int64_t least_n_for_radius(double target, Family family,
                                std::int64_t cap = 100'000,
                                const SolverConfig& cfg = {});

// Logarithmic lower-bound curves r = 1 - (A log n - B log log n) / n for the
// diagonal radius, with published validity thresholds:
//   order52:  A = 8, B = 4, n >= 20   (the alpha52 family)
//   starlike: A = 7, B = 4, n >= 15   (classical starlike comparison)
//   convex:   A = 4, B = 2, n >= 7    (classical convex comparison)
enum class RefCurve { order52, starlike, convex };

struct CurvePoint {
  double x_n;      // A log n - B log log n
  double r_lower;  // 1 - x_n / n
};
CurvePoint log_radius_curve(std::int64_t n, RefCurve curve);

inline constexpr double szego_radius = 0.25;  // classical analytic sections

// Tail-to-floor comparison chain at x_n = 8 log n - 4 log log n:
//   t(x, n) = (177 e^-x n^8 / (50 x^8)) (2 - x/n)^9 q(x, n)
//             / (16 n^4 - 32 n^3 x + 28 n^2 x^2 - 12 n x^3 + 3 x^4),
//   q(x, n) = n [n^3 (24 + 24x + 12x^2 + 4x^3 + x^4)
//                - 6 n^2 x (6 + 4x + x^2) + 2 n x^2 (7 + 2x) - x^3].
// Factored as t = t1 t2 t3 with lambda = log log n / log n, y = x_n / n:
//   t1 = 177 / (50 * 2^7 (2 - lambda)^8) * (1 - (4 log n - 2 log log n)/n)^9
//   t2 = q(x_n, n) / (n log n)^4
//   t3 = 1 / (16 - 32 y + 28 y^2 - 12 y^3 + 3 y^4)
// t < 1 certifies the curve point r = 1 - x_n/n for the alpha52 family.
double t_direct(double x, std::int64_t n);
double q_poly(double x, std::int64_t n);

struct SlackChain {
  double t1;
  double t2;
  double t3;
  double value;  // t1 * t2 * t3 == t_direct(x_n, n)
};
SlackChain t_bound_chain(std::int64_t n);

// k_ratio(n, r) = tail_closed_form_p4(n, r) / distortion_floor3_rational(r).
// Strictly increasing in r; equals 1 exactly at the diagonal alpha52 radius.
// Requires n >= 2 and r in (0, 1).
double k_ratio(std::int64_t n, double r);

}  // namespace hbounds
