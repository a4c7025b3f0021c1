#pragma once

#include <cstdint>

#include "hbounds/numerics.hpp"

namespace hbounds {

// Growth exponents of the two coefficient families handled by this toolkit.
inline constexpr double alpha_sh = 16.5;   // order-n^17 family
inline constexpr double alpha_conj = 2.5;  // order-n^3 family

// log of  psi_n(r; alpha) = (1 / (n r^(n-1))) (1+r)^(alpha-3/2) (1-r)^-(alpha+3/2),
// the r-parametrized majorant whose minimum over (0,1) bounds |a_n|. n >= 2.
double log_psi_growth(std::int64_t n, double r, double alpha);
LogValue psi_growth(std::int64_t n, double r, double alpha);

// phi_n(r; alpha) = (1 / (n r^(n-2))) (1+r)^(alpha-3/2) (1-r)^-(alpha+3/2),
// the analogous majorant for |b_n|. Identity: phi_n = ((n-1)/n) psi_{n-1}.
double log_phi_growth(std::int64_t n, double r, double alpha);
LogValue phi_growth(std::int64_t n, double r, double alpha);

// Minimizer of psi_n over (0,1): positive root of (n+2) r^2 + 2 alpha r - (n-1).
// Requires n >= 2.
double tau_minimizer(std::int64_t n, double alpha);

// Minimizer of phi_n over (0,1): positive root of (n+1) r^2 + 2 alpha r - (n-2).
// Equals tau_minimizer(n-1, alpha). Requires n >= 3.
double rho_minimizer(std::int64_t n, double alpha);

struct BoundResult {
  std::int64_t n;
  double alpha;
  double bound;      // majorant value at its minimizer; equals factor_a * factor_b
  double factor_a;   // power part: tau^(1-n) for |a_n|, rho^(2-n) for |b_n|
  double factor_b;   // (1/n) (1+r)^(alpha-3/2) (1-r)^-(alpha+3/2) at the minimizer
  double minimizer;  // location of the minimum in (0,1)
  double envelope;   // published polynomial envelope evaluated at this n
};

// Coefficient bound for the analytic part:    |a_n| <= psi_n(tau_n).  n >= 3.
BoundResult a_bound(std::int64_t n, double alpha);
// Coefficient bound for the co-analytic part: |b_n| <= phi_n(rho_n).  n >= 3.
BoundResult b_bound(std::int64_t n, double alpha);

// Published envelope constants: c * n^17 for alpha = 16.5, c * n^3 for 2.5.
double envelope_a(std::int64_t n, double alpha);
double envelope_b(std::int64_t n, double alpha);

// Radical closed forms of the alpha = 5/2 bounds, with s = sqrt(4n^2+4n+17)
// and s1 = sqrt(4n^2-4n+17):
//   a_n bound = 8 (n+2)^3 (s+2n-1)  / (n (2n+9-s)^4)  * ((s -5)/(2(n+2)))^(1-n)
//   b_n bound = 8 (n+1)^3 (s1+2n-3) / (n (2n+7-s1)^4) * ((s1-5)/(2(n+1)))^(2-n)
struct ClosedFormBounds {
  double a;
  double b;
};
ClosedFormBounds closed_form_bounds_52(std::int64_t n);

// Psi(x) = 2 (x+2) e^(-18/x) / (sqrt(4x^2+4x+1081) - 33), requires x >= 2.
// Strictly increasing with limit 1; controls the large-n envelope ratio.
double capital_psi(double x);

// Two algebraically equal evaluations of
//   q(x) = q1(x)^2 - q2(x)^2,
//   q1 = 12972 + 6534 x + 431 x^2 + 22 x^3,
//   q2 = (396 + 198 x + 11 x^2) sqrt(4x^2 + 4x + 1081),
// whose sign decides where Psi is increasing. The factored route
//   24 (x+2)^2 (44 x^3 + 5381 x^2 + 6438 x - 12972)
// is the numerically stable one.
struct QSignRoutes {
  double direct;
  double factored;
};
QSignRoutes q_sign_routes(double x);

// Returns the factored evaluation; throws std::runtime_error if the two
// routes disagree by more than 1e-8 relative.
double q_sign(double x);

}  // namespace hbounds
