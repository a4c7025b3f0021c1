#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace hbounds {

// Exact rational, used for coefficient identities that must hold without
// floating-point slack.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const;
  double to_double() const;
};

// A planar harmonic mapping f = h + conj(g) with
//   h(z) = sum_k a[k-1] z^k,  g(z) = sum_k b[k-1] z^k.
// Normalization: a[0] == 1, b[0] == 0. Construction pads the shorter
// coefficient list with zeros so both have equal length.
struct CoefficientSeries {
  std::vector<std::complex<double>> a;
  std::vector<std::complex<double>> b;

  CoefficientSeries(std::vector<std::complex<double>> a_in,
                    std::vector<std::complex<double>> b_in);

  std::size_t order() const { return a.size(); }
};

// Coefficients of the harmonic half-plane extremal mapping:
//   a_n = (n+1)(2n+1)/6,  b_n = (n-1)(2n-1)/6.
// Requires n >= 2 (the first coefficient pair is fixed by normalization).
std::pair<Rational, Rational> koebe_coefficients(std::int64_t n);

// The extremal mapping truncated at the given order.
CoefficientSeries harmonic_koebe(std::size_t order);

// f(z) via the truncated series.
std::complex<double> evaluate(const CoefficientSeries& f, std::complex<double> z);

// The extremal mapping's exact value H(z) + conj(G(z)) with
//   H(z) = (z - z^2/2 + z^3/6) / (1-z)^3,  G(z) = (z^2/2 + z^3/6) / (1-z)^3.
std::complex<double> koebe_closed_form(std::complex<double> z);

// Partial sum s_{n,m}: keep a_1..a_n and b_1..b_m, zero the rest.
CoefficientSeries section(const CoefficientSeries& f, std::size_t n, std::size_t m);

// A probe location: z = rho * exp(i*phi), direction parameter t in (0, pi/2].
struct ProbePoint {
  double rho;
  double phi;
  double t;
};

// Ratio sin(k t)/sin(t) = U_{k-1}(cos t), computed by the stable three-term
// recurrence S_1 = 1, S_2 = 2 cos t, S_{k+1} = 2 cos t S_k - S_{k-1}.
std::vector<double> sin_ratio_kernel(double t, std::size_t kmax);

// Directional univalence functional
//   sum_k (a_k z^k - conj(b_k z^k)) * sin(k t)/sin(t),  z = rho e^{i phi}.
// A zero at some probe witnesses two points the map identifies.
std::complex<double> univalence_functional(const CoefficientSeries& f,
                                           const ProbePoint& p);

// min over |z| <= rho of |h'(z)| - |g'(z)|, scanned on an angular x radial
// grid. Positive means sense-preserving and locally injective on the disk.
double sense_preserving_margin(const CoefficientSeries& f, double rho,
                               std::size_t angular = 256, std::size_t radial = 64);

}  // namespace hbounds
