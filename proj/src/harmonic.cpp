#include "hbounds/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hbounds {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}
bool Rational::operator==(const Rational& o) const {
  return num == o.num && den == o.den;
}
double Rational::to_double() const {
  return static_cast<double>(num) / static_cast<double>(den);
}

CoefficientSeries::CoefficientSeries(std::vector<std::complex<double>> a_in,
                                     std::vector<std::complex<double>> b_in)
    : a(std::move(a_in)), b(std::move(b_in)) {
  if (a.empty() || a[0] != std::complex<double>(1.0, 0.0)) {
    throw std::invalid_argument("CoefficientSeries: requires a_1 == 1");
  }
  if (!b.empty() && b[0] != std::complex<double>(0.0, 0.0)) {
    throw std::invalid_argument("CoefficientSeries: requires b_1 == 0");
  }
  std::size_t n = std::max(a.size(), b.size());
  a.resize(n, {0.0, 0.0});
  b.resize(n, {0.0, 0.0});
}

std::pair<Rational, Rational> koebe_coefficients(std::int64_t n) {
  if (n < 2) throw std::domain_error("koebe_coefficients: n >= 2 required");
  return {Rational((n + 1) * (2 * n + 1), 6), Rational((n - 1) * (2 * n - 1), 6)};
}

CoefficientSeries harmonic_koebe(std::size_t order) {
  if (order < 1) throw std::domain_error("harmonic_koebe: order >= 1 required");
  std::vector<std::complex<double>> a(order), b(order);
  a[0] = 1.0;
  b[0] = 0.0;
  for (std::size_t k = 2; k <= order; ++k) {
    auto [ak, bk] = koebe_coefficients(static_cast<std::int64_t>(k));
    a[k - 1] = ak.to_double();
    b[k - 1] = bk.to_double();
  }
  return CoefficientSeries(std::move(a), std::move(b));
}

std::complex<double> evaluate(const CoefficientSeries& f, std::complex<double> z) {
  if (std::abs(z) >= 1.0) {
    throw std::domain_error("evaluate: |z| < 1 required");
  }
  // Horner in z for h and g simultaneously, then h + conj(g).
  std::complex<double> h = 0.0, g = 0.0;
  for (std::size_t i = f.order(); i-- > 0;) {
    h = h * z + f.a[i];
    g = g * z + f.b[i];
  }
  h *= z;
  g *= z;
  return h + std::conj(g);
}

std::complex<double> koebe_closed_form(std::complex<double> z) {
  std::complex<double> one_minus = 1.0 - z;
  std::complex<double> cube = one_minus * one_minus * one_minus;
  std::complex<double> z2 = z * z, z3 = z2 * z;
  std::complex<double> H = (z - 0.5 * z2 + z3 / 6.0) / cube;
  std::complex<double> G = (0.5 * z2 + z3 / 6.0) / cube;
  return H + std::conj(G);
}

CoefficientSeries section(const CoefficientSeries& f, std::size_t n, std::size_t m) {
  if (n < 1 || m < 1) throw std::domain_error("section: n, m >= 1 required");
  std::vector<std::complex<double>> a(f.a.begin(),
                                      f.a.begin() + std::min(n, f.order()));
  std::vector<std::complex<double>> b(f.b.begin(),
                                      f.b.begin() + std::min(m, f.order()));
  return CoefficientSeries(std::move(a), std::move(b));
}

std::vector<double> sin_ratio_kernel(double t, std::size_t kmax) {
  std::vector<double> s(kmax);
  if (kmax == 0) return s;
  double c2 = 2.0 * std::cos(t);
  s[0] = 1.0;
  if (kmax > 1) s[1] = c2;
  for (std::size_t k = 2; k < kmax; ++k) s[k] = c2 * s[k - 1] - s[k - 2];
  return s;
}

std::complex<double> univalence_functional(const CoefficientSeries& f,
                                           const ProbePoint& p) {
  if (!(p.t > 0.0 && p.t <= std::numbers::pi / 2.0)) {
    throw std::domain_error("univalence_functional: t in (0, pi/2] required");
  }
  if (!(p.rho > 0.0 && p.rho < 1.0)) {
    throw std::domain_error("univalence_functional: rho in (0,1) required");
  }
  std::vector<double> kernel = sin_ratio_kernel(p.t, f.order());
  std::complex<double> z = std::polar(p.rho, p.phi);
  std::complex<double> zk = 1.0;
  std::complex<double> acc = 0.0;
  for (std::size_t k = 1; k <= f.order(); ++k) {
    zk *= z;
    acc += (f.a[k - 1] * zk - std::conj(f.b[k - 1] * zk)) * kernel[k - 1];
  }
  return acc;
}

double sense_preserving_margin(const CoefficientSeries& f, double rho,
                               std::size_t angular, std::size_t radial) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw std::domain_error("sense_preserving_margin: rho in (0,1) required");
  }
  if (angular < 8 || radial < 1) {
    throw std::domain_error(
        "sense_preserving_margin: angular >= 8, radial >= 1 required");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i <= radial; ++i) {
    double r = rho * static_cast<double>(i) / static_cast<double>(radial);
    for (std::size_t j = 0; j < angular; ++j) {
      double phi =
          2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angular);
      std::complex<double> z = std::polar(r, phi);
      std::complex<double> hp = 0.0, gp = 0.0;
      for (std::size_t m = f.order(); m-- > 0;) {
        hp = hp * z + static_cast<double>(m + 1) * f.a[m];
        gp = gp * z + static_cast<double>(m + 1) * f.b[m];
      }
      best = std::min(best, std::abs(hp) - std::abs(gp));
    }
  }
  // center: h'(0) = a_1 = 1, g'(0) = b_1 = 0
  best = std::min(best, 1.0 - 0.0);
  return best;
}

}  // namespace hbounds
