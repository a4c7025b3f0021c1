#include "hbounds/numerics.hpp"

#include <cmath>
#include <cstdlib>

namespace hbounds {

BisectResult bisect_tracked(const std::function<double(double)>& f, double lo,
                            double hi, const SolverConfig& cfg) {
  if (!(lo < hi)) throw std::invalid_argument("bisect: requires lo < hi");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, lo, hi, 0.0};
  if (fhi == 0.0) return {hi, lo, hi, 0.0};
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NoRootError("bisect: no sign change on bracket");
  }
  for (int it = 0; it < cfg.max_iter; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      return {mid, lo, hi, f(mid)};  // bracket at float resolution
    }
    double fmid = f(mid);
    if (fmid == 0.0) return {mid, lo, hi, 0.0};
    if (hi - lo <= cfg.abs_tol_x && std::abs(fmid) <= kResidualTarget) {
      return {mid, lo, hi, fmid};  // the returned root met the residual target
    }
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  if (hi - lo <= cfg.abs_tol_x) {
    double root = 0.5 * (lo + hi);
    return {root, lo, hi, f(root)};
  }
  throw NotConvergedError("bisect: max_iter reached");
}

double bisect(const std::function<double(double)>& f, double lo, double hi,
              const SolverConfig& cfg) {
  return bisect_tracked(f, lo, hi, cfg).root;
}

MinimizeResult minimize_scalar(const std::function<double(double)>& f, double lo,
                               double hi, const SolverConfig& cfg) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < cfg.max_iter && (b - a) > cfg.abs_tol_x; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  return {x, f(x)};
}

LogValue LogValue::from_real(double v) {
  LogValue r;
  if (v == 0.0) return r;
  r.sign = v > 0.0 ? 1 : -1;
  r.log_magnitude = std::log(std::abs(v));
  return r;
}

LogValue LogValue::from_log(int sign, double log_magnitude) {
  LogValue r;
  if (sign == 0) return r;
  r.sign = sign > 0 ? 1 : -1;
  r.log_magnitude = log_magnitude;
  return r;
}

double LogValue::to_real(bool* overflow) const {
  if (overflow) *overflow = false;
  if (sign == 0) return 0.0;
  static const double log_max = std::log(std::numeric_limits<double>::max());
  if (log_magnitude >= log_max) {
    if (overflow) *overflow = true;
    return sign * std::numeric_limits<double>::max();
  }
  return sign * std::exp(log_magnitude);
}

LogValue LogValue::operator*(const LogValue& o) const {
  if (sign == 0 || o.sign == 0) return {};
  return from_log(sign * o.sign, log_magnitude + o.log_magnitude);
}

LogValue LogValue::pow(double e) const {
  if (sign == 0) {
    if (e <= 0.0) throw std::domain_error("LogValue::pow: 0 to nonpositive power");
    return {};
  }
  if (sign < 0) {
    double ip;
    if (std::modf(e, &ip) != 0.0) {
      throw std::domain_error("LogValue::pow: negative base, fractional exponent");
    }
    int s = (std::llabs(static_cast<long long>(ip)) % 2 == 0) ? 1 : -1;
    return from_log(s, e * log_magnitude);
  }
  return from_log(1, e * log_magnitude);
}

bool LogValue::operator<(const LogValue& o) const {
  if (sign != o.sign) return sign < o.sign;
  if (sign == 0) return false;
  if (sign > 0) return log_magnitude < o.log_magnitude;
  return log_magnitude > o.log_magnitude;
}

bool LogValue::operator==(const LogValue& o) const {
  if (sign != o.sign) return false;
  if (sign == 0) return true;
  return log_magnitude == o.log_magnitude;
}

LogValue::Sum LogValue::add(const LogValue& x, const LogValue& y) {
  Sum s;
  if (x.sign == 0) {
    s.value = y;
    return s;
  }
  if (y.sign == 0) {
    s.value = x;
    return s;
  }
  const LogValue& big = (y.log_magnitude > x.log_magnitude) ? y : x;
  const LogValue& small = (&big == &y) ? x : y;
  double d = small.log_magnitude - big.log_magnitude;  // <= 0
  if (x.sign == y.sign) {
    s.value = from_log(big.sign, big.log_magnitude + std::log1p(std::exp(d)));
    return s;
  }
  if (std::abs(d) <= 1e-15) {
    s.cancellation = true;
    double m = std::exp(d);
    if (m >= 1.0) {
      s.value = {};
      return s;
    }
    s.value = from_log(big.sign, big.log_magnitude + std::log1p(-m));
    return s;
  }
  s.value = from_log(big.sign, big.log_magnitude + std::log1p(-std::exp(d)));
  return s;
}

double sum_series(const std::function<double(std::int64_t)>& term,
                  std::int64_t start, const SeriesLimits& lim) {
  double partial = 0.0;
  for (std::int64_t k = start; k - start < lim.max_terms; ++k) {
    double t = term(k);
    partial += t;
    if (std::abs(t) < lim.rel_term_tol * std::abs(partial) && partial != 0.0) {
      return partial;
    }
  }
  throw ConvergenceTooSlowError("sum_series: max_terms reached");
}

}  // namespace hbounds
