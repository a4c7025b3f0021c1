#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>

namespace hbounds {

struct SolverConfig {
  double abs_tol_x = 1e-12;
  int max_iter = 200;
  int grid_points = 10000;
};

// Root-finder residual target: bisection keeps halving (within max_iter and
// float resolution) until |f(root)| is below this as well as the bracket
// width being below abs_tol_x.
inline constexpr double kResidualTarget = 1e-12;

struct NoRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotConvergedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConvergenceTooSlowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BisectResult {
  double root;
  double lo;        // final bracket
  double hi;
  double residual;  // f(root)
};

// Bracketing bisection. Requires a sign change on [lo, hi]; halves until the
// bracket is below abs_tol_x and the midpoint residual is below
// kResidualTarget (or the bracket hits floating-point resolution), capped at
// max_iter.
BisectResult bisect_tracked(const std::function<double(double)>& f, double lo,
                            double hi, const SolverConfig& cfg = {});
double bisect(const std::function<double(double)>& f, double lo, double hi,
              const SolverConfig& cfg = {});

struct MinimizeResult {
  double x;
  double fx;
};

// Golden-section search for a unimodal f on [lo, hi], refined to abs_tol_x.
MinimizeResult minimize_scalar(const std::function<double(double)>& f, double lo,
                               double hi, const SolverConfig& cfg = {});

// Signed log-domain scalar: value = sign * exp(log_magnitude).
// Keeps quantities like n^17, 18!, r^(n-1) representable without overflow.
struct LogValue {
  int sign = 0;  // -1, 0, +1
  double log_magnitude = -std::numeric_limits<double>::infinity();

  static LogValue from_real(double v);
  static LogValue from_log(int sign, double log_magnitude);

  // Saturates to +-max double instead of overflowing; sets *overflow if given.
  double to_real(bool* overflow = nullptr) const;

  LogValue operator*(const LogValue& o) const;
  // |v|^e with sign preserved; negative base requires an integral exponent.
  LogValue pow(double e) const;

  bool operator<(const LogValue& o) const;
  bool operator==(const LogValue& o) const;

  struct Sum;  // defined below: {value, cancellation flag}
  static Sum add(const LogValue& x, const LogValue& y);
};

struct LogValue::Sum {
  LogValue value;
  bool cancellation = false;  // opposite signs with log magnitudes within 1e-15
};

struct SeriesLimits {
  double rel_term_tol = 1e-30;
  std::int64_t max_terms = 10'000'000;
};

// Sums term(k) for k = start, start+1, ... until a term drops below
// rel_term_tol * partial_sum. Throws ConvergenceTooSlowError at max_terms.
double sum_series(const std::function<double(std::int64_t)>& term,
                  std::int64_t start, const SeriesLimits& lim = {});

}  // namespace hbounds
