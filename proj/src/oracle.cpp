#include "hbounds/oracle.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hbounds {

namespace {

void validate(const OracleConfig& cfg) {
  if (cfg.angular_samples < 8 || cfg.radial_samples < 8 || cfg.t_samples < 8) {
    throw std::invalid_argument("OracleConfig: sample counts >= 8 required");
  }
  if (!(cfg.radius_step > 0.0 && cfg.radius_step < 1.0)) {
    throw std::invalid_argument("OracleConfig: radius_step in (0,1) required");
  }
}

// min over the circle |z| = rho of |h'(z)| - |g'(z)|, with the phi location
// of the minimum.
std::pair<double, double> circle_margin(const CoefficientSeries& f, double rho,
                                        std::size_t angular) {
  double best = std::numeric_limits<double>::infinity();
  double best_phi = 0.0;
  for (std::size_t j = 0; j < angular; ++j) {
    double phi = 2.0 * std::numbers::pi * static_cast<double>(j) /
                 static_cast<double>(angular);
    std::complex<double> z = std::polar(rho, phi);
    std::complex<double> hp = 0.0, gp = 0.0;
    for (std::size_t k = f.order(); k-- > 0;) {
      hp = hp * z + static_cast<double>(k + 1) * f.a[k];
      gp = gp * z + static_cast<double>(k + 1) * f.b[k];
    }
    double margin = std::abs(hp) - std::abs(gp);
    if (margin < best) {
      best = margin;
      best_phi = phi;
    }
  }
  return {best, best_phi};
}

}  // namespace

OracleVerdict estimate_univalence_radius(const CoefficientSeries& f,
                                         const OracleConfig& cfg,
                                         const std::string& map_id) {
  validate(cfg);
  const std::size_t t_count = cfg.t_samples + 1;
  std::vector<double> t_grid(t_count);
  for (std::size_t i = 0; i < t_count; ++i) {
    t_grid[i] = 1e-4 + (std::numbers::pi / 2.0 - 1e-4) * static_cast<double>(i) /
                           static_cast<double>(cfg.t_samples);
  }
  std::vector<double> phi_grid(cfg.angular_samples);
  for (std::size_t j = 0; j < cfg.angular_samples; ++j) {
    phi_grid[j] = 2.0 * std::numbers::pi * static_cast<double>(j) /
                  static_cast<double>(cfg.angular_samples);
  }

  // functional values on the previous / current shell, indexed [t][phi]
  std::vector<std::vector<std::complex<double>>> prev, cur;
  auto fill_shell = [&](double rho,
                        std::vector<std::vector<std::complex<double>>>& w) {
    w.assign(t_count, std::vector<std::complex<double>>(cfg.angular_samples));
    for (std::size_t ti = 0; ti < t_count; ++ti) {
      for (std::size_t j = 0; j < cfg.angular_samples; ++j) {
        w[ti][j] = univalence_functional(f, {rho, phi_grid[j], t_grid[ti]});
      }
    }
  };

  OracleVerdict verdict;
  verdict.map_id = map_id;
  double last_clean = 0.0;
  for (std::size_t i = 1;; ++i) {
    double rho = cfg.radius_step * static_cast<double>(i);
    if (rho >= 1.0) break;

    auto [margin, margin_phi] = circle_margin(f, rho, cfg.angular_samples);
    if (margin <= 0.0) {
      verdict.first_violation =
          Violation{rho, margin_phi, 0.0, ViolationKind::margin};
      break;
    }

    fill_shell(rho, cur);
    std::optional<Violation> found;
    for (std::size_t ti = 0; ti < t_count && !found; ++ti) {
      for (std::size_t j = 0; j < cfg.angular_samples; ++j) {
        if (std::abs(cur[ti][j]) < kFunctionalZeroTol) {
          found = Violation{rho, phi_grid[j], t_grid[ti],
                            ViolationKind::functional_zero};
          break;
        }
      }
    }
    // discrete argument principle over the annulus cells between the shells
    if (!found && i >= 2) {
      for (std::size_t ti = 0; ti < t_count && !found; ++ti) {
        for (std::size_t j = 0; j < cfg.angular_samples; ++j) {
          std::size_t jn = (j + 1) % cfg.angular_samples;
          const std::complex<double> c0 = prev[ti][j], c1 = cur[ti][j],
                                     c2 = cur[ti][jn], c3 = prev[ti][jn];
          double total = std::arg(c1 / c0) + std::arg(c2 / c1) +
                         std::arg(c3 / c2) + std::arg(c0 / c3);
          if (std::lround(total / (2.0 * std::numbers::pi)) != 0) {
            found = Violation{rho, phi_grid[j], t_grid[ti],
                              ViolationKind::enclosed_zero};
            break;
          }
        }
      }
    }
    if (found) {
      verdict.first_violation = found;
      break;
    }
    last_clean = rho;
    std::swap(prev, cur);
  }
  verdict.estimated_radius = last_clean;
  return verdict;
}

OracleVerdict cross_check(std::int64_t n, Family family, const OracleConfig& ocfg,
                          const SolverConfig& scfg) {
  if (n < 2) throw std::invalid_argument("cross_check: n >= 2 required");
  CoefficientSeries sec = harmonic_koebe(static_cast<std::size_t>(n));
  std::string map_id = "koebe-section-" + std::to_string(n) + "-" +
                       (family == Family::alpha52 ? "alpha52" : "alpha17");
  OracleVerdict verdict = estimate_univalence_radius(sec, ocfg, map_id);
  verdict.guaranteed_radius = family == Family::alpha52
                                  ? radius_root(n, n, family, scfg).radius
                                  : radius_via_offset(n, scfg).radius;
  verdict.consistent =
      verdict.estimated_radius >= verdict.guaranteed_radius - 1e-6;
  return verdict;
}

}  // namespace hbounds
