#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hbounds/harmonic.hpp"
#include "hbounds/numerics.hpp"
#include "hbounds/section_radii.hpp"

namespace hbounds {

struct OracleConfig {
  std::size_t angular_samples = 256;  // phi samples per shell
  std::size_t radial_samples = 64;    // radial subdivisions for margin scans
  std::size_t t_samples = 128;        // t grid has t_samples + 1 points
  double radius_step = 1e-3;          // shells at rho = step, 2*step, ..., < 1
};

// |functional| below this counts as a zero of the discretized criterion.
inline constexpr double kFunctionalZeroTol = 1e-10;

enum class ViolationKind {
  functional_zero,  // |directional functional| below kFunctionalZeroTol
  enclosed_zero,    // nonzero discrete winding of the functional on a grid cell
  margin,           // sense-preserving margin <= 0 on the shell
};

struct Violation {
  double rho;
  double phi;
  double t;
  ViolationKind kind;
};

struct OracleVerdict {
  std::string map_id;
  double estimated_radius;  // largest clean shell; one-sided evidence only
  std::optional<Violation> first_violation;
  double guaranteed_radius = 0.0;  // 0 when no analytic guarantee applies
  bool consistent = true;          // estimated >= guaranteed - 1e-6
};

// Brute-force univalence probe: sweeps shells rho = i * radius_step outward;
// per shell runs the sense-preserving margin scan, the functional zero scan
// over the (phi, t) grid, and a discrete argument-principle winding scan over
// the annulus cells against the previous shell. Stops at the first
// violation; the estimate is the last clean shell. A detected violation
// disproves univalence at that radius; absence of violations is evidence only.
OracleVerdict estimate_univalence_radius(const CoefficientSeries& f,
                                         const OracleConfig& cfg = {},
                                         const std::string& map_id = "map");

// Runs the probe on the diagonal section of the extremal mapping and compares
// against the family's analytic radius certificate (alpha52: margin root;
// alpha17: offset-scan radius). consistent must hold: the certificates are
// lower bounds for the true univalence radius. Requires n >= 2.
OracleVerdict cross_check(std::int64_t n, Family family,
                          const OracleConfig& ocfg = {},
                          const SolverConfig& scfg = {});

}  // namespace hbounds
