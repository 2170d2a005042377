#pragma once

#include <array>
#include <utility>

#include "geometry.hpp"

namespace prr {

/// Isotropy diagnostics for one configuration. residuals[0..2] are the
/// diagonal isotropy conditions minus tau^2; residuals[3..5] are the
/// off-diagonal numerators l_i.l_j + k_i k_j / L^2.
struct IsotropyReport {
  double gamma = 0.0;  // common leg angle at the symmetric configuration
  double L = 0.0;      // characteristic length
  double tau = 0.0;    // Kbar Kbar^T = tau^2 I
  std::array<double, 6> residuals{};
};

/// L = sqrt(2) * r * sin(gamma). Throws DegenerateLength when sin(gamma)
/// vanishes.
double characteristic_length(double r, double gamma);

/// The centered isotropic configuration (p = O, anchors at r*n_i) for
/// working mode 1 or 5. Throws NoSymmetricConfig when l <= |R - r|.
std::pair<Configuration, IsotropyReport> symmetric_isotropic_config(
    const Geometry& geom, const WorkingMode& mode);

std::array<double, 6> isotropy_residuals(const Configuration& config, double L);

/// Checks the two conditions for the isotropic configuration furthest from
/// serial singularities: e_i^T E l_i = 0 for all legs, and r = R/2.
std::pair<bool, bool> max_serial_distance_check(const Geometry& geom,
                                                const Configuration& config);

}  // namespace prr
