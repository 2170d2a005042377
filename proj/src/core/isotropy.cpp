#include "isotropy.hpp"

#include <cmath>
#include <numbers>

namespace prr {

namespace {
constexpr double kPi = std::numbers::pi;
}

double characteristic_length(double r, double gamma) {
  if (!(r > 0.0) || gamma < 0.0 || gamma > kPi) {
    fail(ErrorCode::InvalidArgument, "need r > 0 and gamma in [0, pi]");
  }
  const double s = std::sin(gamma);
  if (s <= 1e-12) {
    fail(ErrorCode::DegenerateLength, "sin(gamma) vanishes, L would be zero");
  }
  return std::sqrt(2.0) * r * s;
}

std::pair<Configuration, IsotropyReport> symmetric_isotropic_config(
    const Geometry& geom, const WorkingMode& mode) {
  if (mode.index != 1 && mode.index != 5) {
    fail(ErrorCode::InvalidArgument,
         "the centered isotropic family exists only in modes 1 and 5");
  }
  if (!(geom.l > std::abs(geom.R - geom.r))) {
    fail(ErrorCode::NoSymmetricConfig,
         "no centered configuration: l <= |R - r|");
  }
  // theta chosen so b_i = r * n_i.
  const Pose pose(0.0, 0.0, 1.5 * kPi - geom.delta);
  Configuration cfg = inverse_kinematics(geom, pose, mode);

  IsotropyReport rep;
  rep.gamma = cfg.legs[0].gamma;
  rep.L = characteristic_length(geom.r, rep.gamma);
  rep.residuals = isotropy_residuals(cfg, rep.L);

  double tau2 = 0.0;
  for (const LegSolution& leg : cfg.legs) {
    tau2 += (leg.lvec.squaredNorm() + leg.k * leg.k / (rep.L * rep.L)) /
            (3.0 * leg.m * leg.m);
  }
  rep.tau = std::sqrt(tau2);
  return {std::move(cfg), rep};
}

std::array<double, 6> isotropy_residuals(const Configuration& config, double L) {
  if (!(L > 0.0)) {
    fail(ErrorCode::InvalidArgument, "characteristic length L must be positive");
  }
  for (const LegSolution& leg : config.legs) {
    if (leg.m == 0.0) {
      fail(ErrorCode::SerialSingular,
           "isotropy residuals are undefined at a serial singularity");
    }
  }
  const double L2 = L * L;
  std::array<double, 3> diag;
  double tau2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    const LegSolution& leg = config.legs[i];
    diag[i] = (leg.lvec.squaredNorm() + leg.k * leg.k / L2) / (leg.m * leg.m);
    tau2 += diag[i] / 3.0;
  }
  std::array<double, 6> res;
  for (int i = 0; i < 3; ++i) res[i] = diag[i] - tau2;
  int slot = 3;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const LegSolution& li = config.legs[i];
      const LegSolution& lj = config.legs[j];
      res[slot++] = li.lvec.dot(lj.lvec) + li.k * lj.k / L2;
    }
  }
  return res;
}

std::pair<bool, bool> max_serial_distance_check(const Geometry& geom,
                                                const Configuration& config) {
  bool perpendicular = true;
  for (int i = 0; i < 3; ++i) {
    const double s = geom.e[i].dot(rotate90(config.legs[i].lvec));
    if (std::abs(s) > 1e-9 * geom.l) perpendicular = false;
  }
  const bool halfRadius = std::abs(geom.r - geom.R / 2.0) <= 1e-12 * geom.R;
  return {perpendicular, halfRadius};
}

}  // namespace prr
