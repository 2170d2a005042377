#pragma once

#include <optional>
#include <Eigen/Dense>

#include "geometry.hpp"

namespace prr {

/// Direct- and inverse-kinematics matrices of one configuration.
/// Row i of A is (l_i^T, -k_i); B = diag(m_i); Abar divides the third
/// column of A by the characteristic length L; Kbar = B^{-1} Abar.
struct KinetostaticMatrices {
  Eigen::Matrix3d A;
  Eigen::Matrix3d B;
  Eigen::Matrix3d Abar;
  Eigen::Matrix3d Kbar;       // valid only when kbarValid
  bool kbarValid = false;
  std::optional<Eigen::Matrix3d> J;  // A^{-1} B, absent near parallel singularity
  std::optional<Eigen::Matrix3d> K;  // B^{-1} A, absent near serial singularity
  double detA = 0.0;
  double detB = 0.0;
  double L = 1.0;
  double legLength = 0.0;  // l, for scale-relative tolerances
};

struct Twist {
  double xdot = 0.0;
  double ydot = 0.0;
  double thetadot = 0.0;
};

struct JointRates {
  std::array<double, 3> rhodot{};
};

enum class SingularityType { Regular, Serial, Parallel, SerialAndParallel };

struct SingularityClass {
  SingularityType type = SingularityType::Regular;
  double nearestSerialMargin = 0.0;  // min_i |m_i|
  double parallelMargin = 0.0;       // |det A| / prod_i ||row_i(A)||
};

const char* singularity_name(SingularityType type);

KinetostaticMatrices build_matrices(const Configuration& config, double L);

/// Solves A t = B rhodot. Throws ParallelSingular when A is singular.
Twist forward_rate_map(const KinetostaticMatrices& mat, const JointRates& rates);

/// rhodot = B^{-1} A t. Throws SerialSingular when some m_i is ~0.
JointRates inverse_rate_map(const KinetostaticMatrices& mat, const Twist& twist);

SingularityClass classify_singularity(const KinetostaticMatrices& mat,
                                      double serialTol = 1e-9,
                                      double parallelTol = 1e-9);

}  // namespace prr
