#pragma once

#include <Eigen/Dense>

namespace prr {

/// Singular values and condition number of a 3x3 matrix.
///
/// kappa follows the smallest/largest convention: kappa in [0,1], 1 is
/// isotropy, 0 is rank deficiency (the reciprocal of the usual kappa).
struct ConditioningReport {
  Eigen::Vector3d sigma;  // descending, nonnegative
  double kappa = 0.0;
  bool degenerate = false;  // zero matrix
};

/// Descending singular values via cyclic Jacobi iteration on M^T M.
Eigen::Vector3d singular_values(const Eigen::Matrix3d& M);

/// kappa = sigma_min / sigma_max; 0 for rank-deficient or zero M.
double condition_number(const Eigen::Matrix3d& M);

ConditioningReport conditioning_report(const Eigen::Matrix3d& M);

}  // namespace prr
