#include "kinetostatics.hpp"

#include <cmath>

namespace prr {

const char* singularity_name(SingularityType type) {
  switch (type) {
    case SingularityType::Regular: return "Regular";
    case SingularityType::Serial: return "Serial";
    case SingularityType::Parallel: return "Parallel";
    case SingularityType::SerialAndParallel: return "SerialAndParallel";
  }
  return "Unknown";
}

KinetostaticMatrices build_matrices(const Configuration& config, double L) {
  if (!(L > 0.0)) {
    fail(ErrorCode::InvalidArgument, "characteristic length L must be positive");
  }
  KinetostaticMatrices mat;
  mat.L = L;
  mat.legLength = config.geom.l;
  mat.A.setZero();
  mat.B.setZero();
  for (int i = 0; i < 3; ++i) {
    const LegSolution& leg = config.legs[i];
    mat.A(i, 0) = leg.lvec.x();
    mat.A(i, 1) = leg.lvec.y();
    mat.A(i, 2) = -leg.k;
    mat.B(i, i) = leg.m;
  }
  mat.Abar = mat.A;
  mat.Abar.col(2) /= L;
  mat.detA = mat.A.determinant();
  mat.detB = mat.B(0, 0) * mat.B(1, 1) * mat.B(2, 2);

  const SingularityClass sing = classify_singularity(mat);
  mat.kbarValid = mat.B(0, 0) != 0.0 && mat.B(1, 1) != 0.0 && mat.B(2, 2) != 0.0;
  if (mat.kbarValid) {
    for (int i = 0; i < 3; ++i) mat.Kbar.row(i) = mat.Abar.row(i) / mat.B(i, i);
  } else {
    mat.Kbar.setZero();
  }
  if (sing.type != SingularityType::Parallel &&
      sing.type != SingularityType::SerialAndParallel) {
    mat.J = (mat.A.inverse() * mat.B).eval();
  }
  if (sing.type != SingularityType::Serial &&
      sing.type != SingularityType::SerialAndParallel) {
    Eigen::Matrix3d K;
    for (int i = 0; i < 3; ++i) K.row(i) = mat.A.row(i) / mat.B(i, i);
    mat.K = K;
  }
  return mat;
}

Twist forward_rate_map(const KinetostaticMatrices& mat, const JointRates& rates) {
  const SingularityClass sing = classify_singularity(mat);
  if (sing.type == SingularityType::Parallel ||
      sing.type == SingularityType::SerialAndParallel) {
    fail(ErrorCode::ParallelSingular, "direct-kinematics matrix A is singular");
  }
  const Eigen::Vector3d rhs(mat.B(0, 0) * rates.rhodot[0],
                            mat.B(1, 1) * rates.rhodot[1],
                            mat.B(2, 2) * rates.rhodot[2]);
  const Eigen::Vector3d t = mat.A.inverse() * rhs;
  return Twist{t[0], t[1], t[2]};
}

JointRates inverse_rate_map(const KinetostaticMatrices& mat, const Twist& twist) {
  const SingularityClass sing = classify_singularity(mat);
  if (sing.type == SingularityType::Serial ||
      sing.type == SingularityType::SerialAndParallel) {
    fail(ErrorCode::SerialSingular, "inverse-kinematics matrix B is singular");
  }
  const Eigen::Vector3d t(twist.xdot, twist.ydot, twist.thetadot);
  JointRates rates;
  for (int i = 0; i < 3; ++i) {
    rates.rhodot[i] = mat.A.row(i).dot(t) / mat.B(i, i);
  }
  return rates;
}

SingularityClass classify_singularity(const KinetostaticMatrices& mat,
                                      double serialTol, double parallelTol) {
  SingularityClass out;
  out.nearestSerialMargin =
      std::min({std::abs(mat.B(0, 0)), std::abs(mat.B(1, 1)), std::abs(mat.B(2, 2))});
  const double rowProd =
      mat.A.row(0).norm() * mat.A.row(1).norm() * mat.A.row(2).norm();
  out.parallelMargin = (rowProd > 0.0) ? std::abs(mat.detA) / rowProd : 0.0;

  const bool serial = out.nearestSerialMargin <= serialTol * mat.legLength;
  const bool parallel = out.parallelMargin <= parallelTol;
  if (serial && parallel) {
    out.type = SingularityType::SerialAndParallel;
  } else if (serial) {
    out.type = SingularityType::Serial;
  } else if (parallel) {
    out.type = SingularityType::Parallel;
  } else {
    out.type = SingularityType::Regular;
  }
  return out;
}

}  // namespace prr
