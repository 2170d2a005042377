#include "conditioning.hpp"

#include <algorithm>
#include <cmath>

namespace prr {

namespace {

inline double offdiag_sq(const Eigen::Matrix3d& S) {
  return S(0, 1) * S(0, 1) + S(0, 2) * S(0, 2) + S(1, 2) * S(1, 2);
}

// One two-sided Jacobi rotation zeroing S(p,q) of the symmetric S.
inline void jacobi_rotate(Eigen::Matrix3d& S, int p, int q) {
  if (S(p, q) == 0.0) return;
  const double tau = (S(q, q) - S(p, p)) / (2.0 * S(p, q));
  const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const int rr = 3 - p - q;  // the untouched index

  const double spp = S(p, p), sqq = S(q, q), spq = S(p, q);
  const double srp = S(rr, p), srq = S(rr, q);
  S(p, p) = spp - t * spq;
  S(q, q) = sqq + t * spq;
  S(p, q) = S(q, p) = 0.0;
  S(rr, p) = S(p, rr) = c * srp - s * srq;
  S(rr, q) = S(q, rr) = s * srp + c * srq;
}

}  // namespace

Eigen::Vector3d singular_values(const Eigen::Matrix3d& M) {
  Eigen::Matrix3d S = M.transpose() * M;
  const double frob2 = S.trace();  // ||M||_F^2
  const double tol = 1e-28 * frob2 * frob2;

  for (int sweep = 0; sweep < 30; ++sweep) {
    if (offdiag_sq(S) <= tol) break;
    jacobi_rotate(S, 0, 1);
    jacobi_rotate(S, 0, 2);
    jacobi_rotate(S, 1, 2);
  }

  std::array<double, 3> lam = {S(0, 0), S(1, 1), S(2, 2)};
  std::sort(lam.begin(), lam.end(), std::greater<double>());
  Eigen::Vector3d sigma;
  for (int i = 0; i < 3; ++i) {
    sigma[i] = std::sqrt(std::max(lam[i], 0.0));  // clamp round-off
  }
  return sigma;
}

double condition_number(const Eigen::Matrix3d& M) {
  const Eigen::Vector3d sigma = singular_values(M);
  if (sigma[0] == 0.0) return 0.0;
  return sigma[2] / sigma[0];
}

ConditioningReport conditioning_report(const Eigen::Matrix3d& M) {
  ConditioningReport rep;
  rep.sigma = singular_values(M);
  rep.degenerate = (rep.sigma[0] == 0.0);
  rep.kappa = rep.degenerate ? 0.0 : rep.sigma[2] / rep.sigma[0];
  return rep;
}

}  // namespace prr
