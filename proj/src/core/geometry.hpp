#pragma once

#include <array>
#include <Eigen/Dense>

#include "error.hpp"

namespace prr {

using Vec2 = Eigen::Vector2d;

/// The planar 90-degree rotation operator E applied to a vector.
inline Vec2 rotate90(const Vec2& v) { return Vec2(-v.y(), v.x()); }

/// Fixed architecture of the symmetric 3-PRR manipulator: three rails
/// tangent to the circle of radius R, a rigid platform of circumradius r,
/// legs of length l. Rail i is the line {R*n[i] + t*e[i]}.
struct Geometry {
  double R = 0.0;      // inscribed-circle radius of the rail triangle
  double r = 0.0;      // platform circumradius, |B_i P|
  double l = 0.0;      // leg length |A_i B_i|
  double delta = 0.0;  // platform anchor phase offset (radians)
  std::array<double, 3> alpha{};  // rail direction angles
  std::array<Vec2, 3> e{};        // unit rail directions
  std::array<Vec2, 3> n{};        // unit rail offset normals, n = E e
};

Geometry build_geometry(double R, double r, double l, double delta = 0.0);

/// Platform pose: position of the operation point P and orientation.
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;  // normalized to [0, 2*pi)

  Pose() = default;
  Pose(double x, double y, double theta);
  Vec2 p() const { return Vec2(x, y); }
};

/// One of the eight inverse-kinematics branch assignments: signs[i]
/// prescribes the sign of m_i (the i-th diagonal entry of B).
struct WorkingMode {
  int index = 1;  // 1..8
  std::array<int, 3> signs{-1, -1, -1};

  static WorkingMode from_index(int index);
  static WorkingMode from_signs(const std::array<int, 3>& signs);
  /// The branch-flipped mode (all signs negated): 1<->5, 2<->6, 3<->7, 4<->8.
  WorkingMode complement() const;
  /// Cyclic shift matching a +120-degree rotation of the pose: leg i+1
  /// takes the sign of leg i. Maps 2->3->4->2 and 6->7->8->6.
  WorkingMode shifted() const;
};

struct LegSolution {
  double rho = 0.0;  // actuated prismatic displacement
  Vec2 a{};          // slider point A_i on the rail
  Vec2 b{};          // platform anchor B_i
  Vec2 lvec{};       // b - a
  double m = 0.0;    // (b - a) . e_i
  double k = 0.0;    // (b - a) . E (p - b)
  double gamma = 0.0;  // unsigned angle A_i B_i P in [0, pi]
  double eta = 0.0;    // direction angle of lvec
};

struct Configuration {
  Geometry geom;
  Pose pose;
  WorkingMode mode;
  std::array<LegSolution, 3> legs;
};

std::array<Vec2, 3> platform_anchors(const Geometry& geom, const Pose& pose);

/// Closed-form inverse kinematics on the branch selected by the working
/// mode. Throws UnreachablePose if any leg cannot reach; a leg exactly on
/// the workspace boundary is accepted with m_i = 0.
Configuration inverse_kinematics(const Geometry& geom, const Pose& pose,
                                 const WorkingMode& mode);

/// True when every leg can reach the pose (branch-independent).
bool pose_reachable(const Geometry& geom, const Pose& pose);

}  // namespace prr
