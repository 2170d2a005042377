#include "geometry.hpp"

#include <cmath>
#include <numbers>

namespace prr {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// index <-> sign table; only modes 1 and 5 are canonical, the rest follow
// the complement/cyclic-shift conventions.
constexpr std::array<std::array<int, 3>, 8> kModeSigns = {{
    {-1, -1, -1},  // 1
    {+1, -1, -1},  // 2
    {-1, +1, -1},  // 3
    {-1, -1, +1},  // 4
    {+1, +1, +1},  // 5
    {-1, +1, +1},  // 6
    {+1, -1, +1},  // 7
    {+1, +1, -1},  // 8
}};
}  // namespace

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnreachablePose: return "UnreachablePose";
    case ErrorCode::UnreachablePosition: return "UnreachablePosition";
    case ErrorCode::SerialSingular: return "SerialSingular";
    case ErrorCode::ParallelSingular: return "ParallelSingular";
    case ErrorCode::DegenerateLength: return "DegenerateLength";
    case ErrorCode::NoSymmetricConfig: return "NoSymmetricConfig";
    case ErrorCode::EmptyWorkspace: return "EmptyWorkspace";
    case ErrorCode::RegionTooSmall: return "RegionTooSmall";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Geometry build_geometry(double R, double r, double l, double delta) {
  if (!(R > 0.0) || !(r > 0.0) || !(l > 0.0)) {
    fail(ErrorCode::InvalidGeometry, "R, r and l must all be positive");
  }
  Geometry g;
  g.R = R;
  g.r = r;
  g.l = l;
  g.delta = delta;
  for (int i = 0; i < 3; ++i) {
    g.alpha[i] = std::fmod(kPi + i * (kTwoPi / 3.0), kTwoPi);
    g.e[i] = Vec2(std::cos(g.alpha[i]), std::sin(g.alpha[i]));
    g.n[i] = rotate90(g.e[i]);
  }
  return g;
}

Pose::Pose(double x_, double y_, double theta_) : x(x_), y(y_) {
  theta = std::fmod(theta_, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
}

WorkingMode WorkingMode::from_index(int index) {
  if (index < 1 || index > 8) {
    fail(ErrorCode::InvalidArgument,
         "working mode index must be in 1..8, got " + std::to_string(index));
  }
  return WorkingMode{index, kModeSigns[index - 1]};
}

WorkingMode WorkingMode::from_signs(const std::array<int, 3>& signs) {
  for (int i = 0; i < 8; ++i) {
    if (kModeSigns[i] == signs) return WorkingMode{i + 1, signs};
  }
  fail(ErrorCode::InvalidArgument, "mode signs must each be -1 or +1");
}

WorkingMode WorkingMode::complement() const {
  return from_signs({-signs[0], -signs[1], -signs[2]});
}

WorkingMode WorkingMode::shifted() const {
  return from_signs({signs[2], signs[0], signs[1]});
}

std::array<Vec2, 3> platform_anchors(const Geometry& geom, const Pose& pose) {
  std::array<Vec2, 3> b;
  for (int i = 0; i < 3; ++i) {
    const double phi = pose.theta + geom.delta + i * (kTwoPi / 3.0);
    b[i] = pose.p() + geom.r * Vec2(std::cos(phi), std::sin(phi));
  }
  return b;
}

Configuration inverse_kinematics(const Geometry& geom, const Pose& pose,
                                 const WorkingMode& mode) {
  const auto anchors = platform_anchors(geom, pose);
  const double clampTol = 1e-12 * geom.l * geom.l;

  Configuration cfg;
  cfg.geom = geom;
  cfg.pose = pose;
  cfg.mode = mode;
  for (int i = 0; i < 3; ++i) {
    const Vec2 b = anchors[i];
    const Vec2 d = b - geom.R * geom.n[i];
    const double u = d.dot(geom.e[i]);
    const double v = b.dot(geom.n[i]) - geom.R;  // signed distance to rail
    const double disc = geom.l * geom.l - v * v;
    if (disc < -clampTol) {
      fail(ErrorCode::UnreachablePose,
           "leg " + std::to_string(i + 1) + " cannot reach the pose");
    }
    const double root = (disc <= clampTol) ? 0.0 : std::sqrt(disc);

    LegSolution& leg = cfg.legs[i];
    leg.rho = u - mode.signs[i] * root;
    leg.a = geom.R * geom.n[i] + leg.rho * geom.e[i];
    leg.b = b;
    leg.lvec = b - leg.a;
    leg.m = mode.signs[i] * root;
    leg.k = leg.lvec.dot(rotate90(pose.p() - b));
    const Vec2 ab = leg.a - b;
    const Vec2 pb = pose.p() - b;
    const double cross = ab.x() * pb.y() - ab.y() * pb.x();
    leg.gamma = std::atan2(std::abs(cross), ab.dot(pb));
    leg.eta = std::atan2(leg.lvec.y(), leg.lvec.x());
  }
  return cfg;
}

bool pose_reachable(const Geometry& geom, const Pose& pose) {
  const auto anchors = platform_anchors(geom, pose);
  const double clampTol = 1e-12 * geom.l * geom.l;
  for (int i = 0; i < 3; ++i) {
    const double v = anchors[i].dot(geom.n[i]) - geom.R;
    if (geom.l * geom.l - v * v < -clampTol) return false;
  }
  return true;
}

}  // namespace prr
