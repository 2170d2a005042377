#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "core/geometry.hpp"

using namespace prr;

namespace {
constexpr double kPi = std::numbers::pi;

Geometry anchor_geometry() { return build_geometry(2.0, 1.0, 2.0); }
}  // namespace

TEST_CASE("build_geometry derives rail frames") {
  const Geometry g = anchor_geometry();
  CHECK(g.alpha[0] == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(g.alpha[1] == doctest::Approx(300.0 * kPi / 180.0).epsilon(1e-15));
  CHECK(g.alpha[2] == doctest::Approx(60.0 * kPi / 180.0).epsilon(1e-15));
  CHECK(g.e[0].x() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(g.e[0].y() == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  CHECK(g.e[2].x() == doctest::Approx(0.5));
  CHECK(g.e[2].y() == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(g.n[2].x() == doctest::Approx(-std::sqrt(3.0) / 2.0));
  CHECK(g.n[2].y() == doctest::Approx(0.5));
  for (int i = 0; i < 3; ++i) {
    CHECK(g.e[i].norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.n[i].norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.e[i].dot(g.n[i]) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  }
}

TEST_CASE("build_geometry rejects nonpositive dimensions") {
  CHECK_THROWS_AS(build_geometry(0.0, 1.0, 2.0), Error);
  CHECK_THROWS_AS(build_geometry(2.0, -1.0, 2.0), Error);
  CHECK_THROWS_AS(build_geometry(2.0, 1.0, 0.0), Error);
  try {
    build_geometry(0.0, 1.0, 2.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidGeometry);
  }
}

TEST_CASE("platform anchors") {
  const Geometry g = anchor_geometry();
  SUBCASE("unit triangle at theta = 0") {
    const auto b = platform_anchors(g, Pose(0, 0, 0));
    CHECK(b[0].x() == doctest::Approx(1.0));
    CHECK(b[0].y() == doctest::Approx(0.0).scale(1.0));
    CHECK(b[1].x() == doctest::Approx(-0.5));
    CHECK(b[1].y() == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(b[2].x() == doctest::Approx(-0.5));
    CHECK(b[2].y() == doctest::Approx(-std::sqrt(3.0) / 2.0));
  }
  SUBCASE("rotation by 270 degrees") {
    const auto b = platform_anchors(g, Pose(0, 0, 1.5 * kPi));
    CHECK(b[0].x() == doctest::Approx(0.0).scale(1.0));
    CHECK(b[0].y() == doctest::Approx(-1.0));
  }
  SUBCASE("translation equivariance") {
    const double theta = 0.7;
    const auto b0 = platform_anchors(g, Pose(0, 0, theta));
    const auto b1 = platform_anchors(g, Pose(5, -3, theta));
    for (int i = 0; i < 3; ++i) {
      CHECK(b1[i].x() - b0[i].x() == doctest::Approx(5.0));
      CHECK(b1[i].y() - b0[i].y() == doctest::Approx(-3.0));
    }
  }
  SUBCASE("centroid equals p") {
    const auto b = platform_anchors(g, Pose(1.2, -0.4, 0.9));
    const Vec2 centroid = (b[0] + b[1] + b[2]) / 3.0;
    CHECK(centroid.x() == doctest::Approx(1.2).epsilon(1e-14));
    CHECK(centroid.y() == doctest::Approx(-0.4).epsilon(1e-14));
  }
}

TEST_CASE("inverse kinematics at the symmetric centered pose") {
  const Geometry g = anchor_geometry();
  const Pose pose(0, 0, 1.5 * kPi);
  const double s3 = std::sqrt(3.0);

  SUBCASE("mode 1") {
    const Configuration cfg =
        inverse_kinematics(g, pose, WorkingMode::from_index(1));
    for (int i = 0; i < 3; ++i) {
      CHECK(cfg.legs[i].rho == doctest::Approx(s3).epsilon(1e-14));
      CHECK(cfg.legs[i].m == doctest::Approx(-s3).epsilon(1e-14));
    }
    CHECK(cfg.legs[0].a.x() == doctest::Approx(-s3).epsilon(1e-14));
    CHECK(cfg.legs[0].a.y() == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(cfg.legs[0].b.x() == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(cfg.legs[0].b.y() == doctest::Approx(-1.0).epsilon(1e-14));
  }
  SUBCASE("mode 5 is the opposite branch") {
    const Configuration cfg =
        inverse_kinematics(g, pose, WorkingMode::from_index(5));
    for (int i = 0; i < 3; ++i) {
      CHECK(cfg.legs[i].rho == doctest::Approx(-s3).epsilon(1e-14));
      CHECK(cfg.legs[i].m == doctest::Approx(s3).epsilon(1e-14));
    }
  }
  SUBCASE("circle-line intersection oracle for leg 1") {
    // rail 1 is y = -R: intersect the circle of radius l about b_1 = (0,-1)
    // with that line and keep the branch with negative m.
    const double yRail = -g.R;
    const double dy = yRail - (-1.0);
    const double span = std::sqrt(g.l * g.l - dy * dy);
    const double ax = 0.0 - span;  // branch toward -x: m = (b-a).e with e=(-1,0)
    // m = (b - a) . e_1 = -(0 - ax) = ax  => negative branch is ax < 0
    const Configuration cfg =
        inverse_kinematics(g, pose, WorkingMode::from_index(1));
    CHECK(cfg.legs[0].a.x() == doctest::Approx(ax).epsilon(1e-14));
    CHECK(cfg.legs[0].a.y() == doctest::Approx(yRail).epsilon(1e-14));
  }
}

TEST_CASE("inverse kinematics rejects far poses") {
  const Geometry g = anchor_geometry();
  for (int mode = 1; mode <= 8; ++mode) {
    CHECK_THROWS_AS(
        inverse_kinematics(g, Pose(10, 0, 0), WorkingMode::from_index(mode)),
        Error);
  }
}

TEST_CASE("working mode table") {
  CHECK(WorkingMode::from_index(1).signs == std::array<int, 3>{-1, -1, -1});
  CHECK(WorkingMode::from_index(5).signs == std::array<int, 3>{+1, +1, +1});
  CHECK(WorkingMode::from_index(2).signs == std::array<int, 3>{+1, -1, -1});
  CHECK(WorkingMode::from_index(3).signs == std::array<int, 3>{-1, +1, -1});
  CHECK_THROWS_AS(WorkingMode::from_index(0), Error);
  CHECK_THROWS_AS(WorkingMode::from_index(9), Error);
  CHECK_THROWS_AS(WorkingMode::from_signs({1, 0, -1}), Error);

  SUBCASE("round trip") {
    for (int i = 1; i <= 8; ++i) {
      CHECK(WorkingMode::from_signs(WorkingMode::from_index(i).signs).index == i);
    }
  }
  SUBCASE("complement pairs") {
    CHECK(WorkingMode::from_index(1).complement().index == 5);
    CHECK(WorkingMode::from_index(2).complement().index == 6);
    CHECK(WorkingMode::from_index(3).complement().index == 7);
    CHECK(WorkingMode::from_index(4).complement().index == 8);
  }
  SUBCASE("cyclic shifts") {
    CHECK(WorkingMode::from_index(2).shifted().index == 3);
    CHECK(WorkingMode::from_index(3).shifted().index == 4);
    CHECK(WorkingMode::from_index(4).shifted().index == 2);
    CHECK(WorkingMode::from_index(6).shifted().index == 7);
    CHECK(WorkingMode::from_index(7).shifted().index == 8);
  }
}

TEST_CASE("leg solution invariants over random reachable poses") {
  const Geometry g = anchor_geometry();
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_int_distribution<int> modeDist(1, 8);

  int tested = 0;
  while (tested < 200) {
    const Pose pose(coord(rng), coord(rng), angle(rng));
    if (!pose_reachable(g, pose)) continue;
    ++tested;
    const WorkingMode mode = WorkingMode::from_index(modeDist(rng));
    const Configuration cfg = inverse_kinematics(g, pose, mode);
    for (int i = 0; i < 3; ++i) {
      const LegSolution& leg = cfg.legs[i];
      CHECK(std::abs(leg.lvec.norm() - g.l) <= 1e-12 * g.l);
      CHECK(std::abs((leg.b - pose.p()).norm() - g.r) <= 1e-12 * g.r);
      if (leg.m != 0.0) CHECK(leg.m * mode.signs[i] > 0.0);
      CHECK(std::abs(leg.m - leg.lvec.dot(g.e[i])) <= 1e-12 * g.l);
      CHECK(leg.gamma >= 0.0);
      CHECK(leg.gamma <= kPi);
    }
  }
}

TEST_CASE("branch magnitude and reachability are mode-independent") {
  const Geometry g = anchor_geometry();
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> coord(-4.0, 4.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);

  for (int trial = 0; trial < 300; ++trial) {
    const Pose pose(coord(rng), coord(rng), angle(rng));
    const bool reachable = pose_reachable(g, pose);
    std::array<double, 3> absM{};
    for (int mode = 1; mode <= 8; ++mode) {
      bool ok = true;
      try {
        const Configuration cfg =
            inverse_kinematics(g, pose, WorkingMode::from_index(mode));
        if (mode == 1) {
          for (int i = 0; i < 3; ++i) absM[i] = std::abs(cfg.legs[i].m);
        } else {
          for (int i = 0; i < 3; ++i) {
            CHECK(std::abs(cfg.legs[i].m) == absM[i]);  // bitwise branch share
          }
        }
      } catch (const Error&) {
        ok = false;
      }
      CHECK(ok == reachable);
    }
  }
}

TEST_CASE("three-fold symmetry permutes the leg solutions") {
  const Geometry g = anchor_geometry();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  const double c = std::cos(2.0 * kPi / 3.0);
  const double s = std::sin(2.0 * kPi / 3.0);

  int tested = 0;
  while (tested < 100) {
    const double x = coord(rng), y = coord(rng), theta = angle(rng);
    if (!pose_reachable(g, Pose(x, y, theta))) continue;
    ++tested;
    const WorkingMode mode = WorkingMode::from_index(2);
    const Configuration base = inverse_kinematics(g, Pose(x, y, theta), mode);
    // the platform triangle is itself 3-fold symmetric, so rotating the
    // position while keeping theta maps leg i onto leg i+1
    const Pose rotated(c * x - s * y, s * x + c * y, theta);
    const Configuration shifted =
        inverse_kinematics(g, rotated, mode.shifted());
    for (int i = 0; i < 3; ++i) {
      CHECK(shifted.legs[(i + 1) % 3].rho ==
            doctest::Approx(base.legs[i].rho).epsilon(1e-9));
    }
  }
}
