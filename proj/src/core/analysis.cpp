#include "analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <thread>

#include "conditioning.hpp"

namespace prr {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Condition number of the chosen matrix at pose (x, y, theta), or -1 when
// the pose is unreachable. Avoids building a full Configuration in the
// scan hot path.
double kappa_eval(const Geometry& geom, const WorkingMode& mode,
                  MatrixKind kind, double x, double y, double theta,
                  double L) {
  const double clampTol = 1e-12 * geom.l * geom.l;
  Eigen::Matrix3d M;
  double m[3];
  for (int i = 0; i < 3; ++i) {
    const double phi = theta + geom.delta + i * (kTwoPi / 3.0);
    const Vec2 b(x + geom.r * std::cos(phi), y + geom.r * std::sin(phi));
    const double v = b.dot(geom.n[i]) - geom.R;
    const double disc = geom.l * geom.l - v * v;
    if (disc < -clampTol) return -1.0;
    const double root = (disc <= clampTol) ? 0.0 : std::sqrt(disc);
    m[i] = mode.signs[i] * root;
    const Vec2 d = b - geom.R * geom.n[i];
    const double rho = d.dot(geom.e[i]) - m[i];
    const Vec2 lvec = d - rho * geom.e[i];
    const double k = lvec.dot(rotate90(Vec2(x, y) - b));
    M(i, 0) = lvec.x();
    M(i, 1) = lvec.y();
    M(i, 2) = -k;
  }
  switch (kind) {
    case MatrixKind::Abar:
      M.col(2) /= L;
      return condition_number(M);
    case MatrixKind::B: {
      Eigen::Matrix3d B = Eigen::Matrix3d::Zero();
      B(0, 0) = m[0];
      B(1, 1) = m[1];
      B(2, 2) = m[2];
      return condition_number(B);
    }
    case MatrixKind::Kbar: {
      if (m[0] == 0.0 || m[1] == 0.0 || m[2] == 0.0) return 0.0;
      M.col(2) /= L;
      for (int i = 0; i < 3; ++i) M.row(i) /= m[i];
      return condition_number(M);
    }
  }
  return -1.0;
}

bool optimal_conditioning_impl(const Geometry& geom, const WorkingMode& mode,
                               MatrixKind kind, double x, double y, double L,
                               int thetaSamples, double refineTol,
                               OptResult& out) {
  const double dtheta = kTwoPi / thetaSamples;
  double bestKappa = -1.0;
  double bestTheta = 0.0;
  for (int k = 0; k < thetaSamples; ++k) {
    const double theta = k * dtheta;
    const double kap = kappa_eval(geom, mode, kind, x, y, theta, L);
    if (kap > bestKappa) {  // strict: smallest-theta tie-break
      bestKappa = kap;
      bestTheta = theta;
    }
  }
  if (bestKappa < 0.0) return false;

  // Golden-section refinement around the best sample.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = bestTheta - dtheta;
  double b = bestTheta + dtheta;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = kappa_eval(geom, mode, kind, x, y, c, L);
  double fd = kappa_eval(geom, mode, kind, x, y, d, L);
  while (b - a > refineTol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = kappa_eval(geom, mode, kind, x, y, c, L);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = kappa_eval(geom, mode, kind, x, y, d, L);
    }
  }
  const double refKappa = std::max(fc, fd);
  if (refKappa > bestKappa) {
    bestKappa = refKappa;
    bestTheta = (fc > fd) ? c : d;
  }
  bestTheta = std::fmod(bestTheta, kTwoPi);
  if (bestTheta < 0.0) bestTheta += kTwoPi;
  out.kappa = bestKappa;
  out.theta = bestTheta;
  return true;
}

// Static row striping; each worker writes disjoint cells, so results are
// independent of the thread count.
void parallel_rows(int ny, int threads, const std::function<void(int)>& rowFn) {
  threads = std::clamp(threads, 1, ny);
  if (threads == 1) {
    for (int iy = 0; iy < ny; ++iy) rowFn(iy);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([=, &rowFn] {
      for (int iy = t; iy < ny; iy += threads) rowFn(iy);
    });
  }
  for (auto& th : pool) th.join();
}

bool position_reachable(const Geometry& geom, double x, double y,
                        int thetaSamples) {
  const double dtheta = kTwoPi / thetaSamples;
  for (int k = 0; k < thetaSamples; ++k) {
    if (pose_reachable(geom, Pose(x, y, k * dtheta))) return true;
  }
  return false;
}

}  // namespace

const char* matrix_kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Abar: return "Abar";
    case MatrixKind::B: return "B";
    case MatrixKind::Kbar: return "Kbar";
  }
  return "?";
}

MatrixKind matrix_kind_from_name(const std::string& name) {
  if (name == "Abar") return MatrixKind::Abar;
  if (name == "B") return MatrixKind::B;
  if (name == "Kbar") return MatrixKind::Kbar;
  fail(ErrorCode::InvalidArgument,
       "matrix kind must be one of Abar, B, Kbar; got '" + name + "'");
}

void GridSpec::validate() const {
  if (!(xmax > xmin) || !(ymax > ymin) || nx < 2 || ny < 2) {
    fail(ErrorCode::InvalidArgument,
         "grid needs xmax > xmin, ymax > ymin and nx, ny >= 2");
  }
}

OptResult optimal_conditioning(const Geometry& geom, const WorkingMode& mode,
                               MatrixKind kind, double x, double y, double L,
                               int thetaSamples, double refineTol) {
  if (!(L > 0.0)) {
    fail(ErrorCode::InvalidArgument, "characteristic length L must be positive");
  }
  if (thetaSamples < 12) {
    fail(ErrorCode::InvalidArgument, "thetaSamples must be at least 12");
  }
  OptResult out;
  if (!optimal_conditioning_impl(geom, mode, kind, x, y, L, thetaSamples,
                                 refineTol, out)) {
    fail(ErrorCode::UnreachablePosition,
         "no sampled orientation is reachable at this position");
  }
  return out;
}

ScalarField scan_field(const Geometry& geom, const WorkingMode& mode,
                       MatrixKind kind, const GridSpec& grid, double L,
                       int thetaSamples, int threads) {
  grid.validate();
  if (!(L > 0.0)) {
    fail(ErrorCode::InvalidArgument, "characteristic length L must be positive");
  }
  if (thetaSamples < 12) {
    fail(ErrorCode::InvalidArgument, "thetaSamples must be at least 12");
  }
  ScalarField field;
  field.grid = grid;
  field.geom = geom;
  field.mode = mode.index;
  field.kind = kind;
  field.L = L;
  field.thetaSamples = thetaSamples;
  field.values.assign(size_t(grid.nx) * grid.ny, kNaN);
  field.thetaStar.assign(size_t(grid.nx) * grid.ny, kNaN);

  parallel_rows(grid.ny, threads, [&](int iy) {
    const double y = grid.cy(iy);
    for (int ix = 0; ix < grid.nx; ++ix) {
      OptResult res;
      if (optimal_conditioning_impl(geom, mode, kind, grid.cx(ix), y, L,
                                    thetaSamples, 1e-6, res)) {
        field.values[size_t(iy) * grid.nx + ix] = res.kappa;
        field.thetaStar[size_t(iy) * grid.nx + ix] = res.theta;
      }
    }
  });
  return field;
}

std::vector<std::uint8_t> workspace_mask(const Geometry& geom,
                                         const GridSpec& grid,
                                         int thetaSamples, int threads) {
  grid.validate();
  std::vector<std::uint8_t> mask(size_t(grid.nx) * grid.ny, 0);
  parallel_rows(grid.ny, threads, [&](int iy) {
    const double y = grid.cy(iy);
    for (int ix = 0; ix < grid.nx; ++ix) {
      mask[size_t(iy) * grid.nx + ix] =
          position_reachable(geom, grid.cx(ix), y, thetaSamples) ? 1 : 0;
    }
  });
  return mask;
}

double workspace_area(const Geometry& geom, const GridSpec& grid,
                      int thetaSamples, int threads) {
  grid.validate();
  const double reach = geom.R + geom.l + geom.r;
  if (grid.xmin > -reach || grid.xmax < reach || grid.ymin > -reach ||
      grid.ymax < reach) {
    fail(ErrorCode::RegionTooSmall,
         "grid must contain the disk of radius R + l + r about the origin");
  }
  const auto mask = workspace_mask(geom, grid, thetaSamples, threads);
  size_t count = 0;
  for (std::uint8_t v : mask) count += v;
  return double(count) * grid.cell_area();
}

double default_region_halfwidth(const Geometry& geom) {
  return 2.0 * (geom.R + geom.l + geom.r) / std::sqrt(3.0);
}

GridSpec default_grid(const Geometry& geom, int nx, int ny) {
  const double h = default_region_halfwidth(geom);
  return GridSpec{-h, h, -h, h, nx, ny};
}

double average_conditioning(const ScalarField& field) {
  double sum = 0.0;
  size_t count = 0;
  for (double v : field.values) {
    if (!std::isnan(v)) {
      sum += v;
      ++count;
    }
  }
  if (count == 0) {
    fail(ErrorCode::EmptyWorkspace, "field has no reachable cells");
  }
  return sum / double(count);
}

std::vector<SweepRow> design_sweep(const std::vector<double>& ratios,
                                   double lOverR, int nx, int ny,
                                   int thetaSamples, int threads) {
  if (!(lOverR > 0.0)) {
    fail(ErrorCode::InvalidArgument, "l/r must be positive");
  }
  std::vector<SweepRow> rows;
  rows.reserve(ratios.size());
  for (double ratio : ratios) {
    const Geometry geom = build_geometry(ratio, 1.0, lOverR);
    const double L = std::sqrt(2.0);  // sqrt(2) * r with r = 1
    const GridSpec grid = default_grid(geom, nx, ny);

    SweepRow row;
    row.ratio = ratio;
    row.S = workspace_area(geom, grid, thetaSamples, threads);
    if (row.S == 0.0) {
      // R > l + r leaves no reachable position; report the row with NaN
      // averages instead of aborting the remaining ratios
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.kbarA1 = row.kbarA2 = row.kbarB = row.kbarK1 = row.kbarK2 = nan;
      rows.push_back(row);
      continue;
    }
    const auto mode1 = WorkingMode::from_index(1);
    const auto mode2 = WorkingMode::from_index(2);
    row.kbarA1 = average_conditioning(
        scan_field(geom, mode1, MatrixKind::Abar, grid, L, thetaSamples, threads));
    row.kbarA2 = average_conditioning(
        scan_field(geom, mode2, MatrixKind::Abar, grid, L, thetaSamples, threads));
    row.kbarB = average_conditioning(
        scan_field(geom, mode1, MatrixKind::B, grid, L, thetaSamples, threads));
    row.kbarK1 = average_conditioning(
        scan_field(geom, mode1, MatrixKind::Kbar, grid, L, thetaSamples, threads));
    row.kbarK2 = average_conditioning(
        scan_field(geom, mode2, MatrixKind::Kbar, grid, L, thetaSamples, threads));
    rows.push_back(row);
  }
  return rows;
}

namespace {

struct PointKey {
  std::uint64_t x, y;
  bool operator<(const PointKey& o) const {
    return x != o.x ? x < o.x : y < o.y;
  }
};

PointKey key_of(const Vec2& p) {
  return {std::bit_cast<std::uint64_t>(p.x()), std::bit_cast<std::uint64_t>(p.y())};
}

struct Segment {
  Vec2 p0, p1;
  bool used = false;
};

// edge ids: 0 bottom, 1 right, 2 top, 3 left
Vec2 edge_point(int edge, double x0, double x1, double y0, double y1,
                double v00, double v10, double v11, double v01, double level) {
  auto lerp = [level](double a, double b, double va, double vb) {
    return a + (level - va) / (vb - va) * (b - a);
  };
  switch (edge) {
    case 0: return Vec2(lerp(x0, x1, v00, v10), y0);
    case 1: return Vec2(x1, lerp(y0, y1, v10, v11));
    case 2: return Vec2(lerp(x0, x1, v01, v11), y1);
    default: return Vec2(x0, lerp(y0, y1, v00, v01));
  }
}

}  // namespace

ContourSet extract_contours(const ScalarField& field,
                            const std::vector<double>& levels) {
  for (double level : levels) {
    if (!(level > 0.0) || !(level < 1.0)) {
      fail(ErrorCode::InvalidArgument, "contour levels must lie in (0, 1)");
    }
  }
  ContourSet set;
  set.levels = levels;
  const GridSpec& g = field.grid;

  for (size_t li = 0; li < levels.size(); ++li) {
    const double level = levels[li];
    std::vector<Segment> segs;

    for (int iy = 0; iy + 1 < g.ny; ++iy) {
      for (int ix = 0; ix + 1 < g.nx; ++ix) {
        const double v00 = field.at(ix, iy);
        const double v10 = field.at(ix + 1, iy);
        const double v11 = field.at(ix + 1, iy + 1);
        const double v01 = field.at(ix, iy + 1);
        if (std::isnan(v00) || std::isnan(v10) || std::isnan(v11) ||
            std::isnan(v01)) {
          continue;
        }
        int code = 0;
        if (v00 > level) code |= 1;
        if (v10 > level) code |= 2;
        if (v11 > level) code |= 4;
        if (v01 > level) code |= 8;
        if (code == 0 || code == 15) continue;

        const double x0 = g.cx(ix), x1 = g.cx(ix + 1);
        const double y0 = g.cy(iy), y1 = g.cy(iy + 1);
        auto emit = [&](int e0, int e1) {
          segs.push_back({edge_point(e0, x0, x1, y0, y1, v00, v10, v11, v01, level),
                          edge_point(e1, x0, x1, y0, y1, v00, v10, v11, v01, level)});
        };
        switch (code) {
          case 1: case 14: emit(3, 0); break;
          case 2: case 13: emit(0, 1); break;
          case 3: case 12: emit(3, 1); break;
          case 4: case 11: emit(1, 2); break;
          case 6: case 9: emit(0, 2); break;
          case 7: case 8: emit(2, 3); break;
          case 5:   // saddle: resolve with the cell average
            if ((v00 + v10 + v11 + v01) / 4.0 > level) {
              emit(0, 1);
              emit(2, 3);
            } else {
              emit(3, 0);
              emit(1, 2);
            }
            break;
          case 10:
            if ((v00 + v10 + v11 + v01) / 4.0 > level) {
              emit(3, 0);
              emit(1, 2);
            } else {
              emit(0, 1);
              emit(2, 3);
            }
            break;
        }
      }
    }

    // Stitch segments into polylines; shared edge crossings are computed
    // identically by both adjacent squares, so exact keys match.
    std::multimap<PointKey, size_t> byEnd;
    for (size_t s = 0; s < segs.size(); ++s) {
      byEnd.insert({key_of(segs[s].p0), s});
      byEnd.insert({key_of(segs[s].p1), s});
    }
    auto next_unused = [&](const PointKey& key, Vec2& other) -> bool {
      auto [lo, hi] = byEnd.equal_range(key);
      for (auto it = lo; it != hi; ++it) {
        Segment& s = segs[it->second];
        if (s.used) continue;
        s.used = true;
        other = (key_of(s.p0).x == key.x && key_of(s.p0).y == key.y) ? s.p1 : s.p0;
        return true;
      }
      return false;
    };

    for (size_t s = 0; s < segs.size(); ++s) {
      if (segs[s].used) continue;
      segs[s].used = true;
      std::vector<Vec2> chain = {segs[s].p0, segs[s].p1};
      Vec2 next;
      while (next_unused(key_of(chain.back()), next)) chain.push_back(next);
      std::reverse(chain.begin(), chain.end());
      while (next_unused(key_of(chain.back()), next)) chain.push_back(next);
      ContourSet::Polyline line;
      line.levelIndex = int(li);
      line.points = std::move(chain);
      set.polylines.push_back(std::move(line));
    }
  }
  return set;
}

}  // namespace prr
