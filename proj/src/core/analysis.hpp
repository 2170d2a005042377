#pragma once

#include <cstdint>
#include <vector>

#include "geometry.hpp"

namespace prr {

enum class MatrixKind { Abar, B, Kbar };

const char* matrix_kind_name(MatrixKind kind);
MatrixKind matrix_kind_from_name(const std::string& name);

/// Rectangular scan region; samples are taken at cell centers.
struct GridSpec {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  int nx = 0, ny = 0;

  void validate() const;
  double dx() const { return (xmax - xmin) / nx; }
  double dy() const { return (ymax - ymin) / ny; }
  double cx(int ix) const { return xmin + (ix + 0.5) * dx(); }
  double cy(int iy) const { return ymin + (iy + 0.5) * dy(); }
  double cell_area() const { return dx() * dy(); }
};

/// Grid of theta-optimized condition numbers. Arrays are row-major with y
/// outer: index = iy * nx + ix. NaN marks unreachable positions.
struct ScalarField {
  GridSpec grid;
  Geometry geom;
  int mode = 1;
  MatrixKind kind = MatrixKind::Abar;
  double L = 1.0;
  int thetaSamples = 120;
  std::vector<double> values;
  std::vector<double> thetaStar;

  double at(int ix, int iy) const { return values[size_t(iy) * grid.nx + ix]; }
};

struct OptResult {
  double kappa = 0.0;
  double theta = 0.0;
};

/// Best condition number of the chosen matrix over all orientations at
/// position (x, y): uniform theta sampling followed by golden-section
/// refinement around the best sample. Throws UnreachablePosition when no
/// sampled orientation is reachable.
OptResult optimal_conditioning(const Geometry& geom, const WorkingMode& mode,
                               MatrixKind kind, double x, double y, double L,
                               int thetaSamples, double refineTol = 1e-6);

ScalarField scan_field(const Geometry& geom, const WorkingMode& mode,
                       MatrixKind kind, const GridSpec& grid, double L,
                       int thetaSamples, int threads = 1);

/// Orientation-existential reachability mask over the grid (1 = some
/// sampled theta is reachable). Identical for every working mode.
std::vector<std::uint8_t> workspace_mask(const Geometry& geom,
                                         const GridSpec& grid,
                                         int thetaSamples, int threads = 1);

/// Cartesian workspace area by cell counting. The grid must contain the
/// disk of radius R + l + r about the origin.
double workspace_area(const Geometry& geom, const GridSpec& grid,
                      int thetaSamples, int threads = 1);

/// Half-width of a square centered at O that provably contains the
/// workspace: 2 (R + l + r) / sqrt(3).
double default_region_halfwidth(const Geometry& geom);

GridSpec default_grid(const Geometry& geom, int nx = 100, int ny = 100);

/// Mean of the reachable (non-NaN) cells, accumulated in row-major order.
double average_conditioning(const ScalarField& field);

struct SweepRow {
  double ratio = 0.0;  // R / r
  double S = 0.0;      // workspace area
  double kbarA1 = 0.0, kbarA2 = 0.0;
  double kbarB = 0.0;
  double kbarK1 = 0.0, kbarK2 = 0.0;
};

/// Design sweep over R/r with r = 1, l = lOverR, L = sqrt(2) * r. Ratios
/// whose workspace is empty (R > l + r) yield S = 0 and NaN averages.
std::vector<SweepRow> design_sweep(const std::vector<double>& ratios,
                                   double lOverR, int nx, int ny,
                                   int thetaSamples, int threads = 1);

struct ContourSet {
  std::vector<double> levels;
  struct Polyline {
    int levelIndex = 0;
    std::vector<Vec2> points;
  };
  std::vector<Polyline> polylines;
};

/// Marching squares over the cell-center lattice with linear edge
/// interpolation; squares touching NaN samples are skipped; saddles are
/// resolved by the cell-average rule.
ContourSet extract_contours(const ScalarField& field,
                            const std::vector<double>& levels);

}  // namespace prr
