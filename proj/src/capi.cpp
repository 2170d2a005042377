#include "prrkin/prrkin.h"

#include <cmath>
#include <cstring>
#include <string>

#include "core/analysis.hpp"
#include "core/io.hpp"
#include "core/isotropy.hpp"
#include "core/kinetostatics.hpp"

struct prr_geometry {
  prr::Geometry geom;
};

struct prr_field {
  prr::ScalarField field;
};

namespace {

thread_local std::string g_last_error;

prr_status status_of(prr::ErrorCode code) {
  using prr::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidGeometry: return PRR_ERR_INVALID_GEOMETRY;
    case ErrorCode::InvalidArgument: return PRR_ERR_INVALID_ARGUMENT;
    case ErrorCode::UnreachablePose: return PRR_ERR_UNREACHABLE_POSE;
    case ErrorCode::UnreachablePosition: return PRR_ERR_UNREACHABLE_POSITION;
    case ErrorCode::SerialSingular: return PRR_ERR_SERIAL_SINGULAR;
    case ErrorCode::ParallelSingular: return PRR_ERR_PARALLEL_SINGULAR;
    case ErrorCode::DegenerateLength: return PRR_ERR_DEGENERATE_LENGTH;
    case ErrorCode::NoSymmetricConfig: return PRR_ERR_NO_SYMMETRIC_CONFIG;
    case ErrorCode::EmptyWorkspace: return PRR_ERR_EMPTY_WORKSPACE;
    case ErrorCode::RegionTooSmall: return PRR_ERR_REGION_TOO_SMALL;
    case ErrorCode::ParseError: return PRR_ERR_PARSE;
  }
  return PRR_ERR_INTERNAL;
}

template <typename Fn>
prr_status guarded(Fn&& fn) {
  try {
    fn();
    return PRR_OK;
  } catch (const prr::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PRR_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

prr::GridSpec grid_of(const prr_grid& g) {
  prr::GridSpec spec{g.xmin, g.xmax, g.ymin, g.ymax, g.nx, g.ny};
  spec.validate();
  return spec;
}

double resolve_length(const prr::Geometry& geom, double L) {
  return (L > 0.0) ? L : std::sqrt(2.0) * geom.r;
}

}  // namespace

extern "C" {

const char* prr_status_name(prr_status status) {
  switch (status) {
    case PRR_OK: return "OK";
    case PRR_ERR_INVALID_GEOMETRY: return "InvalidGeometry";
    case PRR_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case PRR_ERR_UNREACHABLE_POSE: return "UnreachablePose";
    case PRR_ERR_UNREACHABLE_POSITION: return "UnreachablePosition";
    case PRR_ERR_SERIAL_SINGULAR: return "SerialSingular";
    case PRR_ERR_PARALLEL_SINGULAR: return "ParallelSingular";
    case PRR_ERR_DEGENERATE_LENGTH: return "DegenerateLength";
    case PRR_ERR_NO_SYMMETRIC_CONFIG: return "NoSymmetricConfig";
    case PRR_ERR_EMPTY_WORKSPACE: return "EmptyWorkspace";
    case PRR_ERR_REGION_TOO_SMALL: return "RegionTooSmall";
    case PRR_ERR_PARSE: return "ParseError";
    case PRR_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

const char* prr_last_error(void) { return g_last_error.c_str(); }

void prr_string_free(char* s) { std::free(s); }

prr_status prr_geometry_create(double R, double r, double l, double delta,
                               prr_geometry** out) {
  return guarded([&] {
    *out = new prr_geometry{prr::build_geometry(R, r, l, delta)};
  });
}

void prr_geometry_destroy(prr_geometry* geom) { delete geom; }

double prr_geometry_default_halfwidth(const prr_geometry* geom) {
  return prr::default_region_halfwidth(geom->geom);
}

prr_status prr_ik_json(const prr_geometry* geom, double x, double y,
                       double theta, int mode, char** json_out) {
  return guarded([&] {
    const auto cfg = prr::inverse_kinematics(geom->geom, prr::Pose(x, y, theta),
                                             prr::WorkingMode::from_index(mode));
    *json_out = dup_string(prr::io::config_json(cfg));
  });
}

prr_status prr_ik_rho(const prr_geometry* geom, double x, double y,
                      double theta, int mode, double rho_out[3]) {
  return guarded([&] {
    const auto cfg = prr::inverse_kinematics(geom->geom, prr::Pose(x, y, theta),
                                             prr::WorkingMode::from_index(mode));
    for (int i = 0; i < 3; ++i) rho_out[i] = cfg.legs[i].rho;
  });
}

prr_status prr_jacobians_json(const prr_geometry* geom, double x, double y,
                              double theta, int mode, double L,
                              char** json_out) {
  return guarded([&] {
    const auto cfg = prr::inverse_kinematics(geom->geom, prr::Pose(x, y, theta),
                                             prr::WorkingMode::from_index(mode));
    const auto mat = prr::build_matrices(cfg, resolve_length(geom->geom, L));
    *json_out = dup_string(prr::io::matrices_json(mat));
  });
}

prr_status prr_isotropic_json(const prr_geometry* geom, int mode,
                              char** json_out) {
  return guarded([&] {
    const auto [cfg, rep] = prr::symmetric_isotropic_config(
        geom->geom, prr::WorkingMode::from_index(mode));
    *json_out = dup_string(prr::io::isotropy_json(cfg, rep));
  });
}

prr_status prr_field_scan(const prr_geometry* geom, int mode, const char* kind,
                          prr_grid grid, double L, int theta_samples,
                          int threads, prr_field** out) {
  return guarded([&] {
    *out = new prr_field{prr::scan_field(
        geom->geom, prr::WorkingMode::from_index(mode),
        prr::matrix_kind_from_name(kind ? kind : ""), grid_of(grid),
        resolve_length(geom->geom, L), theta_samples, threads)};
  });
}

void prr_field_destroy(prr_field* field) { delete field; }

prr_status prr_field_to_csv(const prr_field* field, char** csv_out) {
  return guarded([&] {
    *csv_out = dup_string(prr::io::field_to_csv(field->field));
  });
}

prr_status prr_field_from_csv(const char* text, prr_field** out) {
  return guarded([&] {
    *out = new prr_field{prr::io::field_from_csv(text ? text : "")};
  });
}

prr_status prr_field_average(const prr_field* field, double* out) {
  return guarded([&] { *out = prr::average_conditioning(field->field); });
}

prr_status prr_contours_csv(const prr_field* field, const double* levels,
                            int n_levels, char** csv_out) {
  return guarded([&] {
    const std::vector<double> lv(levels, levels + n_levels);
    const auto contours = prr::extract_contours(field->field, lv);
    *csv_out = dup_string(prr::io::contours_to_csv(contours));
  });
}

prr_status prr_workspace(const prr_geometry* geom, prr_grid grid,
                         int theta_samples, int threads, double* area_out,
                         char** mask_csv_out) {
  return guarded([&] {
    const auto spec = grid_of(grid);
    *area_out = prr::workspace_area(geom->geom, spec, theta_samples, threads);
    if (mask_csv_out) {
      const auto mask =
          prr::workspace_mask(geom->geom, spec, theta_samples, threads);
      *mask_csv_out = dup_string(prr::io::mask_to_csv(spec, mask));
    }
  });
}

prr_status prr_sweep_csv(const double* ratios, int n_ratios, double l_over_r,
                         int nx, int ny, int theta_samples, int threads,
                         char** csv_out) {
  return guarded([&] {
    const std::vector<double> rv(ratios, ratios + n_ratios);
    const auto rows =
        prr::design_sweep(rv, l_over_r, nx, ny, theta_samples, threads);
    *csv_out = dup_string(prr::io::sweep_to_csv(rows));
  });
}

}  // extern "C"
