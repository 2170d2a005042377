/* prrkin: kinetostatic analysis of the planar 3-PRR parallel manipulator.
 *
 * C interface to the shared library. All objects are opaque handles owned
 * by the library; every function returns a status code, with a detailed
 * message available from prr_last_error() after a failure. Strings
 * returned through char** are heap-allocated and must be released with
 * prr_string_free().
 */
#ifndef PRRKIN_H
#define PRRKIN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum prr_status {
  PRR_OK = 0,
  PRR_ERR_INVALID_GEOMETRY = 1,
  PRR_ERR_INVALID_ARGUMENT = 2,
  PRR_ERR_UNREACHABLE_POSE = 3,
  PRR_ERR_UNREACHABLE_POSITION = 4,
  PRR_ERR_SERIAL_SINGULAR = 5,
  PRR_ERR_PARALLEL_SINGULAR = 6,
  PRR_ERR_DEGENERATE_LENGTH = 7,
  PRR_ERR_NO_SYMMETRIC_CONFIG = 8,
  PRR_ERR_EMPTY_WORKSPACE = 9,
  PRR_ERR_REGION_TOO_SMALL = 10,
  PRR_ERR_PARSE = 11,
  PRR_ERR_INTERNAL = 12
} prr_status;

/* Stable name of a status code, e.g. "UnreachablePose". */
const char* prr_status_name(prr_status status);

/* Message of the most recent failure on this thread. */
const char* prr_last_error(void);

void prr_string_free(char* s);

typedef struct prr_geometry prr_geometry;
typedef struct prr_field prr_field;

typedef struct prr_grid {
  double xmin, xmax, ymin, ymax;
  int nx, ny;
} prr_grid;

/* ---- geometry ---- */

/* delta is the platform anchor phase offset in radians. */
prr_status prr_geometry_create(double R, double r, double l, double delta,
                               prr_geometry** out);
void prr_geometry_destroy(prr_geometry* geom);

/* Half-width of a square region about the origin guaranteed to contain
 * the Cartesian workspace. */
double prr_geometry_default_halfwidth(const prr_geometry* geom);

/* ---- single-configuration reports (JSON) ---- */

/* Inverse kinematics at pose (x, y, theta) in working mode 1..8. */
prr_status prr_ik_json(const prr_geometry* geom, double x, double y,
                       double theta, int mode, char** json_out);
prr_status prr_ik_rho(const prr_geometry* geom, double x, double y,
                      double theta, int mode, double rho_out[3]);

/* Jacobian matrices, determinants, conditioning and singularity class.
 * L <= 0 selects the default characteristic length sqrt(2)*r. */
prr_status prr_jacobians_json(const prr_geometry* geom, double x, double y,
                              double theta, int mode, double L,
                              char** json_out);

/* The centered isotropic configuration (mode 1 or 5). */
prr_status prr_isotropic_json(const prr_geometry* geom, int mode,
                              char** json_out);

/* ---- scalar fields ---- */

/* kind is one of "Abar", "B", "Kbar". L <= 0 selects sqrt(2)*r. */
prr_status prr_field_scan(const prr_geometry* geom, int mode, const char* kind,
                          prr_grid grid, double L, int theta_samples,
                          int threads, prr_field** out);
void prr_field_destroy(prr_field* field);

prr_status prr_field_to_csv(const prr_field* field, char** csv_out);
prr_status prr_field_from_csv(const char* text, prr_field** out);
prr_status prr_field_average(const prr_field* field, double* out);

/* Marching-squares isolines of the field; levels in (0, 1). */
prr_status prr_contours_csv(const prr_field* field, const double* levels,
                            int n_levels, char** csv_out);

/* ---- workspace and design sweep ---- */

/* Cartesian workspace area by cell counting; mask_csv_out may be NULL. */
prr_status prr_workspace(const prr_geometry* geom, prr_grid grid,
                         int theta_samples, int threads, double* area_out,
                         char** mask_csv_out);

/* Sweep over R/r ratios with r = 1, l = l_over_r and L = sqrt(2). */
prr_status prr_sweep_csv(const double* ratios, int n_ratios, double l_over_r,
                         int nx, int ny, int theta_samples, int threads,
                         char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* PRRKIN_H */
