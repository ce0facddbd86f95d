/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef SPHERETOPO_H
#define SPHERETOPO_H

#include <stdbool.h>
#include <stddef.h>

// Result code of every call.
typedef enum StStatus {
  ST_STATUS_OK = 0,
  ST_STATUS_NULL_POINTER = 1,
  ST_STATUS_INVALID_ARGUMENT = 2,
  ST_STATUS_DOMAIN_ERROR = 3,
  ST_STATUS_INFEASIBLE = 4,
  ST_STATUS_IO = 5,
  ST_STATUS_PANIC = 6,
} StStatus;

typedef enum StSolid {
  ST_SOLID_TETRAHEDRON = 0,
  ST_SOLID_CUBE = 1,
  ST_SOLID_OCTAHEDRON = 2,
  ST_SOLID_DODECAHEDRON = 3,
  ST_SOLID_ICOSAHEDRON = 4,
} StSolid;

// Opaque design handle.
typedef struct StDesign StDesign;

// Metrics of one design. Quantities that are undefined for an infeasible
// design (`d_loco`, `j`) are NaN; an unbounded clearance is `+inf`.
typedef struct StMetrics {
  double amplitude;
  double radius;
  bool feasible;
  double a_loco;
  double d_loco;
  double clearance;
  double c_slack;
  double a_e;
  double a_s;
  double eps_intra;
  double g_e;
  double eps_inter;
  double j;
  double t_star[2];
} StMetrics;

typedef struct StOptimum {
  double a_star;
  double j_star;
  double feasible_min;
  double feasible_max;
} StOptimum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null after a success.
// The pointer stays valid until the next call on the same thread.
const char *st_last_error_message(void);

// Creates a design with default metric options.
//
// # Safety
// `out` must be null or point to writable storage for one pointer.
enum StStatus st_design_new(enum StSolid solid,
                            double edge_length,
                            double amplitude,
                            struct StDesign **out);

// Releases a design. Null is ignored.
//
// # Safety
// `design` must be null or a handle from [`st_design_new`] not yet freed.
void st_design_free(struct StDesign *design);

// # Safety
// `design` must be null or a live handle.
enum StStatus st_design_set_amplitude(struct StDesign *design, double amplitude);

// Sets the clearance slack in millimetres; a negative value restores the
// automatic slack.
//
// # Safety
// `design` must be null or a live handle.
enum StStatus st_design_set_c_slack(struct StDesign *design, double c_slack);

// Sets the number of samples per edge curve.
//
// # Safety
// `design` must be null or a live handle.
enum StStatus st_design_set_samples(struct StDesign *design, size_t samples);

// Sphere radius for the design's solid and edge length.
//
// # Safety
// `design` must be null or a live handle; `out` null or writable.
enum StStatus st_design_radius(const struct StDesign *design, double *out);

// Evaluates every metric at the design's amplitude.
//
// # Safety
// `design` must be null or a live handle; `out` null or writable.
enum StStatus st_design_evaluate(struct StDesign *design, double alpha, struct StMetrics *out);

// Finds the amplitude minimizing `J` and stores it as the design amplitude.
//
// # Safety
// `design` must be null or a live handle; `out` null or writable.
enum StStatus st_design_optimize(struct StDesign *design,
                                 double alpha,
                                 double resolution,
                                 struct StOptimum *out);

// Writes the planar outline as SVG.
//
// # Safety
// `design` must be null or a live handle; `path` null or a NUL-terminated
// UTF-8 string.
enum StStatus st_design_export_svg(struct StDesign *design, const char *path, size_t precision);

// Writes the spherical tiling as OBJ polylines, with triangulated module
// patches when `patch` is set.
//
// # Safety
// `design` must be null or a live handle; `path` null or a NUL-terminated
// UTF-8 string.
enum StStatus st_design_export_obj(const struct StDesign *design,
                                   const char *path,
                                   size_t precision,
                                   bool patch);

// Width of each of `count` cavities that curls a limb of chord
// `limb_length` to radius `curl_radius` with cavity depth `height`.
//
// # Safety
// `out` must be null or writable.
enum StStatus st_cavity_width(double limb_length,
                              double curl_radius,
                              double height,
                              size_t count,
                              double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPHERETOPO_H */
