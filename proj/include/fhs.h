/* fhs — fractional Hardy–Sobolev toolkit on convex hypersurfaces.
 *
 * C API of the shared library. All entry points return fhs_status; outputs
 * go through pointers. Handles are opaque and freed with their matching
 * *_free function. String results are heap-allocated; release them with
 * fhs_string_free. On failure, fhs_last_error() returns a thread-local
 * message describing the most recent error.
 */
#ifndef FHS_H
#define FHS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fhs_status {
    FHS_OK = 0,
    FHS_ERR_INVALID_ARGUMENT = 1,
    FHS_ERR_UNBOUNDED_BODY = 2,
    FHS_ERR_RESOLUTION_TOO_COARSE = 3,
    FHS_ERR_NORMAL_DEGENERATE = 4,
    FHS_ERR_BETA_OUT_OF_RANGE = 5,
    FHS_ERR_ORIGIN_ON_SURFACE = 6,
    FHS_ERR_DEGENERATE_MESH = 7,
    FHS_ERR_NEGATIVE_CURVATURE = 8,
    FHS_ERR_ALPHA_MISMATCH = 9,
    FHS_ERR_NONCONVERGENCE = 10,
    FHS_ERR_NONNEGATIVITY = 11,
    FHS_ERR_DIVERGENT_SERIES = 12,
    FHS_ERR_EXPONENT_VIOLATION = 13,
    FHS_ERR_EXPONENT_ORDER = 14,
    FHS_ERR_NONPOSITIVE_TAU = 15,
    FHS_ERR_INCONSISTENT_PARAMS = 16,
    FHS_ERR_SPLIT_NOT_FOUND = 17,
    FHS_ERR_ZERO_DENOMINATOR = 18,
    FHS_ERR_INVALID_FIELD = 19,
    FHS_ERR_DEGENERATE_SCALING = 20,
    FHS_ERR_SUPPORT_TOO_LARGE = 21,
    FHS_ERR_IO = 22,
    FHS_ERR_PARSE = 23,
    FHS_ERR_INTERNAL = 24
} fhs_status;

typedef struct fhs_body fhs_body;
typedef struct fhs_mesh fhs_mesh;
typedef struct fhs_field fhs_field;
typedef struct fhs_curvature fhs_curvature;

const char* fhs_last_error(void);
void fhs_string_free(char* s);
void fhs_set_threads(int n);

/* ---- bodies ---------------------------------------------------------- */

/* spec: "ball:r" | "ellipsoid:a,b[,c]" | "cylinder:r,h,rho" | "cube:h" |
 * "polytope:path" | "halfspace:nx,ny[,nz],b", optionally "@tx,ty[,tz]". */
fhs_status fhs_body_parse(const char* spec, int dim_n, fhs_body** out);
fhs_status fhs_body_from_halfspace_file(const char* path, fhs_body** out);
fhs_status fhs_body_transform(const fhs_body* body, double scale, const double translate[3],
                              fhs_body** out);
fhs_status fhs_body_contains(const fhs_body* body, const double point[3], int* out);
fhs_status fhs_body_support_point(const fhs_body* body, const double direction[3],
                                  double out_point[3]);
void fhs_body_free(fhs_body* body);

/* ---- meshes ---------------------------------------------------------- */

/* patch_extent is used for halfspace bodies only; pass 0 otherwise. */
fhs_status fhs_mesh_create(const fhs_body* body, double target_h, double patch_extent,
                           fhs_mesh** out);
fhs_status fhs_mesh_refine(const fhs_mesh* mesh, fhs_mesh** out);
fhs_status fhs_mesh_scale(const fhs_mesh* mesh, double scale, const double translate[3],
                          fhs_mesh** out);
fhs_status fhs_mesh_element_count(const fhs_mesh* mesh, size_t* out);
fhs_status fhs_mesh_total_area(const fhs_mesh* mesh, double* out);
fhs_status fhs_mesh_h_max(const fhs_mesh* mesh, double* out);
fhs_status fhs_mesh_write_off(const fhs_mesh* mesh, const char* path);
fhs_status fhs_mesh_read_off(const char* path, fhs_mesh** out);
void fhs_mesh_free(fhs_mesh* mesh);

/* ---- graph decomposition --------------------------------------------- */

/* JSON array of {axis (1-based), sign, count, area, max_slope}. */
fhs_status fhs_decompose_json(const fhs_mesh* mesh, double epsilon, char** out_json);

/* ---- weighted measures ------------------------------------------------ */

/* subset: "full" | "cap:r" | "random:p" (seeded). Fills a JSON object
 * {value, subset_area, ratio, paper_constant, conjectured_constant,
 *  refinement_delta}. */
fhs_status fhs_measure_json(const fhs_body* body, double beta, const char* subset,
                            uint64_t seed, double resolution, char** out_json);
fhs_status fhs_paper_constant(int n, double beta, double epsilon, double* out);
fhs_status fhs_conjectured_constant(int n, double beta, double* out);
fhs_status fhs_flat_rearrangement_value(double measure, int n, double beta, double* out);
fhs_status fhs_weighted_area(const fhs_mesh* mesh, const uint8_t* mask, double beta,
                             double* out_value, double* out_area, double* out_ratio);
fhs_status fhs_tail_integral(const fhs_mesh* mesh, double beta, double* out);
fhs_status fhs_near_integral(const fhs_mesh* mesh, double beta, double* out);

/* ---- fields ------------------------------------------------------------ */

/* spec: "bump:cx,cy[,cz],r,pow" | "coord:axis" | "cap:cx,cy[,cz],r" | "file:path". */
fhs_status fhs_field_create(const fhs_mesh* mesh, const char* spec, fhs_field** out);
fhs_status fhs_field_from_values(const fhs_mesh* mesh, const double* values, size_t count,
                                 fhs_field** out);
fhs_status fhs_field_value(const fhs_field* field, size_t element, double* out);
void fhs_field_free(fhs_field* field);

/* ---- seminorm and curvature ------------------------------------------- */

fhs_status fhs_seminorm_p(const fhs_mesh* mesh, const fhs_field* field, double s, double p,
                          double* out);
/* method: 0 = boundary integral, 1 = volume (signed indicator) form. */
fhs_status fhs_curvature_create(const fhs_mesh* mesh, const fhs_body* body, double alpha,
                                int method, fhs_curvature** out);
fhs_status fhs_curvature_value(const fhs_curvature* H, size_t element, double* out);
fhs_status fhs_curvature_point_volume(const fhs_body* body, const double point[3], double alpha,
                                      double* out);
fhs_status fhs_rhs_energy(const fhs_mesh* mesh, const fhs_field* field, double s, double p,
                          double alpha, const fhs_curvature* H, double* out_seminorm_term,
                          double* out_curvature_term, double* out_total);
void fhs_curvature_free(fhs_curvature* H);

/* ---- level-set series -------------------------------------------------- */

/* JSON: {cases, failures, worst_ratio}. */
fhs_status fhs_check_series_json(int cases, uint64_t seed, int n, double s, double p,
                                 char** out_json);

/* ---- parameters --------------------------------------------------------- */

/* spec: "n=2,s=0.5,p=1,alpha=0.5,a=1,q=2,gamma=-0.5" (tau derived).
 * JSON: {params..., tau, p_star_s, case, violations[], holder_split?}. */
fhs_status fhs_params_json(const char* spec, char** out_json);
fhs_status fhs_derive_tau(int n, double s, double p, double q, double a, double gamma,
                          double* out);

/* ---- harness ------------------------------------------------------------ */

fhs_status fhs_verify_json(const char* body_spec, int dim_n, const char* field_spec,
                           const char* params_spec, double resolution, int refinements,
                           uint64_t seed, double patch_extent, int unsafe, char** out_json);
/* out_format: 0 = CSV, 1 = JSON. */
fhs_status fhs_sweep(const char* family, const char* body_spec, int dim_n,
                     const char* field_spec, const char* params_spec, double resolution,
                     double beta, uint64_t seed, int out_format, char** out_text);
fhs_status fhs_flat_hardy_json(int dim_n, double patch_extent, double grid_h, double s, double p,
                               const char* radii_csv, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* FHS_H */
