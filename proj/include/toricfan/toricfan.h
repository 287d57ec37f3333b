/*
 * toricfan C API.
 *
 * Opaque handles for fans and simplicial complexes, integer status codes,
 * and JSON strings for everything structured (reports, documents). Strings
 * returned through `char **` out-parameters are heap allocated and must be
 * released with tf_string_free. Handles are released with their *_free
 * function; passing NULL to any *_free function is a no-op.
 *
 * On failure a function returns a nonzero tf_status, leaves its
 * out-parameters untouched and records a message retrievable with
 * tf_last_error() on the calling thread.
 */
#ifndef TORICFAN_H
#define TORICFAN_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef TORICFAN_BUILDING_LIBRARY
#    define TF_API __declspec(dllexport)
#  else
#    define TF_API __declspec(dllimport)
#  endif
#else
#  define TF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
  TF_OK = 0,
  TF_ERR_INVALID_ARGUMENT = 1,
  TF_ERR_PARSE = 2,
  TF_ERR_SINGULAR_BASIS = 3,
  TF_ERR_ZERO_VECTOR = 4,
  TF_ERR_DIMENSION_MISMATCH = 5,
  TF_ERR_NOT_CONTAINED = 6,
  TF_ERR_UNPAIRED_FACET = 7,
  TF_ERR_DEGENERATE_FACET = 8,
  TF_ERR_NON_GENERIC_WITNESS = 9,
  TF_ERR_POINT_IS_RAY = 10,
  TF_ERR_OUTSIDE_SUPPORT = 11,
  TF_ERR_FACE_NOT_PRESENT = 12,
  TF_ERR_MISSING_LABEL = 13,
  TF_ERR_MISSING_COORDINATES = 14,
  TF_ERR_INTERNAL = 15
} tf_status;

typedef struct tf_fan tf_fan;
typedef struct tf_complex tf_complex;

TF_API const char *tf_version(void);
TF_API const char *tf_status_name(tf_status status);
/* Message of the most recent failure on this thread ("" if none). */
TF_API const char *tf_last_error(void);
TF_API void tf_string_free(char *s);

/* ---- fans ---------------------------------------------------------- */

TF_API tf_status tf_fan_parse(const char *json, tf_fan **out);
/* name: "delta" (the Barnette fan) or "delta-prime" (recomputed smooth
 * refinement). */
TF_API tf_status tf_fan_builtin(const char *name, tf_fan **out);
TF_API tf_status tf_fan_serialize(const tf_fan *fan, char **out_json);
TF_API void tf_fan_free(tf_fan *fan);

TF_API size_t tf_fan_ambient_dim(const tf_fan *fan);
TF_API size_t tf_fan_ray_count(const tf_fan *fan);
TF_API size_t tf_fan_cone_count(const tf_fan *fan);

/* Completeness + smoothness sections. witness is "x1,x2,..." or NULL for
 * the default witness. *out_complete is 1 iff the completeness verdict
 * holds. */
TF_API tf_status tf_fan_verify(const tf_fan *fan, const char *witness, char **out_json, int *out_complete);

/* Lattice classification of [-bound, bound]^n. *out_ok is 1 iff every point
 * is covered and the counts sum to (2 bound + 1)^n. */
TF_API tf_status tf_fan_scan(const tf_fan *fan, long long bound, unsigned workers, int collect_one_face,
                             char **out_json, int *out_ok);

/* Per-cone open-orthant test, as a JSON array. */
TF_API tf_status tf_fan_open_orthant(const tf_fan *fan, char **out_json);

TF_API tf_status tf_fan_refines(const tf_fan *fine, const tf_fan *coarse, int *out_refines);

/* Replays the ten Barnette subdivisions; out_steps_json is the step log. */
TF_API tf_status tf_desingularize_barnette(tf_fan **out_fan, char **out_steps_json);

/* Stellar subdivision at an explicit point "x1,x2,..." or at the sum of the
 * rays of the cone with the given comma separated labels. label may be NULL
 * for an automatically chosen fresh label. */
TF_API tf_status tf_fan_subdivide_point(const tf_fan *fan, const char *point, const char *label, tf_fan **out_fan,
                                        char **out_step_json);
TF_API tf_status tf_fan_subdivide_cone(const tf_fan *fan, const char *cone_labels, const char *label,
                                       tf_fan **out_fan, char **out_step_json);

TF_API tf_status tf_fan_suspend(const tf_fan *fan, tf_fan **out_fan);

/* Writes count new handles into out_fans (caller-provided array of size
 * count). start_cone is comma separated labels or NULL for the default
 * selection. */
TF_API tf_status tf_fan_family(const tf_fan *base, size_t count, const char *start_cone, tf_fan **out_fans,
                               char **out_summary_json);

/* ---- simplicial complexes ----------------------------------------- */

TF_API tf_status tf_complex_from_fan(const tf_fan *fan, tf_complex **out);
/* Accepts a complex document or a fan document. */
TF_API tf_status tf_complex_parse(const char *json, tf_complex **out);
TF_API tf_status tf_complex_serialize(const tf_complex *c, char **out_json);
TF_API void tf_complex_free(tf_complex *c);

/* face_labels is comma separated; "" is the empty face. */
TF_API tf_status tf_complex_star(const tf_complex *c, const char *face_labels, tf_complex **out);
TF_API tf_status tf_complex_link(const tf_complex *c, const char *face_labels, tf_complex **out);
TF_API tf_status tf_complex_suspension(const tf_complex *c, tf_complex **out);
TF_API tf_status tf_complex_equal(const tf_complex *a, const tf_complex *b, int *out_equal);

TF_API tf_status tf_complex_f_vector(const tf_complex *c, char **out_json);
TF_API tf_status tf_complex_pseudomanifold(const tf_complex *c, char **out_json, int *out_ok);
TF_API tf_status tf_complex_obstruction(const tf_complex *c, char **out_json, int *out_ok);

/* ---- realizations -------------------------------------------------- */

TF_API tf_status tf_realization_from_fan(const tf_fan *fan, char **out_json);
TF_API tf_status tf_certify(const tf_complex *c, const char *realization_json, char **out_json, int *out_ok);

/* ---- misc ------------------------------------------------------------ */

/* "fnv1a64:<hex>" digest of len bytes. */
TF_API tf_status tf_digest(const char *bytes, size_t len, char **out);

#ifdef __cplusplus
}
#endif

#endif /* TORICFAN_H */
