/* C interface to the graded flag geometry library.
 *
 * All functions return a gfg_status. Output strings are heap-allocated
 * JSON documents owned by the caller; release them with gfg_string_free.
 * GFG_OK means the operation succeeded, GFG_FAIL means it ran but the
 * mathematical answer is negative (invalid input algebra, point outside the
 * chart, non-transversal target, failed property suite), GFG_ERR means the
 * request itself was malformed. On GFG_ERR the output string, when
 * requested, holds {"error": "..."}.
 */
#ifndef GFG_H
#define GFG_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gfg_algebra gfg_algebra;

typedef enum gfg_status {
  GFG_OK = 0,
  GFG_FAIL = 1,
  GFG_ERR = 2
} gfg_status;

const char* gfg_version(void);

/* Construction: from a JSON document or from the built-in catalog. */
gfg_status gfg_algebra_load(const char* json_text, gfg_algebra** out, char** message);
gfg_status gfg_algebra_catalog(const char* name, gfg_algebra** out, char** message);
void gfg_algebra_free(gfg_algebra* a);

/* Canonical JSON serialization (deterministic byte-for-byte). */
gfg_status gfg_algebra_save(const gfg_algebra* a, char** json_out);

/* Names available to gfg_algebra_catalog, as a JSON array. */
gfg_status gfg_catalog_names(char** json_out);

/* Re-checks every axiom (antisymmetry is structural, Jacobi, grading). */
gfg_status gfg_validate(const gfg_algebra* a, char** report_out);

/* Chart action of the group word on x (full-algebra coordinates, must lie
 * in the positive nilpotent part). Word syntax: "+[...];-[...];...". */
gfg_status gfg_act(const gfg_algebra* a, const char* word, const char* x,
                   char** result_out);

/* Generalized Bergman operator B+(x, w) at the given layer (1..k). */
gfg_status gfg_bergman(const gfg_algebra* a, const char* x, const char* w,
                       int layer, char** result_out);

/* Unipotent torsor: the unique filtration-raising Y with
 * e^Y . (base minus filtration) = word . (base minus filtration). */
gfg_status gfg_torsor(const gfg_algebra* a, const char* word, char** result_out);

/* Canonical kernel between the minus-side point of w and the plus-side
 * point of x at the given layer. */
gfg_status gfg_kernel(const gfg_algebra* a, const char* x, const char* w,
                      int layer, char** result_out);

/* Polynomial realization of Y as a map into layer frame coordinates. */
gfg_status gfg_realize(const gfg_algebra* a, const char* y, int layer,
                       char** result_out);

/* Randomized property suites; GFG_FAIL when any check fails. */
gfg_status gfg_properties(const gfg_algebra* a, unsigned long long seed,
                          int trials, char** report_out);

void gfg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
