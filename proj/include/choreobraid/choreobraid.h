#ifndef CHOREOBRAID_H
#define CHOREOBRAID_H

/* choreobraid - braid types and stretch factors of planar N-body simple
 * choreographies.
 *
 * C interface to the shared library.  All functions that can fail return a
 * cb_status; CB_OK is zero.  On failure cb_last_error() returns a
 * human-readable detail string (thread-local, valid until the next failing
 * call on the same thread).  Strings returned through char** out-parameters
 * are heap-allocated and must be released with cb_string_free().  Trajectory
 * objects are opaque handles released with cb_trajectory_free().
 *
 * Sign sequences are spelled as strings of '+' and '-' characters, one per
 * entry, e.g. "+-+" for (1,-1,1).  Braid words use the text syntax
 * "s2 s1'" where a trailing apostrophe marks an inverse generator.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CB_API __declspec(dllexport)
#else
#define CB_API __attribute__((visibility("default")))
#endif

typedef enum cb_status {
  CB_OK = 0,
  CB_ERR_INVALID_ARGUMENT = 1,
  CB_ERR_PARSE = 2,
  CB_ERR_SOLVER = 3,
  CB_ERR_VALIDATION = 4,
  CB_ERR_IO = 5,
  CB_ERR_AMBIGUOUS = 6,
  CB_ERR_NO_CONVERGENCE = 7,
  CB_ERR_INTERNAL = 8
} cb_status;

/* Opaque handle to a solved or loaded choreography trajectory. */
typedef struct cb_trajectory cb_trajectory;

CB_API const char* cb_version(void);
CB_API const char* cb_last_error(void);
CB_API void cb_string_free(char* s);

/* Enumeration report for N bodies: all compositions of N-1, their sign
 * sequences under the block bijection, equivalence classes and the class
 * count.  JSON. */
CB_API cb_status cb_compositions_json(int n_bodies, char** out);

/* CSV table of extremal stretch factors for N = 3..n_max.  Columns
 * N,argmin,lambda_min,argmax,lambda_max. */
CB_API cb_status cb_table1_csv(int n_max, double tol, char** out);

/* Stretch-factor report for one composition (parts of N-1).  JSON with the
 * characteristic polynomial, a certified root enclosure of width <= tol and
 * the periodic/pseudo-Anosov classification. */
CB_API cb_status cb_stretch_json(const int* parts, size_t n_parts, double tol,
                                 char** out);

/* Nielsen-Thurston classification of the braid attached to a sign
 * sequence.  JSON. */
CB_API cb_status cb_classify_json(const char* omega, char** out);

/* Predicted primitive braid word of the choreography for omega, in text
 * syntax. */
CB_API cb_status cb_expected_primitive(const char* omega, char** out_word);

/* Free-group growth-rate estimate of a braid word's stretch factor.
 * max_iter <= 0 and tol <= 0 select defaults.  converged reports whether the
 * estimate stabilised; a non-converged run still returns the last
 * estimate. */
CB_API cb_status cb_growth_estimate(const char* word, int strands,
                                    int max_iter, double tol,
                                    double* estimate, int* iterations,
                                    int* converged);

/* Minimise the constrained action for (n_bodies, omega) on grid_per_unit
 * samples per unit time.  gradient_tol <= 0 selects the default (1e-8).
 * The seed determines the initial path perturbation; runs are
 * deterministic. */
CB_API cb_status cb_solve(int n_bodies, const char* omega, int grid_per_unit,
                          double gradient_tol, unsigned long long seed,
                          cb_trajectory** out);

CB_API cb_status cb_trajectory_load(const char* path, cb_trajectory** out);
CB_API cb_status cb_trajectory_save(const cb_trajectory* t, const char* path);
CB_API cb_status cb_trajectory_svg(const cb_trajectory* t, const char* path);
CB_API cb_status cb_trajectory_info_json(const cb_trajectory* t, char** out);

/* Physical validation of a trajectory: equation-of-motion residual, minimum
 * separation, constraint signs, velocity monotonicity, axis crossings.
 * passed is 1 iff every check holds. */
CB_API cb_status cb_validate_json(const cb_trajectory* t, char** out,
                                  int* passed);

/* Read the primitive braid word off the trajectory.  epsilon <= 0 selects
 * the default base-time offset. */
CB_API cb_status cb_extract_word(const cb_trajectory* t, double epsilon,
                                 char** out_word);

/* Full braid-type verification: extracted word vs prediction, conjugacy to
 * the alpha word, and stretch-factor cross-check. */
CB_API cb_status cb_verify_json(const cb_trajectory* t, char** out,
                                int* passed);

CB_API void cb_trajectory_free(cb_trajectory* t);

#ifdef __cplusplus
}
#endif

#endif /* CHOREOBRAID_H */
