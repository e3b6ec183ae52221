/* glc: geometric Littelmann crystal toolkit - public C interface.
 *
 * All functions return GLC_OK (0) on success or a nonzero error code; a
 * human-readable message for the most recent failure on the calling thread is
 * available from glc_last_error(). Strings returned through `char**` output
 * parameters are heap-allocated and must be released with glc_free().
 *
 * Supported type names: "a1", "a2", "a3", "b2", "c2", "g2" (case-insensitive).
 */
#ifndef GLC_H
#define GLC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  GLC_OK = 0,
  GLC_ERROR = 1,   /* computation or check failure */
  GLC_EINVAL = 2,  /* bad arguments / unsupported type / parse error */
};

const char* glc_last_error(void);
void glc_free(char* ptr);
const char* glc_version(void);

/* ---- root systems (opaque handle) ---- */
typedef struct glc_rootsystem glc_rootsystem;
int glc_rootsystem_create(const char* type, glc_rootsystem** out);
void glc_rootsystem_destroy(glc_rootsystem* rs);
int glc_rootsystem_rank(const glc_rootsystem* rs);
/* roots, coroots, Cartan matrix, Weyl data and enumeration tables as JSON */
int glc_rootsystem_json(const glc_rootsystem* rs, char** out_json);

/* ---- subtraction-free expressions (opaque handle) ---- */
typedef struct glc_expr glc_expr;
int glc_expr_parse(const char* text, glc_expr** out);
void glc_expr_destroy(glc_expr* e);
int glc_expr_num_vars(const glc_expr* e);
/* semifield: "positive", "maslov" (uses q) or "tropical" */
int glc_expr_eval(const glc_expr* e, const char* semifield, double q, const double* values,
                  int n_values, double* out);
int glc_expr_maslov_limit_error(const glc_expr* e, const double* x, int n_values, double q,
                                double* out);

/* ---- one-shot operations backing the CLI subcommands ---- */

/* word: comma-separated letters, e.g. "1,2,1,1,2,1,2,2"; returns P, Q and the
 * shape trace as JSON. */
int glc_rsk_json(const char* word, char** out_json);

/* expression text -> JSON with the canonical form, tropical evaluations at the
 * given points (flattened row-major, n_points x n_vars) and Maslov limit errors
 * at q in {0.25, 0.125, ..., }. */
int glc_trop_json(const char* expr_text, const double* points, int n_points, int n_vars,
                  char** out_json);

/* Apply a transform chain to a path given as CSV (header t,x1..xd). Chain
 * grammar: comma-separated ops among pitman:i | T:i | e:i:c | einf:i | Tw0 |
 * Pw0 | iota | S, with 1-based root indices; q >= 0 applies to the geometric
 * ops. Returns the transformed path as CSV. */
int glc_paths_csv(const char* type, const char* chain, double q, const char* csv_in,
                  char** csv_out);

/* Flow a CSV path through the group picture: returns JSON with B_T, N_T,
 * highest weight, weight, string/Lusztig parameters and f_B (type a1/a2/a3). */
int glc_group_json(const char* type, const char* csv_in, int theta_shift, char** out_json);

/* Whittaker function on a lambda grid (chamber coordinates along the first
 * fundamental coweight direction when d > 1); returns CSV lambda,psi. */
int glc_whittaker_csv(const char* type, const double* mu, int mu_len, double lam_min,
                      double lam_max, int n_points, char** csv_out);

/* Canonical-measure weight samples as CSV (one row per sample). */
int glc_sample_csv(const char* type, const double* lam, int lam_len, const double* mu,
                   int mu_len, long n, uint64_t seed, char** csv_out);

/* Monte Carlo checks; name is one of: dufresne, matsumoto-yor, n-infty,
 * beta-gamma, exponential, discrete-pitman, highest-weight-markov,
 * conditional-representation, lr-disintegration. Returns the TestReport as
 * JSON; *pass is set to 1/0. */
int glc_mc_json(const char* name, const char* type, double a1, double a2, long n, uint64_t seed,
                char** out_json, int* pass);

/* The full acceptance suite (criteria 1..13; selection may be NULL/empty for
 * all, or a comma-separated list like "1,2,5"). */
int glc_suite_json(uint64_t seed, int quick, const char* selection, char** out_json, int* pass);

#ifdef __cplusplus
}
#endif
#endif /* GLC_H */
