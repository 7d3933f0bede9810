#ifndef AFFCRYSTAL_H
#define AFFCRYSTAL_H

/* C interface to libaffcrystal. Every call returns an afc_status; on
 * failure afc_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Strings handed out by the library are
 * released with afc_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(AFC_BUILDING_LIBRARY)
#define AFC_API __attribute__((visibility("default")))
#else
#define AFC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  AFC_OK = 0,
  AFC_ERR_ARGUMENT = 1, /* malformed lambda, kind, word or JSON */
  AFC_ERR_NULL_STEP = 2, /* an operator in the word gives 0 */
  AFC_ERR_DOMAIN = 3,    /* non-generic sample or an inversion without a unique solution */
  AFC_ERR_BUDGET = 4,    /* graph enumeration hit max_nodes */
  AFC_ERR_VERIFY = 5,    /* a verification suite failed */
  AFC_ERR_INTERNAL = 6
} afc_status;

typedef struct afc_path afc_path;

AFC_API const char* afc_last_error(void);
AFC_API const char* afc_version(void);
AFC_API void afc_string_free(char* s);

/* lambda: "a0,a1,...,an"; kind: "B1", "Bn" or "Ad"; word: tokens "i" or
 * "i^m", rightmost applied first. */
AFC_API afc_status afc_path_from_word(const char* lambda, const char* kind, const char* word, afc_path** out);
AFC_API afc_status afc_path_from_json(const char* json, afc_path** out);
AFC_API void afc_path_free(afc_path* p);
AFC_API afc_status afc_path_to_json(const afc_path* p, char** out);
/* op is 'e' or 'f'. *out is set to NULL when the operator gives 0. */
AFC_API afc_status afc_path_apply(const afc_path* p, char op, int i, afc_path** out);
AFC_API afc_status afc_path_eps_phi(const afc_path* p, int i, int* eps, int* phi);
/* Writes n+1 weight coefficients when cap allows; *len gets n+1. */
AFC_API afc_status afc_path_weight(const afc_path* p, int* coeffs, size_t cap, size_t* len);
AFC_API int afc_path_equal(const afc_path* a, const afc_path* b);

/* Walls, matrix units, commutant dimension and kernel table (JSON).
 * field: "fp" (default when NULL) or "q"; it selects the field used for
 * the commutant dimension. Kernel tables are always sampled over F_p. */
AFC_API afc_status afc_quiver_run(const char* lambda, const char* word, uint64_t seed, const char* field,
                                  char** json_out);
/* Full comparison report (JSON); *ok is 1 when every check passed. */
AFC_API afc_status afc_pipeline_run(const char* lambda, const char* word, uint64_t seed, char** json_out, int* ok);

/* DOT ball of radius depth (negative: unbounded) around the highest weight
 * path of B(lambda) in the given path model. */
AFC_API afc_status afc_graph_dot_path(const char* lambda, const char* kind, int depth, size_t max_nodes,
                                      char** dot_out);
/* DOT graph of B^{1,l}, B^{n,l} or B^{ad,l}, grown from its first element. */
AFC_API afc_status afc_graph_dot_perfect(const char* kind, int n, int ell, int depth, char** dot_out);

/* suite: example, xi, perfect, bridge, axioms or all. fixture may be NULL.
 * Returns AFC_ERR_VERIFY when a case fails; the report is written either
 * way. */
AFC_API afc_status afc_verify(const char* suite, uint64_t seed, const char* fixture, char** report_out);

#ifdef __cplusplus
}
#endif

#endif
