/* C API for the n-Lie algebra library.
 *
 * All functions return a status code:
 *   NLIE_OK    (0)  success / all requested checks pass
 *   NLIE_FAIL  (1)  a mathematical check failed (result strings are valid)
 *   NLIE_ERROR (2)  bad input (file, builtin name, query, dimensions)
 *
 * Strings returned through out-parameters are heap-allocated; release
 * them with nlie_string_free. Algebra handles are opaque; release with
 * nlie_algebra_free.
 */
#ifndef NLIE_H
#define NLIE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define NLIE_OK 0
#define NLIE_FAIL 1
#define NLIE_ERROR 2

typedef struct nlie_algebra nlie_algebra;

const char* nlie_version(void);

/* Loads an algebra from a JSON file (format documented in the README).
 * On NLIE_ERROR, *error_message (if non-NULL) receives a description. */
int nlie_algebra_from_file(const char* path, nlie_algebra** out,
                           char** error_message);

/* Parses an algebra from a JSON string. */
int nlie_algebra_from_json(const char* json_text, nlie_algebra** out,
                           char** error_message);

/* Builds a named builtin: "sl2", "heisenberg3", "abelian:n,d", "simple:n". */
int nlie_algebra_builtin(const char* name, nlie_algebra** out,
                         char** error_message);

void nlie_algebra_free(nlie_algebra* algebra);
void nlie_string_free(char* s);

size_t nlie_algebra_arity(const nlie_algebra* algebra);
size_t nlie_algebra_dim(const nlie_algebra* algebra);

/* Each report function writes a human-readable (json=0) or JSON (json=1)
 * report to *report and returns NLIE_OK / NLIE_FAIL per the checks run. */
int nlie_report_check(const nlie_algebra* algebra, int json, char** report);
int nlie_report_lie(const nlie_algebra* algebra, int json, char** report);
int nlie_report_cohomology(const nlie_algebra* algebra, int max_degree,
                           int json, char** report);

/* subspace_json: {"ambient": d, "rows": [["p/q", ...], ...]}.
 * query: "stable" | "ideal" | "cartan" | "invariant". */
int nlie_report_subspace(const nlie_algebra* algebra, const char* subspace_json,
                         const char* query, int json, char** report);

#ifdef __cplusplus
}
#endif

#endif /* NLIE_H */
