/*
 * C interface to the σ-set library.
 *
 * Values cross the boundary as opaque handles owned by the caller and
 * released with the matching *_free function. Every fallible call returns a
 * sigma_status; on failure sigma_last_error() describes the problem for the
 * calling thread until its next library call.
 */
#ifndef SIGMA_SIGMA_H
#define SIGMA_SIGMA_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SIGMA_BUILDING_LIBRARY)
#    define SIGMA_API __declspec(dllexport)
#  else
#    define SIGMA_API __declspec(dllimport)
#  endif
#else
#  define SIGMA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sigma_status {
  SIGMA_OK = 0,
  SIGMA_ERR_INVALID_ARGUMENT = 1,
  SIGMA_ERR_INVALID_SYMBOL = 2,
  SIGMA_ERR_USAGE = 3,
  SIGMA_ERR_PARSE = 4,
  SIGMA_ERR_EVALUATION = 5,
  SIGMA_ERR_ORACLE_INFEASIBLE = 6,
  SIGMA_ERR_CONTRACT = 7,
  SIGMA_ERR_INTERNAL = 8
} sigma_status;

typedef struct sigma_set sigma_set;
typedef struct sigma_session sigma_session;
typedef struct sigma_batch sigma_batch;

SIGMA_API const char* sigma_version(void);
SIGMA_API const char* sigma_last_error(void);
SIGMA_API const char* sigma_status_name(sigma_status status);
SIGMA_API void sigma_string_free(char* text);

/* ---- σ-set values ------------------------------------------------------ */

/* Evaluates a closed expression such as "{1, 2*}" or "{a} + anti({b})". */
SIGMA_API sigma_status sigma_set_parse(const char* text, sigma_set** out);
SIGMA_API sigma_status sigma_set_clone(const sigma_set* set, sigma_set** out);
SIGMA_API void sigma_set_free(sigma_set* set);
SIGMA_API size_t sigma_set_size(const sigma_set* set);
SIGMA_API int sigma_set_equal(const sigma_set* a, const sigma_set* b);
/* Canonical text "{a, b*}"; release with sigma_string_free. */
SIGMA_API sigma_status sigma_set_format(const sigma_set* set, char** out);

SIGMA_API sigma_status sigma_hat_intersect(const sigma_set* x, const sigma_set* y,
                                           sigma_set** out);
SIGMA_API sigma_status sigma_star_diff(const sigma_set* x, const sigma_set* y,
                                       sigma_set** out);
SIGMA_API sigma_status sigma_fuse(const sigma_set* x, const sigma_set* y,
                                  sigma_set** out);
SIGMA_API sigma_status sigma_antiset(const sigma_set* x, sigma_set** out);

/* ---- associativity ----------------------------------------------------- */

SIGMA_API sigma_status sigma_eval_chain(const sigma_set* a, const sigma_set* b,
                                        const sigma_set* c, sigma_set** out);
SIGMA_API sigma_status sigma_is_assoc_order(const sigma_set* a, const sigma_set* b,
                                            const sigma_set* c, int* out);
SIGMA_API sigma_status sigma_is_locally_associative(const sigma_set* x,
                                                    const sigma_set* y,
                                                    const sigma_set* z, int* out);
SIGMA_API sigma_status sigma_check_group(const sigma_set* const* members,
                                         size_t count, int* is_group);

/* ---- equation solving -------------------------------------------------- */

typedef enum sigma_solve_status {
  SIGMA_SOLVE_SOLVED = 0,
  SIGMA_SOLVE_NO_SOLUTION = 1,
  SIGMA_SOLVE_ORACLE_INFEASIBLE = 2
} sigma_solve_status;

/* Solves A ∪ X = B. *candidate always receives B ∪ A*. */
SIGMA_API sigma_status sigma_solve(const sigma_set* a, const sigma_set* b,
                                   sigma_solve_status* status,
                                   sigma_set** candidate);

/* ---- language sessions ------------------------------------------------- */

typedef enum sigma_output_format {
  SIGMA_OUTPUT_HUMAN = 0,
  SIGMA_OUTPUT_JSON = 1
} sigma_output_format;

typedef enum sigma_record_status {
  SIGMA_RECORD_OK = 0,
  SIGMA_RECORD_ERROR = 1,
  SIGMA_RECORD_CHECK_FAILED = 2,
  SIGMA_RECORD_NO_SOLUTION = 3,
  SIGMA_RECORD_ORACLE_INFEASIBLE = 4
} sigma_record_status;

/* strict != 0 turns non-locally-associative fusion chains into errors. */
SIGMA_API sigma_status sigma_session_create(int strict, sigma_session** out);
SIGMA_API void sigma_session_free(sigma_session* session);

/* Evaluates statements against the session's bindings. Language errors are
 * reported inside the batch (SIGMA_RECORD_ERROR), not as a failed call. */
SIGMA_API sigma_status sigma_session_eval(sigma_session* session,
                                          const char* source,
                                          sigma_output_format format,
                                          sigma_batch** out);
/* Looks up a binding; SIGMA_ERR_EVALUATION when unbound. */
SIGMA_API sigma_status sigma_session_lookup(const sigma_session* session,
                                            const char* name, sigma_set** out);

SIGMA_API size_t sigma_batch_count(const sigma_batch* batch);
SIGMA_API sigma_record_status sigma_batch_record_status(const sigma_batch* batch,
                                                        size_t index);
/* Rendered result text and diagnostics; owned by the batch. */
SIGMA_API const char* sigma_batch_output(const sigma_batch* batch);
SIGMA_API const char* sigma_batch_diagnostics(const sigma_batch* batch);
SIGMA_API void sigma_batch_free(sigma_batch* batch);

#ifdef __cplusplus
}
#endif

#endif /* SIGMA_SIGMA_H */
