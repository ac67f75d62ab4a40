#ifndef MATINEQ_H
#define MATINEQ_H

#include <stdint.h>
#include <stddef.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum MiStatus {
  MiOk = 0,
  MiNullPointer = 1,
  MiInvalidUtf8 = 2,
  MiUnknownLaw = 3,
  MiUnsupportedDim = 4,
  MiShapeMismatch = 5,
  MiParseError = 6,
  MiInvalidArgument = 7,
  MiInternalError = 8,
} MiStatus;

/**
 * Opaque handle to a law instance.
 */
typedef struct MiInstance MiInstance;

/**
 * Opaque handle to an evaluated verdict.
 */
typedef struct MiVerdict MiVerdict;

/**
 * Library version as a static NUL-terminated string.
 */
const char *mi_version(void);

/**
 * Number of laws in the registry.
 */
uintptr_t mi_law_count(void);

/**
 * Law id at `index` (static storage), or NULL when out of range.
 */
const char *mi_law_id(uintptr_t index);

/**
 * One-line description of the law at `index`, or NULL when out of range.
 */
const char *mi_law_summary(uintptr_t index);

/**
 * Deterministically generate a hypothesis-valid instance of a law.
 *
 * # Safety
 * `law` must be a valid NUL-terminated string and `out` a valid pointer.
 * The returned handle must be released with [`mi_instance_free`].
 */
enum MiStatus mi_instance_random(const char *law,
                                 uintptr_t dim,
                                 uint64_t seed,
                                 struct MiInstance **out);

/**
 * Parse an instance document (shape-validated against its law).
 *
 * # Safety
 * `json` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum MiStatus mi_instance_from_json(const char *json, struct MiInstance **out);

/**
 * Serialize an instance to JSON; the string must be freed with
 * [`mi_string_free`].
 *
 * # Safety
 * `inst` must be a live handle from this library; `out` must be valid.
 */
enum MiStatus mi_instance_to_json(const struct MiInstance *inst, char **out);

/**
 * Release an instance handle. NULL is a no-op.
 *
 * # Safety
 * `inst` must be a handle from this library, not yet freed.
 */
void mi_instance_free(struct MiInstance *inst);

/**
 * Check an instance under the given tolerance policy.
 *
 * # Safety
 * `inst` must be a live handle; `out` must be valid. The verdict handle
 * must be released with [`mi_verdict_free`].
 */
enum MiStatus mi_check(const struct MiInstance *inst,
                       double rel_tol,
                       double abs_tol,
                       struct MiVerdict **out);

/**
 * 1 when the comparison holds, 0 when it fails, -1 when the hypotheses were
 * not met (the comparison is undefined).
 *
 * # Safety
 * `verdict` must be a live handle from this library.
 */
int mi_verdict_holds(const struct MiVerdict *verdict);

/**
 * Minimum slack over the compared indices (rhs − lhs); may be infinite.
 *
 * # Safety
 * `verdict` must be a live handle from this library.
 */
double mi_verdict_slack(const struct MiVerdict *verdict);

/**
 * Full verdict document as JSON; free with [`mi_string_free`].
 *
 * # Safety
 * `verdict` must be a live handle; `out` must be valid.
 */
enum MiStatus mi_verdict_to_json(const struct MiVerdict *verdict, char **out);

/**
 * Release a verdict handle. NULL is a no-op.
 *
 * # Safety
 * `verdict` must be a handle from this library, not yet freed.
 */
void mi_verdict_free(struct MiVerdict *verdict);

/**
 * Run a verification batch and return the report as JSON; free the string
 * with [`mi_string_free`]. `dims` points at `n_dims` dimensions.
 *
 * # Safety
 * `law` must be NUL-terminated, `dims` must reference `n_dims` readable
 * entries, and `out` must be valid.
 */
enum MiStatus mi_batch_verify_json(const char *law,
                                   uint64_t trials,
                                   const uintptr_t *dims,
                                   uintptr_t n_dims,
                                   uint64_t seed,
                                   double rel_tol,
                                   double abs_tol,
                                   char **out);

/**
 * Release a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `text` must originate from this library, not yet freed.
 */
void mi_string_free(char *text);

#endif  /* MATINEQ_H */
