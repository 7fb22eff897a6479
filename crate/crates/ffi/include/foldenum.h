/* C API for the foldenum k-fold configuration enumerator. */

#ifndef FOLDENUM_H
#define FOLDENUM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every C API call.
 */
typedef enum FoldenumStatus {
  /**
   * Success; out parameters are valid.
   */
  FOLDENUM_STATUS_OK = 0,
  /**
   * Inputs violate a precondition (sum mismatch, empty fold, ...).
   */
  FOLDENUM_STATUS_INVALID_ARGUMENT = 1,
  /**
   * A required pointer was null.
   */
  FOLDENUM_STATUS_NULL_POINTER = 2,
  /**
   * The caller-provided buffer is too small.
   */
  FOLDENUM_STATUS_BUFFER_TOO_SMALL = 3,
  /**
   * The enumerator has no further configurations.
   */
  FOLDENUM_STATUS_FINISHED = 4,
} FoldenumStatus;

/**
 * Opaque streaming enumerator over standardized fold configurations.
 */
typedef struct FoldenumEnumerator FoldenumEnumerator;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Write the balanced fold sizes for `total` records and `folds` folds into
 * `out_sizes`, which must hold `folds` values. Sizes are ascending.
 *
 * # Safety
 * `out_sizes` must point to at least `out_len` writable `uint64_t`s.
 */
enum FoldenumStatus foldenum_fold_sizes(uint64_t total,
                                        uint64_t folds,
                                        uint64_t *out_sizes,
                                        uintptr_t out_len);

/**
 * Write the exact configuration count as a NUL-terminated decimal string.
 *
 * On `BufferTooSmall`, `*needed` (when non-null) receives the required
 * capacity including the terminator.
 *
 * # Safety
 * `sizes`/`counts` must point to `num_folds`/`num_classes` readable values
 * and `buf` to `buf_len` writable bytes.
 */
enum FoldenumStatus foldenum_count_decimal(const uint64_t *sizes,
                                           uintptr_t num_folds,
                                           const uint64_t *counts,
                                           uintptr_t num_classes,
                                           char *buf,
                                           uintptr_t buf_len,
                                           uintptr_t *needed);

/**
 * Create an enumerator over all standardized fold configurations for fold
 * sizes `sizes` (ascending) and class counts `counts`.
 *
 * # Safety
 * `sizes`/`counts` must point to `num_folds`/`num_classes` readable values;
 * `out` must be a valid pointer. The handle must be released with
 * [`foldenum_enumerator_free`].
 */
enum FoldenumStatus foldenum_enumerator_new(const uint64_t *sizes,
                                            uintptr_t num_folds,
                                            const uint64_t *counts,
                                            uintptr_t num_classes,
                                            struct FoldenumEnumerator **out);

/**
 * Write the next configuration row-major into `cells` (fold-major, class
 * within fold). Returns `Finished` when the stream is exhausted.
 *
 * # Safety
 * `handle` must come from [`foldenum_enumerator_new`] and not have been
 * freed; `cells` must hold `cells_len` writable `uint64_t`s.
 */
enum FoldenumStatus foldenum_enumerator_next(struct FoldenumEnumerator *handle,
                                             uint64_t *cells,
                                             uintptr_t cells_len);

/**
 * Release an enumerator. Passing null is a no-op.
 *
 * # Safety
 * `handle` must come from [`foldenum_enumerator_new`] and must not be used
 * afterwards.
 */
void foldenum_enumerator_free(struct FoldenumEnumerator *handle);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FOLDENUM_H */
