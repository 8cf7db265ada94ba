#ifndef FOCKBASIS_H
#define FOCKBASIS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FbStatus {
  FB_STATUS_OK = 0,
  FB_STATUS_INVALID_INPUT = 2,
  FB_STATUS_UNSUPPORTED_REGIME = 3,
  FB_STATUS_INVARIANT = 4,
  FB_STATUS_NULL_POINTER = 5,
  FB_STATUS_PANIC = 6,
} FbStatus;

/**
 * Canonical-basis engine for one `(e, l)`; caches survive between calls.
 */
typedef struct FbEngine FbEngine;

/**
 * A computed decomposition matrix.
 */
typedef struct FbMatrix FbMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into this library from the same thread.
 */
const char *fb_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void fb_string_free(char *s);

/**
 * # Safety
 * `out` must be valid for a write.
 */
enum FbStatus fb_engine_new(uint32_t e, size_t l, struct FbEngine **out);

/**
 * # Safety
 * `engine` must come from [`fb_engine_new`] and not have been freed.
 */
void fb_engine_free(struct FbEngine *engine);

/**
 * Decomposition matrix of the Uglov columns at `charge` and `rank`.
 *
 * # Safety
 * `engine` must be live, `charge` must point to `charge_len` integers and
 * `out` must be valid for a write.
 */
enum FbStatus fb_decomposition_matrix(struct FbEngine *engine,
                                      const int64_t *charge,
                                      size_t charge_len,
                                      size_t rank,
                                      struct FbMatrix **out);

/**
 * # Safety
 * `m` must come from [`fb_decomposition_matrix`] and not have been freed.
 */
void fb_matrix_free(struct FbMatrix *m);

/**
 * Number of rows, or 0 for null.
 *
 * # Safety
 * `m` must be live or null.
 */
size_t fb_matrix_rows(const struct FbMatrix *m);

/**
 * Number of columns, or 0 for null.
 *
 * # Safety
 * `m` must be live or null.
 */
size_t fb_matrix_columns(const struct FbMatrix *m);

/**
 * # Safety
 * `m` must be live and `out` valid for a write.
 */
enum FbStatus fb_matrix_entry(const struct FbMatrix *m, size_t row, size_t column, int64_t *out);

/**
 * Text label of row `i`; free with [`fb_string_free`].
 *
 * # Safety
 * `m` must be live and `out` valid for a write.
 */
enum FbStatus fb_matrix_row_label(const struct FbMatrix *m, size_t i, char **out);

/**
 * Text label of column `j`; free with [`fb_string_free`].
 *
 * # Safety
 * `m` must be live and `out` valid for a write.
 */
enum FbStatus fb_matrix_column_label(const struct FbMatrix *m, size_t j, char **out);

/**
 * Whole matrix as JSON; free with [`fb_string_free`].
 *
 * # Safety
 * `m` must be live and `out` valid for a write.
 */
enum FbStatus fb_matrix_json(const struct FbMatrix *m, char **out);

/**
 * Canonical basis element `G(label, charge)` as JSON records.
 *
 * # Safety
 * `engine` must be live, `label` a NUL-terminated string, `charge` must
 * point to `charge_len` integers and `out` must be valid for a write.
 */
enum FbStatus fb_canonical_json(struct FbEngine *engine,
                                const char *label,
                                const int64_t *charge,
                                size_t charge_len,
                                char **out);

/**
 * Uglov multipartitions as a JSON array of labels.
 *
 * # Safety
 * `charge` must point to `charge_len` integers and `out` must be valid for
 * a write.
 */
enum FbStatus fb_uglov_set_json(uint32_t e,
                                const int64_t *charge,
                                size_t charge_len,
                                size_t rank,
                                char **out);

/**
 * # Safety
 * `charge` must point to `charge_len` integers and `out` must be valid for
 * a write.
 */
enum FbStatus fb_is_split_semisimple(uint32_t e,
                                     const int64_t *charge,
                                     size_t charge_len,
                                     size_t rank,
                                     bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FOCKBASIS_H */
