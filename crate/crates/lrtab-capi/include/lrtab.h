#ifndef LRTAB_H
#define LRTAB_H

/* Generated by cbindgen from lrtab-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
enum LrtabStatus
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  LRTAB_STATUS_OK = 0,
  LRTAB_STATUS_NULL_ARGUMENT = 1,
  LRTAB_STATUS_PARSE_ERROR = 2,
  LRTAB_STATUS_INVALID_ARGUMENT = 3,
  LRTAB_STATUS_NOT_LITTLEWOOD_RICHARDSON = 4,
  LRTAB_STATUS_BOUND_EXCEEDED = 5,
  LRTAB_STATUS_BUFFER_TOO_SMALL = 6,
  LRTAB_STATUS_PANIC = 7,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum LrtabStatus LrtabStatus;
#else
typedef int32_t LrtabStatus;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * Opaque handle to a parsed rectangle sequence.
 */
typedef struct LrtabRects LrtabRects;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *lrtab_status_message(LrtabStatus status);

/**
 * Parses a rectangle sequence from its text form, comma-separated
 * `COLSxROWS` pairs (for example `3x2,2x2,1x3`). On success stores a handle
 * in `*out`; release it with `lrtab_rects_free`.
 *
 * # Safety
 * `spec` must point to a NUL-terminated string and `out` must be valid.
 */
LrtabStatus lrtab_rects_parse(const char *spec, struct LrtabRects **out);

/**
 * Releases a handle obtained from `lrtab_rects_parse`. Accepts NULL.
 *
 * # Safety
 * `rects` must be NULL or a pointer previously returned by
 * `lrtab_rects_parse` that has not been freed.
 */
void lrtab_rects_free(struct LrtabRects *rects);

/**
 * Alphabet size `n` (sum of the row counts).
 *
 * # Safety
 * `rects` must be a live handle.
 */
size_t lrtab_rects_alphabet(const struct LrtabRects *rects);

/**
 * Total number of cells `N`.
 *
 * # Safety
 * `rects` must be a live handle.
 */
uint64_t lrtab_rects_cells(const struct LrtabRects *rects);

/**
 * Computes the coefficients of `K_{lambda;R}(q)`.
 *
 * Writes the number of coefficients (degree + 1; zero for the zero
 * polynomial) to `*coeffs_len`. When `coeffs_cap` is too small nothing is
 * written to `coeffs` and the call returns `BufferTooSmall`; calling with
 * `coeffs_cap = 0` is the standard way to query the length.
 *
 * # Safety
 * `rects` must be a live handle; `shape` must point to `shape_len` entries;
 * `coeffs` must have room for `coeffs_cap` values; `coeffs_len` must be valid.
 */
LrtabStatus lrtab_kpoly(const struct LrtabRects *rects,
                        const uint32_t *shape,
                        size_t shape_len,
                        int64_t *coeffs,
                        size_t coeffs_cap,
                        size_t *coeffs_len);

/**
 * Number of LR tableaux of the given shape, i.e. the LR coefficient for the
 * rectangle sequence.
 *
 * # Safety
 * `rects` must be a live handle; `shape` must point to `shape_len` entries;
 * `count` must be valid.
 */
LrtabStatus lrtab_lrt_count(const struct LrtabRects *rects,
                            const uint32_t *shape,
                            size_t shape_len,
                            uint64_t *count);

/**
 * Charge of a column-strict tableau given in the text format (one row per
 * line, space-separated entries). The tableau must be LR for the sequence.
 *
 * # Safety
 * `rects` must be a live handle; `tableau_text` must be NUL-terminated;
 * `charge` must be valid.
 */
LrtabStatus lrtab_charge(const struct LrtabRects *rects,
                         const char *tableau_text,
                         uint64_t *charge);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LRTAB_H */
