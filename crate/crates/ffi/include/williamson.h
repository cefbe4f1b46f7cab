/* C interface to the williamson crate. */

#ifndef WILLIAMSON_H
#define WILLIAMSON_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum WmStatus {
  WM_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  WM_STATUS_NULL_ARGUMENT = 1,
  /**
   * Input text was not valid UTF-8.
   */
  WM_STATUS_INVALID_UTF8 = 2,
  /**
   * Input text did not parse as a sequence or quad.
   */
  WM_STATUS_PARSE_ERROR = 3,
  /**
   * The quad fails the Williamson verification criterion.
   */
  WM_STATUS_NOT_WILLIAMSON = 4,
  /**
   * The operation requires an odd order.
   */
  WM_STATUS_EVEN_ORDER = 5,
  /**
   * The order exceeds the configured or hard search limit.
   */
  WM_STATUS_ORDER_TOO_LARGE = 6,
  /**
   * Mismatched sequence lengths.
   */
  WM_STATUS_LENGTH_MISMATCH = 7,
} WmStatus;

/**
 * Opaque handle to a quad.
 */
typedef struct WmQuad WmQuad;

/**
 * Opaque handle to a search report.
 */
typedef struct WmSearchReport WmSearchReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses exactly one quad (four '+'/'-' lines; `#` comments and blank lines
 * are ignored) and writes a new handle to `out`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum WmStatus wm_quad_parse(const char *text, struct WmQuad **out);

/**
 * Frees a quad handle. NULL is ignored.
 *
 * # Safety
 * `quad` must have been returned by this library and not freed before.
 */
void wm_quad_free(struct WmQuad *quad);

/**
 * Order `n` of the quad's sequences; 0 on NULL.
 *
 * # Safety
 * `quad` must be a live handle or NULL.
 */
uint32_t wm_quad_order(const struct WmQuad *quad);

/**
 * Runs the Williamson verification criterion; writes the verdict to
 * `is_williamson`.
 *
 * # Safety
 * Both pointers must be valid.
 */
enum WmStatus wm_quad_verify(const struct WmQuad *quad, bool *is_williamson);

/**
 * Applies the odd-order doubling construction, writing a new handle of
 * order `2n` to `out`.
 *
 * # Safety
 * `quad` must be a live handle and `out` a valid pointer.
 */
enum WmStatus wm_quad_double(const struct WmQuad *quad, struct WmQuad **out);

/**
 * Writes the sign-normalized, sorted form of the quad to `out`.
 *
 * # Safety
 * `quad` must be a live handle and `out` a valid pointer.
 */
enum WmStatus wm_quad_normalize(const struct WmQuad *quad, struct WmQuad **out);

/**
 * Renders the quad text format (four lines). Free with [`wm_string_free`];
 * NULL on NULL input.
 *
 * # Safety
 * `quad` must be a live handle or NULL.
 */
char *wm_quad_to_text(const struct WmQuad *quad);

/**
 * Expands a verified quad into its 4n×4n Hadamard matrix and writes the
 * matrix text format to `out`.
 *
 * # Safety
 * `quad` must be a live handle and `out` a valid pointer.
 */
enum WmStatus wm_quad_hadamard_text(const struct WmQuad *quad, char **out);

/**
 * Frees a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must have been returned by this library and not freed before.
 */
void wm_string_free(char *s);

/**
 * Periodic autocorrelation of a '+'/'-' sequence at the given shift
 * (negative shifts allowed).
 *
 * # Safety
 * `sequence` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum WmStatus wm_paf(const char *sequence, int64_t shift, int64_t *out);

/**
 * Periodic cross-correlation of two equal-length '+'/'-' sequences.
 *
 * # Safety
 * Both sequence pointers must be valid NUL-terminated strings and `out` a
 * valid pointer.
 */
enum WmStatus wm_pcf(const char *left, const char *right, int64_t shift, int64_t *out);

/**
 * Writes the full PAF spectrum of a sequence into `values` (capacity
 * `capacity` entries); `written` receives the sequence length. Fails with
 * `OrderTooLarge` when the buffer is too small.
 *
 * # Safety
 * `sequence` must be a valid NUL-terminated string; `values` must point to
 * at least `capacity` writable entries; `written` must be valid.
 */
enum WmStatus wm_paf_spectrum(const char *sequence,
                              int64_t *values,
                              uintptr_t capacity,
                              uintptr_t *written);

/**
 * Exhaustively searches order `n` and writes a report handle to `out`.
 * `jobs = 0` uses one shard per CPU; `prune = false` routes every tuple
 * through the dense verifier.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum WmStatus wm_search(uint32_t n,
                        uint32_t limit,
                        bool prune,
                        uint32_t jobs,
                        struct WmSearchReport **out);

/**
 * Frees a search report. NULL is ignored.
 *
 * # Safety
 * `report` must have been returned by this library and not freed before.
 */
void wm_search_report_free(struct WmSearchReport *report);

/**
 * Ordered 4-tuples enumerated by the search; 0 on NULL.
 *
 * # Safety
 * `report` must be a live handle or NULL.
 */
uint64_t wm_search_report_candidates(const struct WmSearchReport *report);

/**
 * Ordered 4-tuples that verified; 0 on NULL.
 *
 * # Safety
 * `report` must be a live handle or NULL.
 */
uint64_t wm_search_report_raw_count(const struct WmSearchReport *report);

/**
 * Number of deduplicated normalized quads; 0 on NULL.
 *
 * # Safety
 * `report` must be a live handle or NULL.
 */
uintptr_t wm_search_report_quad_count(const struct WmSearchReport *report);

/**
 * Copies normalized quad `index` out of the report as a new handle.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum WmStatus wm_search_report_quad(const struct WmSearchReport *report,
                                    uintptr_t index,
                                    struct WmQuad **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* WILLIAMSON_H */
