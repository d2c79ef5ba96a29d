#ifndef PICLOC_H
#define PICLOC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum PiclocStatus {
  PICLOC_STATUS_OK = 0,
  /**
   * Mathematically invalid input (torsion, non-simplicial, …).
   */
  PICLOC_STATUS_DOMAIN_ERROR = 1,
  /**
   * Unreadable input: syntax, encoding, or schema.
   */
  PICLOC_STATUS_PARSE_ERROR = 2,
  PICLOC_STATUS_NULL_POINTER = 3,
  PICLOC_STATUS_INVALID_UTF8 = 4,
  /**
   * An internal invariant failed; the library state is still sound.
   */
  PICLOC_STATUS_PANIC = 5,
} PiclocStatus;

/**
 * Opaque cohomology report handle.
 */
typedef struct PiclocReport PiclocReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Combinatorial cohomology of the simplicial binoid of a facet file.
 * With `crosscheck` nonzero, runs both pipelines and verifies agreement.
 *
 * # Safety
 * `facet_text` must be a valid NUL-terminated string; `out` must be a valid
 * pointer to receive the handle.
 */
enum PiclocStatus picloc_simplicial(const char *facet_text,
                                    bool crosscheck,
                                    struct PiclocReport **out);

/**
 * Unit-sheaf cohomology of the Stanley-Reisner ring of a facet file under
 * a field model (`q=<prime power> | p=<prime> | Qbar | Cstar | R | Q | symbolic`).
 *
 * # Safety
 * All pointers must be valid as in [`picloc_simplicial`].
 */
enum PiclocStatus picloc_stanley_reisner(const char *facet_text,
                                         const char *field_spec,
                                         struct PiclocReport **out);

/**
 * Cohomology of a binoid presentation given as JSON.
 *
 * # Safety
 * All pointers must be valid as in [`picloc_simplicial`].
 */
enum PiclocStatus picloc_binoid(const char *presentation_json, struct PiclocReport **out);

/**
 * Graph fast path: JSON with the isolated count, the Picard rank, and the
 * graded rank sequence when connected.
 *
 * # Safety
 * All pointers must be valid as in [`picloc_simplicial`].
 */
enum PiclocStatus picloc_graph(const char *facet_text, char **json_out);

/**
 * Non-reduced monomial quotient report as JSON. `box_spec` is a degree
 * window such as `-2..2` or `-1..1,0..3`.
 *
 * # Safety
 * All pointers must be valid as in [`picloc_simplicial`].
 */
enum PiclocStatus picloc_monomial(const char *ideal_text,
                                  const char *field_spec,
                                  const char *box_spec,
                                  char **json_out);

/**
 * Canonical JSON of a report; free with [`picloc_string_free`].
 *
 * # Safety
 * `report` must be a live handle from this library.
 */
char *picloc_report_json(const struct PiclocReport *report);

/**
 * Aligned text table of a report; free with [`picloc_string_free`].
 *
 * # Safety
 * `report` must be a live handle from this library.
 */
char *picloc_report_pretty(const struct PiclocReport *report);

/**
 * Number of computed degrees in a report.
 *
 * # Safety
 * `report` must be a live handle from this library.
 */
uintptr_t picloc_report_degree_count(const struct PiclocReport *report);

/**
 * Free rank of the combinatorial part in degree `j`, or -1 out of range.
 *
 * # Safety
 * `report` must be a live handle from this library.
 */
int64_t picloc_report_free_rank(const struct PiclocReport *report, uintptr_t j);

/**
 * Number of torsion invariant factors in degree `j`, or -1 out of range.
 *
 * # Safety
 * `report` must be a live handle from this library.
 */
int64_t picloc_report_torsion_count(const struct PiclocReport *report, uintptr_t j);

/**
 * The `idx`-th torsion invariant factor in degree `j` as a decimal string,
 * or null out of range. Free with [`picloc_string_free`].
 *
 * # Safety
 * `report` must be a live handle from this library.
 */
char *picloc_report_torsion_factor(const struct PiclocReport *report, uintptr_t j, uintptr_t idx);

/**
 * Destroys a report handle. Null is a no-op.
 *
 * # Safety
 * `report` must be null or a live handle; the handle dies here.
 */
void picloc_report_free(struct PiclocReport *report);

/**
 * Frees a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `text` must be null or a string allocated by this library; it dies here.
 */
void picloc_string_free(char *text);

/**
 * Message for the most recent failure on this thread, or null when the last
 * call succeeded. Free with [`picloc_string_free`].
 */
char *picloc_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PICLOC_H */
