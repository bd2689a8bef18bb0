/* C interface to the tiling enumeration library.
 *
 * All functions are thread-compatible: distinct handles may be used from
 * distinct threads concurrently, a single handle must not be shared without
 * external synchronisation.  Functions that can fail return a vuza_status;
 * on failure a human-readable message is available from vuza_last_error()
 * until the next failing call on the same thread.  Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * vuza_string_free().
 */
#ifndef VUZA_H
#define VUZA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef VUZA_API
#if defined(_WIN32)
#define VUZA_API
#else
#define VUZA_API __attribute__((visibility("default")))
#endif
#endif

typedef enum vuza_status {
  VUZA_OK = 0,
  VUZA_INVALID_ARGUMENT = 1, /* precondition violated (range, anchoring, ...) */
  VUZA_PARSE_ERROR = 2,      /* malformed rhythm text */
  VUZA_UNSUPPORTED = 3,      /* instance outside supported limits */
  VUZA_NO_MEMORY = 4,
  VUZA_INTERNAL_ERROR = 5 /* invariant broken inside the library */
} vuza_status;

typedef struct vuza_rhythm vuza_rhythm;
typedef struct vuza_enumeration vuza_enumeration;

VUZA_API const char* vuza_version(void);

/* Message for the most recent failure on the calling thread; never NULL. */
VUZA_API const char* vuza_last_error(void);

VUZA_API void vuza_string_free(char* s);

/* ---- rhythms ---------------------------------------------------------- */

/* A rhythm is a nonempty subset of Z_period.  Elements are reduced mod the
 * period, deduplication is an error. */
VUZA_API vuza_status vuza_rhythm_create(int period, const int* elements,
                                        size_t count, vuza_rhythm** out);

/* Text form "n: e1,e2,...,ek", elements strictly increasing in [0, n). */
VUZA_API vuza_status vuza_rhythm_parse(const char* text, vuza_rhythm** out);

VUZA_API void vuza_rhythm_free(vuza_rhythm* r);

VUZA_API int vuza_rhythm_period(const vuza_rhythm* r);
VUZA_API int vuza_rhythm_size(const vuza_rhythm* r);

/* Copies the elements into buffer (capacity entries). */
VUZA_API vuza_status vuza_rhythm_elements(const vuza_rhythm* r, int* buffer,
                                          size_t capacity);

VUZA_API vuza_status vuza_rhythm_format(const vuza_rhythm* r, char** out);

/* 1 aperiodic, 0 periodic, -1 on error. */
VUZA_API int vuza_rhythm_is_aperiodic(const vuza_rhythm* r);

/* ---- search configuration --------------------------------------------- */

typedef struct vuza_search_options {
  int affine_classes;  /* 0: group complements modulo translation (default);
                          1: modulo affine maps */
  int cut_whole_orbit; /* 1 (default): one solve per equivalence class;
                          0: visit every anchored solution individually */
  int aperiodicity_rows; /* 1 (default): only aperiodic complements */
  int cardinality_row;   /* 1 (default): include the cardinality row */
  int replace_first_family; /* 0 (default); 1 swaps the largest aperiodicity
                               family for a single bound row, which can miss
                               classes */
  long long max_solutions;  /* stop after this many solutions; 0: no limit */
  double max_seconds;       /* wall-clock budget; 0: no limit */
} vuza_search_options;

/* Fills *opts with the defaults above. */
VUZA_API void vuza_search_options_init(vuza_search_options* opts);

/* ---- enumeration ------------------------------------------------------ */

/* Enumerates the anchored tiling complements of r (one representative per
 * equivalence class unless cut_whole_orbit is 0).  Requires 0 in r. */
VUZA_API vuza_status vuza_enumerate(const vuza_rhythm* r,
                                    const vuza_search_options* opts,
                                    vuza_enumeration** out);

VUZA_API void vuza_enumeration_free(vuza_enumeration* e);

/* 1 when the search space was exhausted, 0 when a limit stopped it. */
VUZA_API int vuza_enumeration_complete(const vuza_enumeration* e);

VUZA_API long long vuza_enumeration_solution_count(const vuza_enumeration* e);
VUZA_API long long vuza_enumeration_class_count(const vuza_enumeration* e);

/* JSON document; with include_timings 0 the output is byte-deterministic
 * for identical inputs and limits. */
VUZA_API vuza_status vuza_enumeration_json(const vuza_enumeration* e,
                                           int include_timings, char** out);

/* CSV "iteration,seconds", one row per solve call. */
VUZA_API vuza_status vuza_enumeration_timings_csv(const vuza_enumeration* e,
                                                  char** out);

/* ---- feasibility ------------------------------------------------------ */

/* Is there an aperiodic tiling complement of r?  *answer becomes 1 (yes,
 * *witness receives the complement in rhythm text form when witness is not
 * NULL), 0 (no), or -1 (undecided within max_seconds). */
VUZA_API vuza_status vuza_exists_aperiodic(const vuza_rhythm* r,
                                           double max_seconds, int* answer,
                                           char** witness);

/* ---- reports ---------------------------------------------------------- */

/* Cyclotomic divisor report plus the good/bad classification of the period,
 * as JSON.  full_scan widens the divisor scan beyond the divisors of the
 * period. */
VUZA_API vuza_status vuza_check_json(const vuza_rhythm* r, int full_scan,
                                     char** out);

/* Good/bad classification of a cyclic group order, as JSON. */
VUZA_API vuza_status vuza_classify_order_json(long long order, char** out);

/* LP text of the feasibility program for r (no cuts). */
VUZA_API vuza_status vuza_export_lp(const vuza_rhythm* r,
                                    const vuza_search_options* opts,
                                    char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* VUZA_H */
