#ifndef PALCORE_H
#define PALCORE_H

/* C interface to the palcore library: catalog sources of infinite sequences,
 * exact factor/palindrome counting on their prefixes, period and palindrome
 * calculus on finite words, palindromic-decomposition analysis of
 * substitutions, and the empirical verification suite.
 *
 * Conventions:
 *  - Functions return pal_status.  PAL_OK means success; verification entry
 *    points also use PAL_FAIL / PAL_NOT_APPLICABLE as ordinary verdicts.
 *    Codes >= PAL_ERR_INPUT are errors; pal_last_error() then carries a
 *    message for the calling thread.
 *  - Strings returned through char** out-parameters are heap-allocated and
 *    must be released with pal_string_free().
 *  - Words cross the interface as NUL-terminated strings, one character per
 *    symbol (e.g. "01101").
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pal_status {
  PAL_OK = 0,
  PAL_FAIL = 1,
  PAL_NOT_APPLICABLE = 2,
  PAL_ERR_INPUT = 10,
  PAL_ERR_DOMAIN = 11,
  PAL_ERR_CONSTRUCTION = 12,
  PAL_ERR_RESOURCE = 13,
  PAL_ERR_INTERNAL = 14
} pal_status;

/* Message of the last error raised on the calling thread ("" when none). */
const char* pal_last_error(void);

/* Release a string obtained from any char** out-parameter. */
void pal_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Sources: infinite sequences produced on demand.                     */

typedef struct pal_source pal_source;

/* Open a catalog source by name (see pal_builtin_names) or a substitution
 * fixed point described in a file, spelled "file:<path>". */
pal_status pal_source_open(const char* spec, pal_source** out);

/* Mechanical-word source from continued-fraction coefficients (n >= 1). */
pal_status pal_source_sturmian(const uint32_t* cf, size_t n, pal_source** out);

/* Folding source; n = 0 selects the classical instruction stream. */
pal_status pal_source_paperfolding(const int32_t* instructions, size_t n,
                                   pal_source** out);

/* Running-sum-of-folding source; n = 0 selects the classical stream. */
pal_status pal_source_rudin_shapiro(const int32_t* instructions, size_t n,
                                    pal_source** out);

/* Running sum of the mechanical word for cf, started at first (0 or 1). */
pal_status pal_source_rote(const uint32_t* cf, size_t n, int32_t first,
                           pal_source** out);

void pal_source_close(pal_source* s);

pal_status pal_source_name(const pal_source* s, char** out);

/* Newline-separated list of the built-in source names. */
pal_status pal_builtin_names(char** out);

/* First n symbols, rendered one character per symbol. */
pal_status pal_source_prefix(const pal_source* s, size_t n, char** out);

/* ------------------------------------------------------------------ */
/* Complexity profiles: fac/pal counts stabilised over growing prefixes. */

typedef struct pal_profile pal_profile;

pal_status pal_profile_compute(const pal_source* s, size_t k_max, size_t budget,
                               pal_profile** out);
void pal_profile_free(pal_profile* p);

size_t pal_profile_k_max(const pal_profile* p);
size_t pal_profile_prefix_len(const pal_profile* p);

/* Row k (0 <= k <= k_max); any output pointer may be NULL. */
pal_status pal_profile_row(const pal_profile* p, size_t k, uint64_t* fac,
                           uint64_t* pal, int32_t* stable);

/* CSV rendering: header k,fac,pal,prefix_len,stable then one row per k. */
pal_status pal_profile_csv(const pal_profile* p, char** out);

/* ------------------------------------------------------------------ */
/* Finite-word utilities.                                              */

pal_status pal_word_is_palindrome(const char* word, int32_t* out);

pal_status pal_word_smallest_period(const char* word, size_t* out);

/* JSON object: word, length, smallest_period, periods[], and for
 * palindromic words their repetition class and twin when defined. */
pal_status pal_word_periods_json(const char* word, char** out);

/* counts[k] for k = 0..k_max (counts has k_max+1 slots). */
pal_status pal_factor_counts(const char* word, size_t k_max, uint64_t* counts);
pal_status pal_palindrome_counts(const char* word, size_t k_max, uint64_t* counts);

/* ------------------------------------------------------------------ */
/* Palindromic factors of a source.                                    */

/* JSON object with the stabilised prefix length and, per length k <= k_max,
 * the distinct palindromic factors with their first occurrence; with
 * maximal_only != 0, instead the palindromic factors that are not the
 * centre of any longer one. */
pal_status pal_palindromes_json(const pal_source* s, size_t k_max, size_t budget,
                                int32_t maximal_only, char** out);

/* ------------------------------------------------------------------ */
/* Palindromic decompositions of substitutions.                        */

/* JSON object for the substitution in the file: its palindromic
 * decompositions (shared part p and per-letter palindromic parts), whether
 * any exists, and — when a minimal-prefix rewrite applies — the rewritten
 * substitution together with the factor-agreement verdict. */
pal_status pal_classp_json(const char* morphism_path, char** out);

/* ------------------------------------------------------------------ */
/* Verification suite.                                                 */

/* check is one of: general | kernel | cassaigne | droubay-pirillo | rote |
 * survey | scrambler.  source may be NULL only for "scrambler".  Returns
 * PAL_OK / PAL_FAIL / PAL_NOT_APPLICABLE according to the verdict; the JSON
 * report is written in all three cases. */
pal_status pal_verify(const char* check, const pal_source* source, size_t k_max,
                      size_t budget, char** json_out);

/* Catalog sweep across every built-in source; PAL_OK only when every check
 * passes. */
pal_status pal_report(size_t budget, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* PALCORE_H */
