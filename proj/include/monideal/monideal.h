#ifndef MONIDEAL_H
#define MONIDEAL_H

/* C interface to the monideal library. Every handle is opaque and owned by
 * the caller once returned; release it with the matching *_destroy call.
 * Strings returned through char** are malloc-allocated and released with
 * mi_string_free. On failure a function returns a non-zero mi_status and
 * mi_last_error() describes it until the next call on the same thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MONIDEAL_BUILDING)
#define MI_API __declspec(dllexport)
#else
#define MI_API __declspec(dllimport)
#endif
#else
#define MI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mi_status {
  MI_OK = 0,
  MI_ERR_PARSE = 1,     /* malformed document */
  MI_ERR_DOMAIN = 2,    /* input outside an operation's domain */
  MI_ERR_STRUCTURE = 3, /* ring mismatch or similar structural misuse */
  MI_ERR_ARGUMENT = 4,  /* null pointer, bad index, unknown command, suite or ideal */
  MI_ERR_BUDGET = 5,    /* time budget exhausted */
  MI_ERR_OVERFLOW = 6,  /* exponent arithmetic left 64 bits */
  MI_ERR_INTERNAL = 7   /* a checked invariant failed */
} mi_status;

typedef enum mi_format { MI_FORMAT_TEXT = 0, MI_FORMAT_JSON = 1 } mi_format;

typedef struct mi_document mi_document;
typedef struct mi_ideal mi_ideal;
typedef struct mi_options mi_options;
typedef struct mi_report mi_report;

MI_API const char* mi_version(void);
MI_API const char* mi_last_error(void);
/* Parse-error position of the last failed mi_document_parse; 0 when unknown. */
MI_API size_t mi_last_error_line(void);
MI_API size_t mi_last_error_column(void);
MI_API void mi_string_free(char* s);

/* Text or JSON is detected from the first non-blank character. */
MI_API mi_status mi_document_parse(const char* text, mi_document** out);
MI_API void mi_document_destroy(mi_document* doc);
MI_API mi_status mi_document_serialize(const mi_document* doc, mi_format format, char** out);
MI_API size_t mi_document_ideal_count(const mi_document* doc);
MI_API mi_status mi_document_ideal_name(const mi_document* doc, size_t index, char** out);
/* The returned ideal is an independent copy. */
MI_API mi_status mi_document_get_ideal(const mi_document* doc, size_t index, mi_ideal** out);
MI_API size_t mi_document_warning_count(const mi_document* doc);
MI_API mi_status mi_document_warning(const mi_document* doc, size_t index, char** out);

MI_API void mi_ideal_destroy(mi_ideal* ideal);
MI_API mi_status mi_ideal_to_string(const mi_ideal* ideal, char** out);
MI_API size_t mi_ideal_num_gens(const mi_ideal* ideal);
MI_API mi_status mi_ideal_alpha(const mi_ideal* ideal, uint64_t* out);
MI_API mi_status mi_ideal_delta(const mi_ideal* ideal, uint64_t* out);
MI_API mi_status mi_ideal_height(const mi_ideal* ideal, size_t* out);
MI_API mi_status mi_ideal_is_ci(const mi_ideal* ideal, int* out);
MI_API mi_status mi_ideal_power(const mi_ideal* ideal, unsigned n, mi_ideal** out);
/* Integral closure of the n-th power. */
MI_API mi_status mi_ideal_closure(const mi_ideal* ideal, unsigned n, mi_ideal** out);
/* term uses the document grammar, e.g. "x^2*y". */
MI_API mi_status mi_ideal_contains(const mi_ideal* ideal, const char* term, int* out);
/* v-number and one witness of minimal degree, in the document grammar. witness may be NULL. */
MI_API mi_status mi_ideal_v_number(const mi_ideal* ideal, uint64_t* v, char** witness);

MI_API mi_options* mi_options_create(void);
MI_API void mi_options_destroy(mi_options* opts);
MI_API void mi_options_set_power(mi_options* opts, unsigned n);
MI_API void mi_options_set_closure(mi_options* opts, int on);
MI_API void mi_options_set_nmax(mi_options* opts, unsigned nmax);
MI_API void mi_options_set_timing(mi_options* opts, int on);
MI_API void mi_options_set_trials(mi_options* opts, uint64_t trials);
MI_API void mi_options_set_seed(mi_options* opts, uint64_t seed);
MI_API void mi_options_set_max_exp(mi_options* opts, uint64_t max_exp);
/* seconds <= 0 clears the budget. */
MI_API void mi_options_set_budget(mi_options* opts, double seconds);
/* NULL clears the filter. */
MI_API mi_status mi_options_set_ideal(mi_options* opts, const char* name);
MI_API mi_status mi_options_set_suite(mi_options* opts, const char* suite);

/* command is one of info, decompose, ass, closure, vnum, table, verify.
 * doc may be NULL for verify. */
MI_API mi_status mi_run(const char* command, const mi_document* doc, const mi_options* opts, mi_report** out);
MI_API void mi_report_destroy(mi_report* report);
/* Borrowed; valid until the report is destroyed. */
MI_API const char* mi_report_text(const mi_report* report);
MI_API const char* mi_report_json(const mi_report* report);
MI_API int mi_report_exit_code(const mi_report* report);

#ifdef __cplusplus
}
#endif

#endif
