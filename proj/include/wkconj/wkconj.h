/*
 * wkconj C interface.
 *
 * Every entry point returns a wk_status; on failure the thread-local message
 * from wk_last_error() describes it in one line. Handles are opaque and owned
 * by the caller, who releases them with the matching *_free function.
 * Words and alphabets are NUL-terminated byte strings, one letter per byte.
 */
#ifndef WKCONJ_WKCONJ_H
#define WKCONJ_WKCONJ_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(WKCONJ_BUILDING)
#    define WK_API __declspec(dllexport)
#  else
#    define WK_API __declspec(dllimport)
#  endif
#else
#  define WK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wk_status {
  WK_OK = 0,
  WK_ERR_UNKNOWN_LETTER = 1,
  WK_ERR_DUPLICATE_LETTER = 2,
  WK_ERR_INCOMPLETE_SPEC = 3,
  WK_ERR_MALFORMED_GROUP = 4,
  WK_ERR_INVALID_ALPHABET = 5,
  WK_ERR_ALPHABET_MISMATCH = 6,
  WK_ERR_EMPTY_WORD = 7,
  WK_ERR_INVALID_CONFIG = 8,
  WK_ERR_INVALID_ARGUMENT = 9, /* NULL handle or output pointer */
  WK_ERR_INTERNAL = 10
} wk_status;

typedef enum wk_format { WK_FORMAT_TEXT = 0, WK_FORMAT_JSON = 1 } wk_format;

typedef struct wk_string wk_string;
typedef struct wk_theta wk_theta;
typedef struct wk_report wk_report;

/* "UnknownLetter", "DuplicateLetter", ... */
WK_API const char* wk_status_name(wk_status status);
WK_API const char* wk_last_error(void);

WK_API const char* wk_string_data(const wk_string* s);
WK_API size_t wk_string_size(const wk_string* s);
WK_API void wk_string_free(wk_string* s);

/* Letters of `text` in ascending byte order, commas removed. */
WK_API wk_status wk_alphabet_spanning(const char* text, wk_string** out);

/* Parses "ab,c"-style specs. A NULL alphabet means the letters of the spec. */
WK_API wk_status wk_theta_parse(const char* spec, const char* alphabet,
                                wk_theta** out);
WK_API void wk_theta_free(wk_theta* theta);
WK_API wk_status wk_theta_spec(const wk_theta* theta, wk_string** out);
WK_API wk_status wk_theta_apply(const wk_theta* theta, const char* word,
                                wk_string** out);
WK_API wk_status wk_theta_is_palindrome(const wk_theta* theta, const char* word,
                                        int* out);
WK_API wk_status wk_theta_conjugate_count(const wk_theta* theta,
                                          const char* word, size_t* out);
WK_API wk_status wk_theta_is_maximal(const wk_theta* theta, const char* word,
                                     int* out);

WK_API wk_status wk_involution_count(const char* alphabet, size_t* out);
/* index-th involution in canonical order. */
WK_API wk_status wk_involution_at(const char* alphabet, size_t index,
                                  wk_theta** out);

WK_API wk_status wk_render_conj(const char* alphabet, const char* word,
                                wk_format format, wk_string** out);
WK_API wk_status wk_render_theta_conj(const wk_theta* theta, const char* word,
                                      wk_format format, wk_string** out);
WK_API wk_status wk_render_decompose(const wk_theta* theta, const char* word,
                                     wk_format format, wk_string** out);
WK_API wk_status wk_render_power_growth(const wk_theta* theta, const char* word,
                                        size_t max_power, wk_format format,
                                        wk_string** out);
WK_API wk_status wk_render_analyze(const wk_theta* theta, const char* word,
                                   wk_format format, wk_string** out);
WK_API wk_status wk_render_involutions(const char* alphabet, wk_format format,
                                       wk_string** out);

typedef struct wk_sweep_options {
  const char* alphabet;
  /* theta_count == 0 sweeps every involution on the alphabet. */
  const char* const* theta_specs;
  size_t theta_count;
  size_t max_len;
  size_t max_power;
  /* "T1,T4", "T1..T9" or "ALL"; NULL selects every check. */
  const char* checks;
  unsigned jobs;
} wk_sweep_options;

WK_API wk_status wk_sweep_run(const wk_sweep_options* options, wk_report** out);
WK_API wk_status wk_report_render(const wk_report* report, wk_format format,
                                  wk_string** out);
WK_API size_t wk_report_counterexample_count(const wk_report* report);
WK_API void wk_report_free(wk_report* report);

#ifdef __cplusplus
}
#endif

#endif /* WKCONJ_WKCONJ_H */
