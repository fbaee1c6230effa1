#ifndef FREELERAY_H
#define FREELERAY_H

/* C interface to the freeleray core: dimension tables, necklace counts,
 * basis fixtures, projections of vector fields, and the verification
 * suite. All functions return fl_status; on failure fl_last_error() holds
 * a thread-local diagnostic. Strings returned through out parameters are
 * heap-allocated and must be released with fl_string_free(). */

#include <stdint.h>

#if defined(_WIN32)
#define FL_API __declspec(dllexport)
#else
#define FL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fl_status {
  FL_OK = 0,
  FL_ERR_ARGUMENT = 1, /* invalid parameter or unknown name */
  FL_ERR_PARSE = 2,    /* malformed JSON input */
  FL_ERR_MODE = 3,     /* operation unavailable in the requested scalar mode */
  FL_ERR_INTERNAL = 4
} fl_status;

typedef enum fl_format { FL_FORMAT_JSON = 0, FL_FORMAT_CSV = 1 } fl_format;

typedef enum fl_basis_kind {
  FL_BASIS_GRADIENT = 0,
  FL_BASIS_DIVFREE = 1,
  FL_BASIS_ZETA = 2,
  FL_BASIS_OMEGA = 3
} fl_basis_kind;

typedef enum fl_projection_kind { FL_PROJECT_CYCLIC = 0, FL_PROJECT_LERAY = 1 } fl_projection_kind;

typedef enum fl_mode { FL_MODE_EXACT = 0, FL_MODE_FLOAT = 1 } fl_mode;

/* A parsed vector field in one scalar mode; opaque. */
typedef struct fl_field fl_field;

FL_API const char* fl_version(void);

/* Message for the most recent failure on this thread; empty string if the
 * last call succeeded. The pointer stays valid until the next API call on
 * the same thread. */
FL_API const char* fl_last_error(void);

FL_API void fl_string_free(char* s);

/* Number of rotation classes of length-k words over n letters, as a
 * decimal string. */
FL_API fl_status fl_necklace_count(int32_t n, int64_t k, char** out);

/* Dimension table for degrees 0..max_degree (CSV with a header row, or a
 * JSON array of row objects). */
FL_API fl_status fl_dims_table(int32_t n, int64_t max_degree, fl_format format, char** out);

/* Necklace counts for word lengths 1..max_length. */
FL_API fl_status fl_necklace_table(int32_t n, int64_t max_length, fl_format format, char** out);

/* One degree's basis fixture as JSON. The zeta kind requires FL_MODE_FLOAT. */
FL_API fl_status fl_basis_fixture(fl_basis_kind kind, int32_t n, int64_t degree, fl_mode mode,
                                  char** out);

/* Parse a vector field from its JSON form. Exact mode requires "num"/"den"
 * coefficient strings; float mode also accepts "re"/"im" numbers. */
FL_API fl_status fl_field_parse(const char* json_utf8, fl_mode mode, fl_field** out);

FL_API fl_status fl_field_project(const fl_field* in, fl_projection_kind kind, fl_field** out);

FL_API fl_status fl_field_to_json(const fl_field* field, char** out);

/* Alphabet size the field was parsed with. */
FL_API fl_status fl_field_alphabet(const fl_field* field, int32_t* out);

FL_API void fl_field_free(fl_field* field);

/* JSON array of the verification suite's check names. */
FL_API fl_status fl_check_names(char** out);

/* Run the suite (check_name == NULL) or a single named check, for alphabet
 * size n up to max_degree. out receives a JSON array of reports;
 * all_passed receives 1 if every report passed. */
FL_API fl_status fl_verify(int32_t n, int64_t max_degree, uint64_t seed, const char* check_name,
                           char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* FREELERAY_H */
