#ifndef KIRBY4_H
#define KIRBY4_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KIRBY4_API __declspec(dllexport)
#else
#define KIRBY4_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kirby4_status {
  KIRBY4_OK = 0,
  KIRBY4_MALFORMED_INPUT,
  KIRBY4_INVALID_PD,
  KIRBY4_FRAMING_COUNT_MISMATCH,
  KIRBY4_INDEX_OUT_OF_RANGE,
  KIRBY4_LENGTH_MISMATCH,
  KIRBY4_NOT_A_KNOT,
  KIRBY4_NOT_SYMMETRIC,
  KIRBY4_NOT_UNIMODULAR,
  KIRBY4_NOT_INDEFINITE,
  KIRBY4_NOT_POSITIVE_DEFINITE,
  KIRBY4_RANK_MISMATCH,
  KIRBY4_DIMENSION_MISMATCH,
  KIRBY4_INTERNAL_INVARIANT_VIOLATION,
  KIRBY4_RESOURCE_LIMIT,
  KIRBY4_NULL_ARGUMENT,   /* a required pointer was NULL */
  KIRBY4_OUT_OF_MEMORY,
  KIRBY4_UNEXPECTED       /* any other failure inside the library */
} kirby4_status;

/* Opaque immutable values. Every handle returned must be released with the
   matching _free function; freeing NULL is allowed. */
typedef struct kirby4_link kirby4_link;
typedef struct kirby4_matrix kirby4_matrix;

/* Flags for kirby4_homeomorphic. */
#define KIRBY4_UNORIENTED 1u
#define KIRBY4_SMOOTH 2u

/* Pass as max_candidates for no cap on the definite enumeration. */
#define KIRBY4_UNLIMITED UINT64_MAX

/* Message for the last failed call on this thread, "" if there was none.
   Valid until the next call into the library on the same thread. */
KIRBY4_API const char* kirby4_last_error_message(void);
KIRBY4_API const char* kirby4_status_name(kirby4_status status);

/* Strings returned through char** outputs are NUL-terminated canonical JSON
   (sorted keys, no whitespace) and owned by the caller. */
KIRBY4_API void kirby4_string_free(char* s);

/* Framed links in the JSON file format. */
KIRBY4_API kirby4_status kirby4_link_parse(const char* text, size_t length, kirby4_link** out);
KIRBY4_API void kirby4_link_free(kirby4_link* link);
KIRBY4_API kirby4_status kirby4_link_to_json(const kirby4_link* link, char** out);
KIRBY4_API kirby4_status kirby4_link_mirror(const kirby4_link* link, kirby4_link** out);
KIRBY4_API size_t kirby4_link_component_count(const kirby4_link* link);
KIRBY4_API size_t kirby4_link_crossing_count(const kirby4_link* link);
KIRBY4_API kirby4_status kirby4_crossing_sign(const kirby4_link* link, size_t crossing, int* out);
KIRBY4_API kirby4_status kirby4_linking_matrix(const kirby4_link* link, kirby4_matrix** out);

/* Symmetric integer matrices, {"n":k,"entries":[[...]]} as JSON. */
KIRBY4_API kirby4_status kirby4_matrix_parse(const char* text, size_t length, kirby4_matrix** out);
KIRBY4_API kirby4_status kirby4_matrix_from_entries(size_t n, const int64_t* row_major, kirby4_matrix** out);
KIRBY4_API void kirby4_matrix_free(kirby4_matrix* m);
KIRBY4_API size_t kirby4_matrix_size(const kirby4_matrix* m);
/* KIRBY4_RESOURCE_LIMIT if the entry does not fit in 62 bits. */
KIRBY4_API kirby4_status kirby4_matrix_entry(const kirby4_matrix* m, size_t i, size_t j, int64_t* out);
KIRBY4_API kirby4_status kirby4_matrix_to_json(const kirby4_matrix* m, char** out);
KIRBY4_API kirby4_status kirby4_matrix_is_unimodular(const kirby4_matrix* m, int* out);

/* Rank, signature, parity, definiteness. */
KIRBY4_API kirby4_status kirby4_classify_form(const kirby4_matrix* m, char** json);
KIRBY4_API kirby4_status kirby4_characteristic_vector(const kirby4_matrix* m, char** json);
/* {"congruent", "left", "right", "witness"}; a witness A with A^T a A == b
   is given when the definite search produced one. */
KIRBY4_API kirby4_status kirby4_compare_forms(const kirby4_matrix* a, const kirby4_matrix* b,
                                              uint64_t max_candidates, char** json);

/* Single-component links only: Alexander coefficients, determinant, Arf. */
KIRBY4_API kirby4_status kirby4_arf(const kirby4_link* knot, char** json);
/* The manifold invariants; smooth != 0 skips the Arf computation and sets ks 0. */
KIRBY4_API kirby4_status kirby4_invariants(const kirby4_link* link, int smooth, char** json);
/* The verdict record. flags: KIRBY4_UNORIENTED, KIRBY4_SMOOTH. */
KIRBY4_API kirby4_status kirby4_homeomorphic(const kirby4_link* a, const kirby4_link* b, unsigned flags,
                                             uint64_t max_candidates, char** json);

#ifdef __cplusplus
}
#endif

#endif
