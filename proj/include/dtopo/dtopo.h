/* C interface to the dtopo digital-topology library.
 *
 * Every fallible call returns a dtopo_status; on failure the thread's last
 * error message is available from dtopo_last_error() until the next call on
 * that thread. Handles are opaque and owned by the caller; release them with
 * the matching *_free function. Strings returned through char** out
 * parameters are released with dtopo_string_free. */
#ifndef DTOPO_DTOPO_H
#define DTOPO_DTOPO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DTOPO_BUILDING)
#    define DTOPO_API __declspec(dllexport)
#  else
#    define DTOPO_API __declspec(dllimport)
#  endif
#else
#  define DTOPO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dtopo_status {
  DTOPO_OK = 0,
  DTOPO_ERR_PARAMETER = 1,
  DTOPO_ERR_MEMBERSHIP = 2,
  DTOPO_ERR_UNKNOWN_ADJACENCY = 3,
  DTOPO_ERR_PARSE = 4,
  DTOPO_ERR_INVALID_CURVE = 5,
  DTOPO_ERR_UNKNOWN_NAME = 6,
  DTOPO_ERR_OVERFLOW = 7,
  DTOPO_ERR_IO = 8,
  DTOPO_ERR_INTERNAL = 99
} dtopo_status;

typedef enum dtopo_format {
  DTOPO_FORMAT_TEXT = 0,
  DTOPO_FORMAT_MACHINE = 1
} dtopo_format;

typedef struct dtopo_image dtopo_image;
typedef struct dtopo_product_report dtopo_product_report;

typedef struct dtopo_cert_outcome {
  int32_t t;
  uint64_t k;
  int c_compatible;
  int normal;
} dtopo_cert_outcome;

DTOPO_API const char* dtopo_version(void);
DTOPO_API const char* dtopo_last_error(void);
DTOPO_API const char* dtopo_status_name(dtopo_status status);
DTOPO_API void dtopo_string_free(char* s);

/* Lattice adjacencies */
DTOPO_API dtopo_status dtopo_k_value(int32_t t, int32_t n, uint64_t* out_k);
DTOPO_API dtopo_status dtopo_t_from_k(uint64_t k, int32_t n, int32_t* out_t);
DTOPO_API dtopo_status dtopo_adjacent(const int64_t* p, const int64_t* q, int32_t n, int32_t t,
                                      int* out_adjacent);

/* Images */
DTOPO_API dtopo_status dtopo_image_create(int32_t n, int32_t t, const int64_t* coords,
                                          size_t point_count, dtopo_image** out);
DTOPO_API dtopo_status dtopo_image_parse(const char* text, const char* source_name,
                                         dtopo_image** out);
DTOPO_API dtopo_status dtopo_image_load(const char* path, dtopo_image** out);
DTOPO_API dtopo_status dtopo_canonical_image(const char* name, dtopo_image** out);
DTOPO_API void dtopo_image_free(dtopo_image* image);

DTOPO_API int32_t dtopo_image_dim(const dtopo_image* image);
DTOPO_API int32_t dtopo_image_t(const dtopo_image* image);
DTOPO_API uint64_t dtopo_image_k(const dtopo_image* image);
DTOPO_API size_t dtopo_image_size(const dtopo_image* image);
/* Copies point `index` (sorted order) into out_coords[0..dim). */
DTOPO_API dtopo_status dtopo_image_point(const dtopo_image* image, size_t index,
                                         int64_t* out_coords);
DTOPO_API dtopo_status dtopo_image_serialize(const dtopo_image* image, char** out_text);

/* Canonical curves: names and their image files (points in curve order). */
DTOPO_API size_t dtopo_canonical_count(void);
DTOPO_API const char* dtopo_canonical_name(size_t index);
DTOPO_API dtopo_status dtopo_canonical_file(const char* name, char** out_text);

/* Queries */
DTOPO_API dtopo_status dtopo_path_length(const dtopo_image* image, const int64_t* x,
                                         const int64_t* y, int* out_reachable,
                                         uint64_t* out_length);
DTOPO_API dtopo_status dtopo_is_connected(const dtopo_image* image, int* out_connected,
                                          size_t* out_components);
/* Returns the curve length in out_l, or 0 when the set is not a curve. */
DTOPO_API dtopo_status dtopo_curve_length(const dtopo_image* image, size_t* out_l);

/* Product certification */
DTOPO_API dtopo_status dtopo_product_analyze(const dtopo_image* left, const dtopo_image* right,
                                             dtopo_product_report** out);
DTOPO_API size_t dtopo_report_outcome_count(const dtopo_product_report* report);
DTOPO_API dtopo_status dtopo_report_outcome(const dtopo_product_report* report, size_t index,
                                            dtopo_cert_outcome* out);
DTOPO_API void dtopo_report_free(dtopo_product_report* report);

/* Rendered reports, one per CLI subcommand. */
DTOPO_API dtopo_status dtopo_render_ktable(int32_t max_n, dtopo_format format, char** out);
DTOPO_API dtopo_status dtopo_render_neighborhood(const dtopo_image* image, const char* point,
                                                 uint64_t eps, dtopo_format format, char** out);
DTOPO_API dtopo_status dtopo_render_connected(const dtopo_image* image, dtopo_format format,
                                              char** out);
DTOPO_API dtopo_status dtopo_render_check_curve(const dtopo_image* image, dtopo_format format,
                                                char** out);
DTOPO_API dtopo_status dtopo_render_search_curve(int32_t n, int32_t t, uint64_t l,
                                                 dtopo_format format, char** out);
DTOPO_API dtopo_status dtopo_render_product_analyze(const dtopo_image* left,
                                                    const dtopo_image* right,
                                                    dtopo_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DTOPO_DTOPO_H */
