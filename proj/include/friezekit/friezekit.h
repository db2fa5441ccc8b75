/* C interface to the friezekit library. Every call returns an fk_status;
 * on failure fk_last_error() describes the problem for the calling thread.
 * Strings handed out through char** must be released with fk_string_free. */
#ifndef FRIEZEKIT_H
#define FRIEZEKIT_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(FK_BUILDING_LIBRARY)
#    define FK_API __declspec(dllexport)
#  else
#    define FK_API __declspec(dllimport)
#  endif
#else
#  define FK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fk_status {
  FK_OK = 0,
  FK_ERR_INVALID_INPUT = 1,
  FK_ERR_DEGENERATE = 2,
  FK_ERR_VALIDATION = 3,
  FK_ERR_FROZEN = 4,
  FK_ERR_NOT_MUTABLE = 5,
  FK_ERR_AMBIGUOUS = 6,
  FK_ERR_INCONSISTENT = 7,
  FK_ERR_STALLED = 8,
  FK_ERR_NON_INTEGRAL = 9,
  FK_ERR_GUARD = 10,
  FK_ERR_NULL_ARGUMENT = 11,
  FK_ERR_INTERNAL = 12
} fk_status;

typedef enum fk_arc_side { FK_LOWER = 0, FK_UPPER = 1 } fk_arc_side;

typedef struct fk_cluster fk_cluster;
typedef struct fk_frieze fk_frieze;
typedef struct fk_enumeration fk_enumeration;

FK_API const char* fk_last_error(void);
FK_API const char* fk_status_name(fk_status status);
FK_API void fk_string_free(char* s);
FK_API fk_status fk_digest(const char* bytes, size_t len, char** hex_out);

/* Clusters */
FK_API fk_status fk_cluster_from_json(const char* json, fk_cluster** out);
FK_API fk_status fk_cluster_quadrilateral(int n, fk_cluster** out);
FK_API fk_status fk_cluster_seed(int k, int n, fk_cluster** out);
FK_API void fk_cluster_free(fk_cluster* c);
FK_API int fk_cluster_k(const fk_cluster* c);
FK_API int fk_cluster_n(const fk_cluster* c);
FK_API size_t fk_cluster_size(const fk_cluster* c);
FK_API fk_status fk_cluster_to_json(const fk_cluster* c, char** out);
FK_API fk_status fk_cluster_is_rectangular(const fk_cluster* c, int* out);
FK_API fk_status fk_cluster_mutate(const fk_cluster* c, const int* subset, size_t len, fk_cluster** out);
FK_API fk_status fk_cluster_quiver_dot(const fk_cluster* c, const char* input_digest, char** out);
FK_API fk_status fk_cluster_tiling_svg(const fk_cluster* c, fk_arc_side side, const char* input_digest,
                                       char** out);
/* kind: "lower", "upper", "forwards" or "reverse"; values has room for cap entries. */
FK_API fk_status fk_cluster_quiddity(const fk_cluster* c, const char* kind, long long* values, size_t cap,
                                     size_t* len);

/* Relation solving and checks */
FK_API fk_status fk_pluecker_solve_json(const fk_cluster* c, char** table_json);
FK_API fk_status fk_pluecker_check_json(const char* table_json, char** report, int* ok);

/* Friezes */
FK_API fk_status fk_frieze_sl2_from_quiddity(const long long* quiddity, size_t n, fk_frieze** out);
FK_API fk_status fk_frieze_sl3_from_cluster(const fk_cluster* c, fk_frieze** out);
FK_API fk_status fk_frieze_from_json(const char* json, fk_frieze** out);
FK_API void fk_frieze_free(fk_frieze* f);
FK_API int fk_frieze_n(const fk_frieze* f);
FK_API int fk_frieze_width(const fk_frieze* f);
FK_API fk_status fk_frieze_entry(const fk_frieze* f, int row, int column, long long* out);
FK_API fk_status fk_frieze_to_json(const fk_frieze* f, char** out);
FK_API fk_status fk_frieze_render(const fk_frieze* f, char** out);
FK_API fk_status fk_frieze_validate(const fk_frieze* f, char** report, int* ok);

/* Oracles */
FK_API fk_status fk_enumerate(int k, int n, fk_enumeration** out);
FK_API fk_status fk_enumeration_from_json(const char* json, fk_enumeration** out);
FK_API void fk_enumeration_free(fk_enumeration* e);
FK_API size_t fk_enumeration_count(const fk_enumeration* e);
FK_API size_t fk_enumeration_rectangular_count(const fk_enumeration* e);
FK_API fk_status fk_enumeration_cluster(const fk_enumeration* e, size_t index, fk_cluster** out);
FK_API fk_status fk_enumeration_to_json(const fk_enumeration* e, int with_clusters, char** out);
/* Accepts a cluster document or an enumeration report with its clusters listed. */
FK_API fk_status fk_check_json(const char* json, char** report, int* ok);
FK_API fk_status fk_cross_validate_gr2(int n, int corrupt, size_t* triangulations, size_t* mismatches);

#ifdef __cplusplus
}
#endif

#endif
