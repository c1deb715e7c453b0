#ifndef DELTALINK_DELTALINK_H
#define DELTALINK_DELTALINK_H

/* C interface to the Delta-move link library. Every function returns a
 * dl_status; on failure dl_last_error() describes the problem. Strings
 * returned through char** outputs are owned by the caller and released with
 * dl_string_free. */

#include <stddef.h>

#if defined(DELTALINK_BUILDING_LIBRARY)
#define DL_API __attribute__((visibility("default")))
#else
#define DL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dl_status {
  DL_OK = 0,
  DL_ERR_PARSE = 1,
  DL_ERR_VALIDATION = 2,
  DL_ERR_INVALID_ARGUMENT = 3,
  DL_ERR_NOT_FOUND = 4,
  DL_ERR_IO = 5,
  DL_ERR_ARITHMETIC = 6,
  DL_ERR_VERIFICATION = 7,
  DL_ERR_INTERNAL = 8
} dl_status;

typedef enum dl_format { DL_FORMAT_MARKDOWN = 0, DL_FORMAT_CSV = 1 } dl_format;

typedef struct dl_diagram dl_diagram;
typedef struct dl_catalog dl_catalog;
typedef struct dl_annular dl_annular;

/* Message of the last failed call on this thread; empty after success. */
DL_API const char* dl_last_error(void);
DL_API const char* dl_status_name(dl_status s);
DL_API void dl_string_free(char* s);

/* Diagrams */
DL_API dl_status dl_diagram_parse(const char* pd, dl_diagram** out);
DL_API void dl_diagram_free(dl_diagram* d);
DL_API dl_status dl_diagram_components(const dl_diagram* d, size_t* out);
DL_API dl_status dl_diagram_crossings(const dl_diagram* d, size_t* out);
DL_API dl_status dl_diagram_pd(const dl_diagram* d, char** out);
DL_API dl_status dl_diagram_linking_number(const dl_diagram* d, size_t i, size_t j, int* out);
/* Normalized Alexander polynomial: t for knots, x, y, z for links. */
DL_API dl_status dl_diagram_alexander(const dl_diagram* d, char** out);
DL_API dl_status dl_diagram_arf_knot(const dl_diagram* d, int* out);
DL_API dl_status dl_diagram_milnor_1122(const dl_diagram* d, long long* out);
/* Linking matrix, Alexander polynomial, arf (knots) and mu(1122) as text. */
DL_API dl_status dl_diagram_invariants_report(const dl_diagram* d, char** out);

/* Catalog; a NULL path selects $DELTA_LINK_CATALOG or the bundled dataset. */
DL_API dl_status dl_catalog_load(const char* path, dl_catalog** out);
DL_API void dl_catalog_free(dl_catalog* c);
DL_API dl_status dl_catalog_link_count(const dl_catalog* c, size_t* out);
DL_API dl_status dl_catalog_link_name(const dl_catalog* c, size_t index, char** out);
/* A PD literal, or a catalog name with optional mirror prefix and # unions. */
DL_API dl_status dl_resolve(const dl_catalog* c, const char* target, dl_diagram** out);

/* Bound report for one link. DL_ERR_VERIFICATION when an upper bound
 * contradicts the lower bounds. */
DL_API dl_status dl_bounds_report(const dl_catalog* c, const char* link, char** out);
/* Regenerated table; *clean is 1 when it matches the recorded values, and
 * *diff (may be NULL) receives the differences. */
DL_API dl_status dl_table_report(const dl_catalog* c, dl_format format, char** out, char** diff, int* clean);
/* Verifies every pathway in a certificate file at level 'a' or 'b'. */
DL_API dl_status dl_verify_certificates(const dl_catalog* c, const char* path, char level, char** report,
                                        int* passed);

/* Annular diagrams */
DL_API dl_status dl_annular_parse(const char* text, dl_annular** out);
DL_API dl_status dl_annular_load(const char* path, dl_annular** out);
DL_API void dl_annular_free(dl_annular* a);
DL_API dl_status dl_annular_beta1(const dl_annular* a, int* out);
DL_API int dl_obstructs_single_toroidal_delta(int beta1);

#ifdef __cplusplus
}
#endif

#endif
