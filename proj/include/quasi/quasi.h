/* C interface to the quasi-theory coefficient engine. */
#ifndef QUASI_QUASI_H
#define QUASI_QUASI_H

#include <stddef.h>

#if defined(QT_BUILDING_LIBRARY)
#define QT_API __attribute__((visibility("default")))
#else
#define QT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qt_context qt_context;
typedef struct qt_group qt_group;

typedef enum qt_status {
  QT_OK = 0,
  QT_INVALID_ARGUMENT = 1, /* bad selector, label, or parameter */
  QT_SIZE_LIMIT = 2,       /* a configured cap was exceeded */
  QT_PARSE = 3,            /* malformed group file or selector text */
  QT_DOMAIN = 4,           /* mathematically invalid input, e.g. non-commuting tuple */
  QT_IO = 5,
  QT_INTERNAL = 6
} qt_status;

typedef enum qt_format { QT_FORMAT_TEXT = 0, QT_FORMAT_JSON = 1 } qt_format;

QT_API qt_context* qt_context_create(void);
QT_API void qt_context_destroy(qt_context* ctx);

QT_API qt_status qt_context_set_max_order(qt_context* ctx, size_t max_order);
QT_API qt_status qt_context_set_max_tuple_scan(qt_context* ctx, size_t max_scan);
QT_API qt_status qt_context_set_threads(qt_context* ctx, unsigned threads);

/* Message for the most recent failure on this context; "" after success. Owned by ctx. */
QT_API const char* qt_last_error(const qt_context* ctx);
QT_API const char* qt_status_string(qt_status status);

/* spec: builtin name (cyclic:k, dihedral:k, symmetric:k, alternating:k, quaternion8) or file path. */
QT_API qt_status qt_group_load(qt_context* ctx, const char* spec, qt_group** out);
QT_API void qt_group_destroy(qt_group* group);
QT_API size_t qt_group_order(const qt_group* group);

/* Reports. On success *out holds a string to release with qt_string_free. Optional
   selectors (rep, h) may be NULL. */
QT_API qt_status qt_report_classes(qt_context* ctx, const qt_group* g, qt_format fmt, char** out);
QT_API qt_status qt_report_chartab(qt_context* ctx, const qt_group* g, qt_format fmt, char** out);
QT_API qt_status qt_report_gnz(qt_context* ctx, const qt_group* g, unsigned n, qt_format fmt, char** out);
QT_API qt_status qt_report_lambda_basis(qt_context* ctx, const qt_group* g, const char* sigma, const char* rep,
                                        qt_format fmt, char** out);
QT_API qt_status qt_report_faithful(qt_context* ctx, const qt_group* g, const char* sigma, const char* rep,
                                    qt_format fmt, char** out);
QT_API qt_status qt_report_sfixed(qt_context* ctx, const qt_group* g, const char* sigma, const char* h,
                                  qt_format fmt, char** out);
QT_API qt_status qt_report_quasi(qt_context* ctx, const qt_group* g, unsigned n, qt_format fmt, char** out);

QT_API void qt_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
