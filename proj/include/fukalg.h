/* C API of the fukalg shared library.
 *
 * All functions return a status code; detailed diagnostics for the most
 * recent failing call on the current thread are available through
 * fukalg_last_error(). Objects are opaque handles owned by the caller
 * and released with the matching _free function.
 */

#ifndef FUKALG_H
#define FUKALG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fukalg_status {
    FUKALG_OK = 0,              /* success / property holds */
    FUKALG_PROPERTY_FAILED = 1, /* computation ran, property does not hold */
    FUKALG_INPUT_ERROR = 2,     /* malformed or rejected input */
    FUKALG_NUMERICAL_ERROR = 3  /* tolerance not reached */
} fukalg_status;

/* A parsed document of one of the supported kinds. */
typedef struct fukalg_document fukalg_document;

/* Parse UTF-8 JSON text; on success *out owns the document. */
fukalg_status fukalg_document_parse(const char* text, fukalg_document** out);

/* Canonical emission; *text_out is released with fukalg_string_free. */
fukalg_status fukalg_document_emit(const fukalg_document* doc,
                                   char** text_out);

/* Kind string ("ainfty_algebra", ...); owned by the document. */
const char* fukalg_document_kind(const fukalg_document* doc);

/* Run the kind-specific validity check (A-infinity relations, bimodule
 * relations, boundary axioms, transversality, ...). A human-readable
 * report is written to *report_out when it is non-NULL. */
fukalg_status fukalg_document_check(const fukalg_document* doc,
                                    char** report_out);

void fukalg_document_free(fukalg_document* doc);

/* Full command driver: same grammar and exit codes as the fukalg CLI.
 * argv excludes the program name. The report (stdout of the command) is
 * written to *report_out when non-NULL. */
fukalg_status fukalg_run(int argc, const char* const* argv,
                         char** report_out);

/* Message of the last failing call on this thread; empty string if none. */
const char* fukalg_last_error(void);

void fukalg_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* FUKALG_H */
