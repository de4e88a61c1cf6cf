#ifndef SPECTRAL_KERNEL_H
#define SPECTRAL_KERNEL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface to the Burchnall-Chaundy kernel.  A session is parsed from
 * an operator-definition text; commands run against the session and
 * return their stdout payload as a malloc'd string.
 *
 * Every fallible call returns a status code.  On failure the out
 * parameters are untouched and spk_last_error() holds a diagnostic for
 * the calling thread.
 */

#define SPK_OK 0
#define SPK_ERR_USAGE 1 /* invalid arguments at the API boundary */
#define SPK_ERR_PARSE 2 /* session or expression text is malformed */
#define SPK_ERR_MATH 3  /* domain error raised by the kernel */

#define SPK_FORMAT_TEXT 0
#define SPK_FORMAT_JSON 1
#define SPK_FORMAT_LATEX 2

typedef struct spk_session spk_session;

/* Parse a session text ("field ...", bindings, "basis L: ...").  On
 * success *out owns the session; release it with spk_session_free. */
int spk_session_parse(const char* text, spk_session** out);
void spk_session_free(spk_session* session);

/* Structure of the designated basis: n = ord L, the module rank t, and
 * the curve rank n/t.  Builds the basis on first use, so structural
 * defects (non-commuting generators, bad order classes) surface here as
 * SPK_ERR_MATH. */
int spk_session_info(spk_session* session, long* n, long* t, long* rank);

/* Residues of the order group, ascending.  Writes at most cap entries
 * and stores the full length in *len; group may be NULL when cap is 0. */
int spk_session_order_group(spk_session* session, long* group, size_t cap,
                            size_t* len);

/* Commands.  format is one of the SPK_FORMAT_* values; *out receives a
 * NUL-terminated string to release with spk_string_free. */
int spk_bc_ideal(spk_session* session, int format, char** out);
int spk_reduce(spk_session* session, const char* target_expr, int format,
               char** out);
int spk_member(spk_session* session, const char* poly_expr, int format,
               char** out);
/* Pass/fail report (text or json); a report with failing checks still
 * returns SPK_OK. */
int spk_verify(spk_session* session, int format, char** out);

/* Session text of a built-in example: "exponential", "elliptic", or
 * "elliptic-sub". */
int spk_example(const char* name, char** out);

/* Diagnostic for the most recent failure on this thread. */
const char* spk_last_error(void);
void spk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SPECTRAL_KERNEL_H */
