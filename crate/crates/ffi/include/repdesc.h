#ifndef REPDESC_H
#define REPDESC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum RepdescStatus {
  REPDESC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  REPDESC_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  REPDESC_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON or an input that fails validation.
   */
  REPDESC_STATUS_INVALID_INPUT = 3,
  /**
   * A mathematical precondition or check failed.
   */
  REPDESC_STATUS_MATH_FAILURE = 4,
  /**
   * An internal error; the library caught a panic.
   */
  REPDESC_STATUS_INTERNAL = 5,
} RepdescStatus;

typedef struct RepdescCertificate RepdescCertificate;

typedef struct RepdescGroup RepdescGroup;

typedef struct RepdescRep RepdescRep;

typedef struct RepdescSubgroup RepdescSubgroup;

/**
 * Message of the last failure on this thread, or null if none. The caller
 * owns the returned string.
 */
char *repdesc_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void repdesc_string_free(char *s);

/**
 * Parse a group document (`{"degree", "generators", "name"?}`); orders above
 * `bound` are rejected, and `bound = 0` selects the default cap.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RepdescStatus repdesc_group_from_json(const char *json,
                                           size_t bound,
                                           struct RepdescGroup **out);

/**
 * A built-in group by name: `S3`, `D4`, `Q8`, `A4`, `C12`, `S6`, ...
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RepdescStatus repdesc_group_named(const char *name, struct RepdescGroup **out);

/**
 * # Safety
 * `g` must be a live group handle.
 */
size_t repdesc_group_order(const struct RepdescGroup *g);

/**
 * # Safety
 * `g` must be a live group handle and `out` a valid pointer.
 */
enum RepdescStatus repdesc_group_to_json(const struct RepdescGroup *g, char **out);

/**
 * Character table with class representatives and sizes, as JSON.
 *
 * # Safety
 * `g` must be a live group handle and `out` a valid pointer.
 */
enum RepdescStatus repdesc_char_table_json(const struct RepdescGroup *g, char **out);

/**
 * # Safety
 * `g` must be null or a handle returned by this library, not yet freed.
 */
void repdesc_group_free(struct RepdescGroup *g);

/**
 * Parse `{"generators": [...]}` as a subgroup of `g`.
 *
 * # Safety
 * `g` must be a live group handle, `json` a NUL-terminated string and `out`
 * a valid pointer.
 */
enum RepdescStatus repdesc_subgroup_from_json(const struct RepdescGroup *g,
                                              const char *json,
                                              struct RepdescSubgroup **out);

/**
 * # Safety
 * `h` must be a live subgroup handle.
 */
size_t repdesc_subgroup_order(const struct RepdescSubgroup *h);

/**
 * # Safety
 * `h` must be null or a handle returned by this library, not yet freed.
 */
void repdesc_subgroup_free(struct RepdescSubgroup *h);

/**
 * Parse a representation of `g`; the generator images are checked.
 *
 * # Safety
 * `g` must be a live group handle, `json` a NUL-terminated string and `out`
 * a valid pointer.
 */
enum RepdescStatus repdesc_rep_from_json(const struct RepdescGroup *g,
                                         const char *json,
                                         struct RepdescRep **out);

/**
 * Explicit matrices for the `index`-th irreducible character of `g`.
 *
 * # Safety
 * `g` must be a live group handle and `out` a valid pointer.
 */
enum RepdescStatus repdesc_rep_irreducible(const struct RepdescGroup *g,
                                           size_t index,
                                           struct RepdescRep **out);

/**
 * # Safety
 * `rho` must be a live representation handle.
 */
size_t repdesc_rep_rank(const struct RepdescRep *rho);

/**
 * # Safety
 * `rho` must be a live representation handle and `out` a valid pointer.
 */
enum RepdescStatus repdesc_rep_to_json(const struct RepdescRep *rho, char **out);

/**
 * Per-class simple-root report as JSON; `found` (may be null) receives
 * whether any class has an eigenvalue of multiplicity one.
 *
 * # Safety
 * `rho` must be a live representation handle and `out` a valid pointer;
 * `found` may be null.
 */
enum RepdescStatus repdesc_simple_root_scan(const struct RepdescRep *rho, bool *found, char **out);

/**
 * # Safety
 * `rho` must be null or a handle returned by this library, not yet freed.
 */
void repdesc_rep_free(struct RepdescRep *rho);

/**
 * Dévissage certificate of `rho` relative to the normal subgroup `n`.
 *
 * # Safety
 * `rho` and `n` must be live handles over the same group and `out` a valid
 * pointer.
 */
enum RepdescStatus repdesc_devissage(const struct RepdescRep *rho,
                                     const struct RepdescSubgroup *n,
                                     struct RepdescCertificate **out);

/**
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum RepdescStatus repdesc_certificate_from_json(const char *json, struct RepdescCertificate **out);

/**
 * # Safety
 * `c` must be a live certificate handle and `out` a valid pointer.
 */
enum RepdescStatus repdesc_certificate_to_json(const struct RepdescCertificate *c, char **out);

/**
 * Independent re-verification. `ok` (may be null) receives the verdict and
 * `report` (may be null) the JSON report; a failed check is not an error.
 *
 * # Safety
 * `c` must be a live certificate handle; `ok` and `report` may be null.
 */
enum RepdescStatus repdesc_certificate_verify(const struct RepdescCertificate *c,
                                              bool *ok,
                                              char **report);

/**
 * # Safety
 * `c` must be null or a handle returned by this library, not yet freed.
 */
void repdesc_certificate_free(struct RepdescCertificate *c);

/**
 * Full harness run with the twist `ζ_modulus ↦ ζ_modulus^k`
 * (`modulus = 0` uses the conductor of `rho`). `passed` (may be null)
 * receives the overall verdict; `out` the JSON report.
 *
 * # Safety
 * `rho` and `n` must be live handles over the same group and `out` a valid
 * pointer; `passed` may be null.
 */
enum RepdescStatus repdesc_harness(const struct RepdescRep *rho,
                                   const struct RepdescSubgroup *n,
                                   int64_t k,
                                   uint64_t modulus,
                                   uint64_t seed,
                                   bool *passed,
                                   char **out);

/**
 * Run the command line with `argv[0..argc]` (`argv[0]` is the program
 * name). `exit_code` receives the process exit code the command would
 * return and `out` its standard output.
 *
 * # Safety
 * `argv` must point to `argc` NUL-terminated strings; `exit_code` and `out`
 * must be valid pointers.
 */
enum RepdescStatus repdesc_cli_run(int argc, const char *const *argv, int *exit_code, char **out);

#endif  /* REPDESC_H */
