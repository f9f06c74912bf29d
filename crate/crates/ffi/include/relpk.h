#ifndef RELPK_H
#define RELPK_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum RelpkStatus {
  RELPK_STATUS_OK = 0,
  RELPK_STATUS_NULL_POINTER = 1,
  RELPK_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed input: chords, words, JSON documents, unknown names.
   */
  RELPK_STATUS_PARSE = 3,
  /**
   * Well-formed input that violates a structural requirement.
   */
  RELPK_STATUS_STRUCTURE = 4,
  /**
   * A net or homography failed verification.
   */
  RELPK_STATUS_VERIFICATION = 5,
  RELPK_STATUS_BUDGET_EXCEEDED = 6,
  RELPK_STATUS_PANIC = 7,
} RelpkStatus;

/**
 * Opaque monoid context.
 */
typedef struct RelpkContext RelpkContext;

/**
 * Opaque PK-net.
 */
typedef struct RelpkNet RelpkNet;

/**
 * Message of the last failed call on this thread, or null. Owned by the
 * library; valid until the next call on the same thread.
 */
const char *relpk_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void relpk_string_free(char *s);

/**
 * Builds one of the preset contexts (`upl`, `s`, `t`, `st`, `ti`).
 *
 * # Safety
 * `name` must be a nul-terminated string; `out_ctx` must be writable.
 */
enum RelpkStatus relpk_context_new(const char *name, struct RelpkContext **out_ctx);

/**
 * # Safety
 * `ctx` must come from [`relpk_context_new`] and not have been freed.
 */
void relpk_context_free(struct RelpkContext *ctx);

/**
 * Number of elements of the context's monoid.
 *
 * # Safety
 * `ctx` must be a live handle; `out_size` must be writable.
 */
enum RelpkStatus relpk_context_size(const struct RelpkContext *ctx, size_t *out_size);

/**
 * Canonical words of the elements relating chord `a` to chord `b`, joined
 * by `", "`. The string is empty when no element relates them.
 *
 * # Safety
 * `ctx` must be a live handle, `a` and `b` nul-terminated strings and
 * `out_words` writable.
 */
enum RelpkStatus relpk_context_relate(const struct RelpkContext *ctx,
                                      const char *a,
                                      const char *b,
                                      char **out_words);

/**
 * Parses a PK-net document.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out_net` must be writable.
 */
enum RelpkStatus relpk_net_from_json(const char *json, struct RelpkNet **out_net);

/**
 * # Safety
 * `net` must come from this library and not have been freed.
 */
void relpk_net_free(struct RelpkNet *net);

/**
 * Serializes a net back to its JSON document.
 *
 * # Safety
 * `net` must be a live handle; `out_json` must be writable.
 */
enum RelpkStatus relpk_net_to_json(const struct RelpkNet *net, char **out_json);

/**
 * Checks every net condition. `out_passed` receives the verdict;
 * `out_report`, if not null, receives the JSON check list. A failed check
 * is not an error: the status stays `Ok`.
 *
 * # Safety
 * `net` must be a live handle; `out_passed` must be writable and
 * `out_report` null or writable.
 */
enum RelpkStatus relpk_net_verify(const struct RelpkNet *net, bool *out_passed, char **out_report);

/**
 * Applies the homography described by `hom_json` and returns the image
 * net, which is verified before being handed back.
 *
 * # Safety
 * `net` must be a live handle, `hom_json` a nul-terminated string and
 * `out_net` writable.
 */
enum RelpkStatus relpk_net_apply_homography(const struct RelpkNet *net,
                                            const char *hom_json,
                                            struct RelpkNet **out_net);

/**
 * Analyzes a chord progression document and returns the analysis JSON.
 *
 * # Safety
 * `json` must be a nul-terminated string; `out_json` must be writable.
 */
enum RelpkStatus relpk_analyze_json(const char *json, char **out_json);

#endif  /* RELPK_H */
