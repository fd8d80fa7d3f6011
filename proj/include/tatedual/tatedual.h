/*
 * C interface to the tatedual library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a td_status; on
 * failure the thread-local message from td_last_error() describes the
 * problem. Structured results are returned as td_doc handles holding a
 * single JSON object whose numeric payloads are exact strings
 * ("13/27", "2 mod 2^4", "2^inf*3").
 */
#ifndef TATEDUAL_H
#define TATEDUAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TD_API __declspec(dllexport)
#else
#define TD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum td_status {
  TD_OK = 0,
  TD_ERR_PARSE = 1,    /* malformed text input */
  TD_ERR_DOMAIN = 2,   /* precondition violated, operation rejected */
  TD_ERR_INTERNAL = 3, /* invariant failure inside the library */
  TD_ERR_NULL = 4      /* a required pointer argument was NULL */
} td_status;

typedef struct td_padic td_padic;
typedef struct td_doc td_doc;

TD_API const char* td_version(void);
TD_API const char* td_last_error(void);

/* ---- p-adic integers ---------------------------------------------------- */

/* "p=<prime> N=<precision> digits=[c0,...]" or "p=<prime> N=<precision> int=<m>" */
TD_API td_status td_padic_parse(const char* text, td_padic** out);
/* m is a decimal integer, negative allowed */
TD_API td_status td_padic_from_int(const char* m, uint64_t p, size_t precision, td_padic** out);
TD_API td_status td_padic_from_digits(uint64_t p, const uint64_t* digits, size_t count,
                                      td_padic** out);
TD_API td_padic* td_padic_clone(const td_padic* x);
TD_API void td_padic_free(td_padic* x);

TD_API uint64_t td_padic_prime(const td_padic* x);
TD_API size_t td_padic_precision(const td_padic* x);
/* Returns 1 and stores the valuation when some digit is nonzero; returns 0
 * when every stored digit vanishes (valuation at least the precision). */
TD_API int td_padic_valuation(const td_padic* x, size_t* out);
TD_API int td_padic_equal(const td_padic* x, const td_padic* y);
/* snprintf-style: writes at most cap bytes including the terminator and
 * returns the full length of the digit-form text. */
TD_API size_t td_padic_format(const td_padic* x, char* buf, size_t cap);

/* op is one of "add", "sub", "neg", "mul", "invert"; y may be NULL for the
 * unary ones. */
TD_API td_status td_padic_arith(const char* op, const td_padic* x, const td_padic* y,
                                td_padic** out);
TD_API td_status td_padic_canonical(const td_padic* x, td_doc** out);

/* ---- result documents --------------------------------------------------- */

TD_API const char* td_doc_json(const td_doc* doc);
TD_API void td_doc_free(td_doc* doc);

/* ---- the subgroup Gamma_q of Q ------------------------------------------- */

TD_API td_status td_gamma_generators(const td_padic* q, td_doc** out);
/* gens: comma-separated rationals, may be empty */
TD_API td_status td_gamma_hull(const char* gens, td_doc** out);
TD_API td_status td_gamma_group(const td_padic* q, td_doc** out);
TD_API td_status td_gamma_contains(const char* generator, const char* r, int* out);
TD_API td_status td_gamma_contains_one(const td_padic* q, td_doc** out);
TD_API td_status td_gamma_density(const td_padic* q, const char* target, const char* epsilon,
                                  td_doc** out);
TD_API td_status td_gamma_prufer_image(const char* gamma, uint64_t p, td_doc** out);
TD_API td_status td_gamma_prufer_check(const td_padic* q, td_doc** out);
TD_API td_status td_gamma_limit(const td_padic* q, td_doc** out);

/* ---- supernatural numbers and UHF invariants ----------------------------- */

/* descriptor: "sizes=2,4,8" or "sizes=;tail=2" */
TD_API td_status td_uhf_k0(const char* descriptor, td_doc** out);
TD_API td_status td_uhf_qn_contains(const char* n, const char* r, int* out);
TD_API td_status td_uhf_stable_iso(const char* n1, const char* n2, td_doc** out);
TD_API td_status td_uhf_from_tate(const td_padic* q, td_doc** out);

/* ---- Tate curve coefficients --------------------------------------------- */

TD_API td_status td_tate_coeffs(const td_padic* q, td_doc** out);

/* ---- Pontryagin pairing --------------------------------------------------- */

/* gamma: "a/p^n" */
TD_API td_status td_dual_pair(const td_padic* z, const char* gamma, td_doc** out);
TD_API td_status td_dual_bidual(const char* gamma, const td_padic* z, td_doc** out);
TD_API td_status td_dual_check(uint64_t p, size_t level, td_doc** out);

#ifdef __cplusplus
}
#endif

#endif /* TATEDUAL_H */
