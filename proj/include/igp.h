/* igp -- exact arithmetic for p-adic interpolation of incomplete gamma
 * values, m-value continuity analysis, and wreath-product enumeration.
 *
 * C interface to the igp core. All functions return an igp_status; any
 * status other than IGP_OK leaves a human-readable message retrievable via
 * igp_last_error() (thread-local, valid until the next failing call on the
 * same thread). Output parameters are written only on IGP_OK.
 *
 * Ownership: every char** output receives a NUL-terminated heap string the
 * caller releases with igp_free_string(); every handle output is released
 * with the matching *_free(). Handles are immutable after creation except
 * igp_seq, which supports push. Nothing here is thread-safe to mutate
 * concurrently, but distinct handles may be used from distinct threads.
 *
 * Numbers cross this boundary as decimal strings ("-7", "22/7") so that no
 * precision is ever silently lost.
 */

#ifndef IGP_H
#define IGP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum igp_status {
  IGP_OK = 0,
  IGP_INVALID_ARGUMENT = 1, /* contract violation: sizes, precisions, primes */
  IGP_DOMAIN = 2,           /* outside the mathematical domain of the op */
  IGP_BUDGET = 3,           /* enumeration would exceed the work budget */
  IGP_PARSE = 4,            /* malformed textual input */
  IGP_PRECISION = 5,        /* certified bounds cannot reach the target */
  IGP_INTERNAL = 6          /* unexpected failure (allocation, logic) */
} igp_status;

/* Library version as "major.minor.patch". Static storage; do not free. */
const char* igp_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
const char* igp_last_error(void);

void igp_free_string(char* s);

/* ------------------------------------------------------------------ */
/* Rational sequences f(0), f(1), ...                                  */

typedef struct igp_seq igp_seq;

igp_status igp_seq_new(igp_seq** out);
/* Parses "1,0,1,-2,9/2" (comma-separated rationals, whitespace tolerated). */
igp_status igp_seq_parse(const char* text, igp_seq** out);
igp_status igp_seq_push(igp_seq* s, const char* rational);
size_t igp_seq_len(const igp_seq* s);
igp_status igp_seq_get(const igp_seq* s, size_t index, char** out);
/* New sequence with entry n multiplied by (-1)^n. */
igp_status igp_seq_alternated(const igp_seq* s, igp_seq** out);
void igp_seq_free(igp_seq* s);

/* Sign-adjusted products of integers prime to p (f(0..len-1)). */
igp_status igp_seq_morita(unsigned long p, size_t len, igp_seq** out);
/* Coefficients c_n of exp(sum_{k>=0} X^(ell^k) / ell^k), n < len. */
igp_status igp_seq_artin_hasse(unsigned long ell, size_t len, igp_seq** out);

/* ------------------------------------------------------------------ */
/* m-values and the continuity criterion                               */

/* m_1..m_k of f (requires f(0) = 1 and k < len(f)), via the recursion
 * m_k = f(k)/(k-1)! - sum_{j<k} f(k-j)/(k-j)! m_j. */
igp_status igp_mvalues(const igp_seq* f, size_t k, igp_seq** out);
/* Single m_k via the independent partition-sum route. */
igp_status igp_mvalue_partition_route(const igp_seq* f, unsigned k, char** out);
/* EGF coefficients c_0..c_K of exp(sum m_k X^k / k), m = (m_1, m_2, ...). */
igp_status igp_zeta_egf(const igp_seq* m, size_t K, igp_seq** out);

/* JSON: {"p":..,"verdict":"continuous"|"not-continuous"|
 * "criterion-inapplicable","m1":..,"mp":..,"residue":..,"violations":[..]}.
 * Requires f(0) = 1 and len(f) >= p + 1. */
igp_status igp_continuity_criterion(const igp_seq* f, unsigned long p, char** json);

/* Mahler finite-difference regularity report (continuity, metric-map bound,
 * analyticity, local analyticity) with exact statistics; len(f) >= 8. */
igp_status igp_classify_regularity(const igp_seq* f, unsigned long p, char** json);

/* ------------------------------------------------------------------ */
/* p-adic integers at fixed precision                                  */

typedef struct igp_padic igp_padic;

/* value is a rational string whose denominator is prime to p; the residue
 * is reduced into [0, p^precision). precision >= 1. */
igp_status igp_padic_new(unsigned long p, unsigned precision, const char* value,
                         igp_padic** out);
unsigned long igp_padic_prime(const igp_padic* x);
unsigned igp_padic_precision(const igp_padic* x);
igp_status igp_padic_residue(const igp_padic* x, char** out);
/* JSON: {"p":..,"precision":..,"residue":".."}. */
igp_status igp_padic_json(const igp_padic* x, char** out);
void igp_padic_free(igp_padic* x);

igp_status igp_padic_add(const igp_padic* a, const igp_padic* b, igp_padic** out);
igp_status igp_padic_sub(const igp_padic* a, const igp_padic* b, igp_padic** out);
igp_status igp_padic_mul(const igp_padic* a, const igp_padic* b, igp_padic** out);
igp_status igp_padic_neg(const igp_padic* a, igp_padic** out);
/* Requires a unit (valuation 0). */
igp_status igp_padic_inverse(const igp_padic* a, igp_padic** out);
/* 1 when congruent at the smaller precision, 0 otherwise (including on a
 * prime mismatch). */
igp_status igp_padic_equal(const igp_padic* a, const igp_padic* b, int* out);

/* exp: v_p(x) >= 1 (odd p) or v_2(x) >= 2; log: x = 1 mod p (mod 4 for 2). */
igp_status igp_padic_exp(const igp_padic* x, igp_padic** out);
igp_status igp_padic_log(const igp_padic* x, igp_padic** out);
/* r^y = exp(y log r) for r = 1 mod p (mod 4 for p = 2), y any integer. */
igp_status igp_padic_pow(const igp_padic* r, const igp_padic* y, igp_padic** out);

/* ------------------------------------------------------------------ */
/* The p-adic incomplete gamma function (odd p, r = 1 mod p)           */

/* Factored route: r^(s-1) exp_p(pr) atilde(s-1, 1/r). */
igp_status igp_gamma_p(const igp_padic* s, const igp_padic* r, igp_padic** out);
/* Term-by-term route: exp_p(pr) sum_k r^(s-1-k) (s-1)...(s-k). */
igp_status igp_gamma_p_series(const igp_padic* s, const igp_padic* r,
                              igp_padic** out);
/* Integer route at s = n + 1: exp_p(pr) * n! * (truncated exponential)(r). */
igp_status igp_gamma_p_truncexp(unsigned n, const igp_padic* r, igp_padic** out);
/* atilde(y, s) = 1 + sum_k s^k y(y-1)...(y-k+1); any p, both args in Z_p. */
igp_status igp_a_tilde(const igp_padic* y, const igp_padic* s, igp_padic** out);

/* One-shot evaluation for front ends. route is "all", "factored", "series"
 * or "truncexp". "all" emits {"p":..,"N":..,"s":..,"r":..,"gamma_p":..,
 * "routes_agree":..} where gamma_p is the factored-route residue and the
 * flag covers every route applicable at s ("truncexp" needs integer s >= 1).
 * A single route emits {"p","N","s","r","route","gamma_p"}. */
igp_status igp_gamma_report(unsigned long p, unsigned N, const char* s,
                            const char* r, const char* route, char** json);

/* gamma at integer s = n versus the exact rational a(n-1, 1/r) r^(n-1) times
 * exp_p(pr); JSON with both residues and an "equal" flag. n >= 1. */
igp_status igp_classical_consistency(unsigned n, long r, unsigned long p,
                                     unsigned N, char** json);

/* p-adic floor identity: gamma_p(n+1, 1/r) = r^(-n) exp_p(p/r) *
 * floor(e^(1/r) r^n n! [+ 1/2 when r < 0]); the floor is certified with
 * exact rational intervals. JSON with both sides and an "equal" flag. */
igp_status igp_verify_floor_padic(unsigned n, long r, unsigned long p,
                                  unsigned N, char** json);

/* Residues y mod p^level with atilde(y, r) = 0 mod p^level, as a JSON
 * object {"p":..,"level":..,"zeros":["..",..]}; p^level <= budget. */
igp_status igp_zero_scan(const igp_padic* r, unsigned level, uint64_t budget,
                         char** json);

/* ------------------------------------------------------------------ */
/* Enumeration: wreath products and cycle-restricted permutations      */

/* Cycle-length sets. spec is one of: squares, non-squares, primes,
 * non-primes, powers:<l>, proper-powers:<l>, complement-powers:<l>,
 * derangements, all, none, explicit:<k1,k2,...>. Membership is defined for
 * 1 <= k <= bound. */
typedef struct igp_lset igp_lset;

igp_status igp_lset_preset(const char* spec, uint64_t bound, igp_lset** out);
igp_status igp_lset_contains(const igp_lset* L, uint64_t k, int* out);
igp_status igp_lset_describe(const igp_lset* L, char** out);
void igp_lset_free(igp_lset* L);

/* a(n, r) = sum_k binom(n,k) k! r^k for rational r, as an exact string. */
igp_status igp_a_closed(unsigned n, const char* r, char** out);

/* Brute-force counts by literal enumeration (budget-guarded). */
igp_status igp_wreath_derangements(unsigned n, unsigned r, uint64_t budget,
                                   uint64_t* out);
igp_status igp_wreath_arrangements(unsigned n, unsigned r, uint64_t budget,
                                   uint64_t* out);

/* Permutations of [n] with every cycle length in L: brute scan of S_n. */
igp_status igp_cycle_restricted_count(const igp_lset* L, unsigned n,
                                      uint64_t budget, char** out);
/* Counts for n = 0..K via the exponential generating function
 * prod_{r in L} exp(X^r / r) -- exact, no enumeration. JSON array. */
igp_status igp_cycle_restricted_counts(const igp_lset* L, unsigned K, char** json);

/* Floor formula certificate for n >= 1, r != 0: encloses e^(1/r) r^n n!
 * (+ 1/2 when r < 0), certifies its floor, and compares with a(n, r).
 * JSON: {"n","r","lo","hi","floor","closed","pass","terms"}. */
igp_status igp_verify_floor(unsigned n, long r, char** json);

/* Streaming enumeration in the documented deterministic order: colors
 * ascending lexicographically, permutations lexicographic within a coloring;
 * arrangements iterate subsets by ascending bitmask outermost. Each element
 * is emitted as one JSON line: {"colors":[..],"perm":[..]} for wreath
 * elements, {"subset":[..],"colors":[..],"perm":[..]} for arrangements.
 * The callback's line pointer is valid only during the call. */
typedef void (*igp_emit_fn)(const char* line, void* user);

igp_status igp_stream_wreath_derangements(unsigned n, unsigned r,
                                          uint64_t budget, igp_emit_fn emit,
                                          void* user);
igp_status igp_stream_wreath_arrangements(unsigned n, unsigned r,
                                          uint64_t budget, igp_emit_fn emit,
                                          void* user);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IGP_H */
