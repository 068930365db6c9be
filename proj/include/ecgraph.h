/*
 * ecgraph - quadratic unitary Cayley graphs over Z_{q^e} and their
 * adjacency properties.
 *
 * The library builds the circulant graph on Z_{q^e} (q prime, q = 1 mod 4,
 * e odd) whose connection set is the squares of units, certifies the
 * t-existentially-closed adjacency property both exhaustively and through
 * an exact spectral sufficient condition, produces the closed-form
 * spectrum, and measures pseudo-randomness (mixing, bi-jumbledness,
 * isoperimetry, quasi-random statistics).
 *
 * Conventions:
 *   - Every fallible call returns an ecg_status; ECG_OK is zero.
 *   - On failure, ecg_last_error() gives a thread-local human-readable
 *     message describing the most recent failure on this thread.
 *   - Objects returned through ecg_*_build / ecg_*_closed_form are owned
 *     by the caller and released with the matching ecg_*_free.
 *   - All functions are safe to call from multiple threads as long as a
 *     given object is not mutated concurrently; graphs, spectra, and
 *     certificates are immutable after construction.
 */

#ifndef ECGRAPH_H
#define ECGRAPH_H

#include <stddef.h>
#include <stdint.h>

#ifndef ECGRAPH_API
#if defined(_WIN32)
#define ECGRAPH_API __declspec(dllexport)
#else
#define ECGRAPH_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ecg_status {
  ECG_OK = 0,
  ECG_ERR_INVALID_ARGUMENT = 1,
  ECG_ERR_BUDGET_EXCEEDED = 2,
  ECG_ERR_CAP_EXCEEDED = 3,
  ECG_ERR_IO = 4,
  ECG_ERR_INTERNAL = 5
} ecg_status;

/* Static description of a status code. */
ECGRAPH_API const char* ecg_status_message(ecg_status status);

/* Detail message for the most recent failure on the calling thread. */
ECGRAPH_API const char* ecg_last_error(void);

typedef struct ecg_graph ecg_graph;
typedef struct ecg_spectrum ecg_spectrum;
typedef struct ecg_certificate ecg_certificate;

typedef struct ecg_params {
  uint64_t q; /* prime, q = 1 (mod 4) */
  uint32_t e; /* odd exponent */
  uint64_t n; /* q^e */
  uint64_t d; /* degree, (n - n/q) / 2 */
} ecg_params;

/* Validates (q, e) and fills the derived sizes without building a graph. */
ECGRAPH_API ecg_status ecg_params_create(uint64_t q, uint32_t e,
                                         ecg_params* out);

/* ---- graph construction and queries ---------------------------------- */

ECGRAPH_API ecg_status ecg_graph_build(uint64_t q, uint32_t e,
                                       ecg_graph** out);
ECGRAPH_API void ecg_graph_free(ecg_graph* g);

ECGRAPH_API ecg_status ecg_graph_params(const ecg_graph* g, ecg_params* out);
ECGRAPH_API uint64_t ecg_graph_order(const ecg_graph* g);
ECGRAPH_API uint64_t ecg_graph_degree(const ecg_graph* g);
ECGRAPH_API uint64_t ecg_graph_edge_count(const ecg_graph* g);

/* *out is 1 when x ~ y, 0 otherwise. */
ECGRAPH_API ecg_status ecg_graph_is_adjacent(const ecg_graph* g, uint64_t x,
                                             uint64_t y, int* out);

/* Quadratic character of x: +1 / -1 / 0. */
ECGRAPH_API ecg_status ecg_graph_character(const ecg_graph* g, uint64_t x,
                                           int* out);

ECGRAPH_API uint64_t ecg_graph_connection_set_size(const ecg_graph* g);
/* Fills buf (ascending) with the connection set; buf_len must be at least
 * the connection set size. */
ECGRAPH_API ecg_status ecg_graph_connection_set(const ecg_graph* g,
                                                uint64_t* buf, size_t buf_len);

/* Structural sanity flags; each out pointer may be NULL to skip it. */
ECGRAPH_API ecg_status ecg_graph_validate(const ecg_graph* g, int* regular,
                                          int* symmetric, int* loop_free);

/* Writes "n m" then one "u v" line per edge, u < v, lexicographic order. */
ECGRAPH_API ecg_status ecg_graph_export_edge_list(const ecg_graph* g,
                                                  const char* path);

/* ---- adjacency property ------------------------------------------------ */

/* Vertex adjacent to everything in A and nothing in B, outside both, or -1
 * when none exists.  A and B must be disjoint and not both empty. */
ECGRAPH_API ecg_status ecg_extender(const ecg_graph* g, const uint64_t* a,
                                    size_t a_len, const uint64_t* b,
                                    size_t b_len, int64_t* out);

/* Same search restricted to vertices whose residue mod q avoids every
 * residue appearing in A or B. */
ECGRAPH_API ecg_status ecg_extender_avoiding_forbidden(
    const ecg_graph* g, const uint64_t* a, size_t a_len, const uint64_t* b,
    size_t b_len, int64_t* out);

/* Number of vertices whose residue mod q collides with A or B. */
ECGRAPH_API ecg_status ecg_forbidden_set_size(const ecg_graph* g,
                                              const uint64_t* a, size_t a_len,
                                              const uint64_t* b, size_t b_len,
                                              uint64_t* out);

typedef struct ecg_char_sums_report {
  int64_t f; /* sum over z outside the forbidden set; > 0 iff an extender
              * exists there */
  int64_t g; /* f plus the A-union-B boundary term h */
  int64_t h;
  uint64_t t;
  uint64_t z_forbidden_size;
  int64_t h_upper_bound;  /* t * 2^(t-1) */
  double g_lower_bound;   /* spectral lower bound on g */
} ecg_char_sums_report;

ECGRAPH_API ecg_status ecg_char_sums(const ecg_graph* g, const uint64_t* a,
                                     size_t a_len, const uint64_t* b,
                                     size_t b_len,
                                     ecg_char_sums_report* out);

typedef struct ecg_weil_report {
  int64_t sum;  /* sum over x of prod_i chi(x - points[i]) */
  double bound; /* (k - 1) * (n/q) * sqrt(q) */
  int ok;
  uint64_t k;
  int reduced_distinct;       /* points stay distinct mod q */
  int64_t reduced_sum_scaled; /* n/q times the one-period sum */
  int reduction_ok;
} ecg_weil_report;

/* Checks the square-root cancellation bound for the complete character sum
 * over distinct points.  The bound can fail when points collide mod q;
 * reduced_distinct reports whether the hypothesis held. */
ECGRAPH_API ecg_status ecg_verify_weil_bound(const ecg_graph* g,
                                             const uint64_t* points, size_t k,
                                             ecg_weil_report* out);

/* Exact integer sufficient condition for the t-e.c. property. */
ECGRAPH_API ecg_status ecg_sufficient_condition(uint64_t q, uint32_t e,
                                                uint64_t t, int* out);

/* Least prime q = 1 (mod 4) the sufficient condition certifies for (t, e). */
ECGRAPH_API ecg_status ecg_find_least_q1(uint64_t t, uint32_t e,
                                         uint64_t* out);

#define ECG_METHOD_EXHAUSTIVE 0
#define ECG_METHOD_SUFFICIENT_CONDITION 1

typedef struct ecg_ec_options {
  unsigned threads; /* 0 = hardware concurrency */
  uint64_t budget;  /* cost cap in bitset words; 0 = default */
  int force;        /* run even when the estimate exceeds the budget */
  /* Restrict the scan to configurations with pairwise distinct residues
   * mod q: the form of the property the spectral sufficient condition
   * certifies when e > 1.  Vertices sharing a residue mod q have identical
   * neighborhoods, so the unrestricted property fails trivially for every
   * e >= 3 and t >= 2.  No effect for e = 1. */
  int distinct_residues;
} ecg_ec_options;

/* Exhaustive t-e.c. check; deterministic for any thread count.  options may
 * be NULL for defaults. */
ECGRAPH_API ecg_status ecg_brute_force_ec(const ecg_graph* g, uint64_t t,
                                          const ecg_ec_options* options,
                                          ecg_certificate** out);

/* Certificate from the sufficient condition alone (never a refutation:
 * verified = 0 only means not established). */
ECGRAPH_API ecg_status ecg_certify_sufficient(uint64_t q, uint32_t e,
                                              uint64_t t,
                                              ecg_certificate** out);

ECGRAPH_API void ecg_certificate_free(ecg_certificate* cert);
ECGRAPH_API int ecg_certificate_verified(const ecg_certificate* cert);
ECGRAPH_API int ecg_certificate_method(const ecg_certificate* cert);
ECGRAPH_API uint64_t ecg_certificate_t(const ecg_certificate* cert);
ECGRAPH_API uint64_t ecg_certificate_search_space(const ecg_certificate* cert);
/* 1 when the scan was restricted to residue-distinct configurations. */
ECGRAPH_API int ecg_certificate_distinct_residues(const ecg_certificate* cert);
ECGRAPH_API int ecg_certificate_has_witness_min(const ecg_certificate* cert);
ECGRAPH_API uint64_t ecg_certificate_witness_min(const ecg_certificate* cert);
ECGRAPH_API int ecg_certificate_has_counterexample(const ecg_certificate* cert);
ECGRAPH_API ecg_status ecg_certificate_counterexample_sizes(
    const ecg_certificate* cert, size_t* a_len, size_t* b_len);
ECGRAPH_API ecg_status ecg_certificate_counterexample(
    const ecg_certificate* cert, uint64_t* a_buf, size_t a_len,
    uint64_t* b_buf, size_t b_len);

/* ---- spectrum ---------------------------------------------------------- */

/* Closed-form spectrum; eigenvalue classes are (a + b*sqrt(q)) / 2 with
 * exact integer a, b, ordered by descending value. */
ECGRAPH_API ecg_status ecg_spectrum_closed_form(uint64_t q, uint32_t e,
                                                ecg_spectrum** out);
ECGRAPH_API void ecg_spectrum_free(ecg_spectrum* spec);

ECGRAPH_API uint64_t ecg_spectrum_class_count(const ecg_spectrum* spec);
ECGRAPH_API ecg_status ecg_spectrum_entry(const ecg_spectrum* spec,
                                          uint64_t index, int64_t* a_coeff,
                                          int64_t* b_coeff,
                                          uint64_t* multiplicity,
                                          double* value);
/* Largest absolute non-principal eigenvalue. */
ECGRAPH_API double ecg_spectrum_lambda(const ecg_spectrum* spec);
/* 1 when the exact moment identities hold. */
ECGRAPH_API int ecg_spectrum_check_identities(const ecg_spectrum* spec);

/* Eigenvalue class of one Fourier frequency. */
ECGRAPH_API ecg_status ecg_eigenvalue_for_frequency(uint64_t q, uint32_t e,
                                                    uint64_t frequency,
                                                    int64_t* a_coeff,
                                                    int64_t* b_coeff,
                                                    uint64_t* multiplicity);

/* Same eigenvalue through the exponential sum over the connection set. */
ECGRAPH_API ecg_status ecg_character_sum_eigenvalue(uint64_t q, uint32_t e,
                                                    uint64_t frequency,
                                                    double* value,
                                                    double* imag_abs);

/* Dense symmetric eigensolve, descending into buf (buf_len >= n).
 * max_order = 0 uses the default size cap. */
ECGRAPH_API ecg_status ecg_numerical_spectrum(const ecg_graph* g,
                                              uint64_t max_order, double* buf,
                                              size_t buf_len);

/* Gauss sum over Z_{q^k} for b coprime to q; writes the real and imaginary
 * parts.  For q = 1 (mod 4) the value is jacobi(b, q^k) * sqrt(q^k). */
ECGRAPH_API ecg_status ecg_gauss_sum(uint64_t b, uint64_t q, uint32_t k,
                                     double* real_part, double* imag_part);

ECGRAPH_API ecg_status ecg_jacobi_symbol(int64_t a, uint64_t m, int* out);

/* ---- pseudo-randomness ------------------------------------------------- */

/* Ordered edge count e(U, W). */
ECGRAPH_API ecg_status ecg_edges_between(const ecg_graph* g,
                                         const uint64_t* u, size_t u_len,
                                         const uint64_t* w, size_t w_len,
                                         uint64_t* out);

typedef struct ecg_mixing_result {
  uint64_t samples;
  double max_normalized; /* worst |e - expected| / sqrt(|U||W|) */
  double lambda;
  int ok; /* every sample satisfied the mixing bound */
  uint64_t worst_u_size;
  uint64_t worst_w_size;
  uint64_t worst_edges;
  double worst_expected;
} ecg_mixing_result;

ECGRAPH_API ecg_status ecg_mixing_scan(const ecg_graph* g, uint64_t samples,
                                       uint64_t seed, ecg_mixing_result* out);

/* Bi-jumbledness coefficient at density p; exhaustive when n <= 16
 * (exhaustive is then set to 1 and samples is ignored). */
ECGRAPH_API ecg_status ecg_jumbledness_alpha(const ecg_graph* g, double p,
                                             uint64_t samples, uint64_t seed,
                                             double* alpha, int* exhaustive);

/* Spectral lower bound (d - lambda_2) / 2 on the isoperimetric constant. */
ECGRAPH_API ecg_status ecg_cheeger_spectral_lower(uint64_t q, uint32_t e,
                                                  double* out);

/* Exact isoperimetric constant by subset enumeration (n <= 20). */
ECGRAPH_API ecg_status ecg_cheeger_bruteforce(const ecg_graph* g,
                                              double* out);

typedef struct ecg_quasirandom {
  uint64_t edge_count;
  double lambda1_over_pn;
  double lambda2_over_n;
} ecg_quasirandom;

ECGRAPH_API ecg_status ecg_quasirandom_stats(uint64_t q, uint32_t e,
                                             ecg_quasirandom* out);

/* lambda / sqrt(d) across a fixed-exponent family.  qs are the primes;
 * each output array (may be NULL to skip) receives q_count entries in
 * ascending-q order; epsilon receives (e - 1) / 2. */
ECGRAPH_API ecg_status ecg_family_trend(uint32_t e, const uint64_t* qs,
                                        size_t q_count, uint64_t* orders,
                                        uint64_t* degrees, double* lambdas,
                                        double* ratios, double* edge_probs,
                                        double* epsilon);

#ifdef __cplusplus
}
#endif

#endif /* ECGRAPH_H */
