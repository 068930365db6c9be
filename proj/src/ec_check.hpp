#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cayley.hpp"

namespace ecgraph {

// Default ceiling on exhaustive search cost, measured in bitset words
// touched: C(n,t) * 2^t * words(n).
inline constexpr std::uint64_t kDefaultEcBudget = 1000000000000ull;

struct EcOptions {
  unsigned threads = 0;  // 0 means hardware concurrency
  std::uint64_t budget = kDefaultEcBudget;
  bool force = false;  // run even when the cost estimate exceeds the budget
  // Restrict the scan to configurations whose vertices have pairwise
  // distinct residues mod q.  This is the form of the property the spectral
  // sufficient condition certifies when e > 1: vertices sharing a residue
  // mod q have identical neighborhoods, so the unrestricted property fails
  // trivially for every e >= 3 and t >= 2 (A = {0}, B = {q} has no
  // extender).  For e = 1 the two forms coincide.
  bool distinct_residues = false;
};

enum class EcMethod { exhaustive, sufficient_condition };

struct EcCounterexample {
  std::vector<std::uint64_t> a;
  std::vector<std::uint64_t> b;
};

struct EcCertificate {
  std::uint64_t t = 0;
  bool verified = false;
  EcMethod method = EcMethod::exhaustive;
  // First (in lexicographic subset order, then orientation-mask order)
  // pair (A, B) with no extender; present iff refuted exhaustively.
  std::optional<EcCounterexample> counterexample;
  // Minimum number of extenders over all configurations; present iff
  // verified exhaustively.
  std::optional<std::uint64_t> witness_count_min;
  std::uint64_t search_space = 0;  // configurations examined (saturating)
  // True when the scan was restricted to residue-distinct configurations.
  bool distinct_residues = false;
};

// A vertex z outside A and B adjacent to everything in A and nothing in B,
// or -1 when none exists.  A and B must be disjoint, in range, and not both
// empty.
std::int64_t extender(const CayleyGraph& g,
                      const std::vector<std::uint64_t>& a,
                      const std::vector<std::uint64_t>& b);

// Vertices whose residue mod q collides with some element of A or B.  The
// character vanishes at differences against such z, which the character-sum
// machinery must exclude.
std::vector<std::uint64_t> forbidden_set(const CayleyGraph& g,
                                         const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b);

// Extender search restricted to vertices outside the forbidden set.
std::int64_t extender_avoiding_forbidden(const CayleyGraph& g,
                                         const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b);

struct CharSumReport {
  std::int64_t f = 0;  // sum over z outside the forbidden set
  std::int64_t g = 0;  // sum over z outside (forbidden set minus A and B)
  std::int64_t h = 0;  // sum over z in A union B; f = g - h
  std::uint64_t t = 0;
  std::uint64_t z_forbidden_size = 0;
  std::int64_t h_upper_bound = 0;   // t * 2^(t-1)
  double g_lower_bound = 0.0;       // n - c1*(n/q)*sqrt(q) - t*2^t*(n/q) + t*2^t
};

// Inclusion-exclusion counting sums: each z outside the forbidden set
// contributes prod(1 + chi(z-a)) * prod(1 - chi(z-b)), which is 2^t exactly
// when z extends the configuration and 0 otherwise.  f > 0 therefore holds
// iff an extender exists outside the forbidden set.
CharSumReport char_sums(const CayleyGraph& graph,
                        const std::vector<std::uint64_t>& a,
                        const std::vector<std::uint64_t>& b);

struct WeilReport {
  std::int64_t sum = 0;
  double bound = 0.0;  // (k-1) * (n/q) * sqrt(q)
  bool ok = false;
  std::uint64_t k = 0;
  // The bound needs the points to stay distinct after reduction mod q.
  bool reduced_distinct = false;
  // When they do, the sum over Z_n equals n/q times the sum over Z_q.
  std::int64_t reduced_sum_scaled = 0;
  bool reduction_ok = true;
};

// Complete character sum sum_x prod_i chi(x - points[i]) against the
// square-root cancellation bound.
WeilReport verify_weil_bound(const QuadraticCharacter& chi,
                             const std::vector<std::uint64_t>& points);

// Exact integer form of the spectral sufficient condition for the t-e.c.
// property: with c1 = t*2^(t-1) - 2^t + 1 and
// L = q^e - t*2^t*q^(e-1) + t*2^(t-1), holds iff L > 0 and
// L^2 > c1^2 * q^(2e-1).
bool sufficient_condition(std::uint64_t q, std::uint32_t e, std::uint64_t t);
bool sufficient_condition(const GraphParams& params, std::uint64_t t);

// Least prime q = 1 (mod 4) whose graph with exponent e the sufficient
// condition certifies as t-e.c.
std::uint64_t find_least_q1(std::uint64_t t, std::uint32_t e);

EcCertificate certify_by_sufficient_condition(const GraphParams& params,
                                              std::uint64_t t);

// Exhaustive t-e.c. check over every t-subset and every orientation of it
// into (A, B).  Deterministic for any thread count: reports the
// lexicographically first counterexample, or the exact minimum witness
// count when verified.
EcCertificate brute_force_ec(const CayleyGraph& g, std::uint64_t t,
                             const EcOptions& options = {});

}  // namespace ecgraph
