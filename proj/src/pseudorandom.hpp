#pragma once

#include <cstdint>
#include <vector>

#include "cayley.hpp"
#include "spectrum.hpp"

namespace ecgraph {

inline constexpr std::uint64_t kCheegerBruteCap = 20;
inline constexpr std::uint64_t kJumblednessExhaustiveCap = 16;

// Ordered edge count e(U, W) = #{(u, w) in U x W : u ~ w}; overlapping sets
// are fine, pairs inside the overlap count once per orientation.
std::uint64_t edges_between(const CayleyGraph& g,
                            const std::vector<std::uint64_t>& u,
                            const std::vector<std::uint64_t>& w);

struct MixingStats {
  std::uint64_t u_size = 0;
  std::uint64_t w_size = 0;
  std::uint64_t e_uw = 0;
  double expected = 0.0;    // d * |U| * |W| / n
  double deviation = 0.0;   // |e(U, W) - expected|
  double normalized = 0.0;  // deviation / sqrt(|U| * |W|), compare to lambda
};

MixingStats mixing_stats(const CayleyGraph& g,
                         const std::vector<std::uint64_t>& u,
                         const std::vector<std::uint64_t>& w);

struct MixingWorst {
  MixingStats stats;
  std::vector<std::uint64_t> u;  // sorted
  std::vector<std::uint64_t> w;  // sorted
};

struct MixingScanResult {
  std::vector<MixingStats> samples;
  MixingWorst worst;
  double max_normalized = 0.0;
  double lambda = 0.0;
  bool ok = false;  // every sample satisfied normalized <= lambda
};

// Random vertex-set pairs with log-uniform sizes; checks the spectral
// mixing bound on each.  Deterministic in (seed, sample count).
MixingScanResult mixing_scan(const CayleyGraph& g, std::uint64_t samples,
                             std::uint64_t seed);

struct JumblednessReport {
  double alpha = 0.0;  // max |e(U,W) - p|U||W|| / sqrt(|U||W|)
  bool exhaustive = false;
  std::uint64_t samples = 0;  // sampled pairs when not exhaustive
};

// Smallest bi-jumbledness coefficient consistent with the observed pairs:
// exhaustive over all nonempty set pairs for n <= 16, sampled otherwise.
JumblednessReport jumbledness_alpha(const CayleyGraph& g, double p,
                                    std::uint64_t samples, std::uint64_t seed);

struct TrendInstance {
  GraphParams params;
  double lambda = 0.0;
  double ratio = 0.0;  // lambda / sqrt(d); O(1) for genuinely random-like graphs
  double edge_probability = 0.0;  // d / n = (q - 1) / (2q)
};

struct FamilyTrendReport {
  std::vector<TrendInstance> instances;  // ascending q
  double epsilon = 0.0;                  // (e - 1) / 2
};

// lambda / sqrt(d) across a fixed-exponent family, ordered by q.  For e = 1
// the ratio stays bounded; for e >= 3 it grows like q^((e-1)/2).
FamilyTrendReport family_trend(std::uint32_t e,
                               std::vector<std::uint64_t> qs);

// h(G) >= (d - lambda_2) / 2 from the spectral gap.
double cheeger_spectral_lower(const SpectrumReport& report);

// Exact isoperimetric constant min over S, 0 < |S| <= n/2, of cut(S)/|S|.
double cheeger_bruteforce(const CayleyGraph& g);

struct QuasirandomStats {
  std::uint64_t edge_count = 0;       // n * d / 2
  double lambda1_over_pn = 0.0;       // p * n equals d exactly, so this is 1
  double lambda2_over_n = 0.0;        // second largest eigenvalue over n
};

QuasirandomStats quasirandom_stats(const GraphParams& params);

}  // namespace ecgraph
