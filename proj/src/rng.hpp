#pragma once

// Deterministic sampling primitives. The generator is the splitmix64
// finalizer over a Weyl sequence; bounded draws use the 128-bit multiply
// trick. Every randomized scan derives one stream per sample index from
// (seed, purpose tag, index), so results do not depend on evaluation order
// or worker count and are reproducible across platforms.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace ecgraph {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t state) : s_(state) {}

  std::uint64_t next() {
    s_ += kGolden;
    return splitmix_mix(s_);
  }

  // Uniform in [0, m), m >= 1.
  std::uint64_t bounded(std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * m) >> 64);
  }

  // Uniform in [0, 1) with 53 random bits.
  double unit_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t s_;
};

// Purpose tags keeping independent scans on disjoint streams.
inline constexpr std::uint64_t kStreamCharSums = 1;
inline constexpr std::uint64_t kStreamWeil = 2;
inline constexpr std::uint64_t kStreamMixing = 3;
inline constexpr std::uint64_t kStreamJumbled = 4;

inline Rng derive_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t idx) {
  std::uint64_t s = splitmix_mix(seed + kGolden * (tag + 1));
  s = splitmix_mix(s + kGolden * (idx + 1));
  return Rng(s);
}

// First t entries of a uniform random permutation of [0, n), in draw order
// (partial Fisher-Yates).
inline std::vector<std::uint64_t> sample_distinct(Rng& rng, std::uint64_t n,
                                                  std::uint64_t t) {
  std::vector<std::uint64_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::uint64_t(0));
  for (std::uint64_t j = 0; j < t; ++j) {
    std::uint64_t r = j + rng.bounded(n - j);
    std::swap(idx[j], idx[r]);
  }
  idx.resize(t);
  return idx;
}

// Set size log-uniform over [1, n].
inline std::uint64_t log_uniform_size(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 1;
  double u = rng.unit_real() * std::log(static_cast<double>(n));
  auto s = static_cast<std::uint64_t>(std::exp(u));
  if (s < 1) s = 1;
  if (s > n) s = n;
  return s;
}

}  // namespace ecgraph
