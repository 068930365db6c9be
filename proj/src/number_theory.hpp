#pragma once

// Modular arithmetic layer: primality, Legendre/Jacobi symbols, the graph
// parameter block, the multiplicative character of Z_{q^e} as a length-n
// table, the unit squares (the Cayley connection set) and quadratic Gauss
// sums evaluated by direct summation.

#include <complex>
#include <cstdint>
#include <vector>

namespace ecgraph {

// Residue and character tables refuse moduli above this.
inline constexpr std::uint64_t kResidueTableCap = 1ull << 24;

bool is_prime_u64(std::uint64_t m);

// Primes congruent to 1 mod 4.
bool is_pythagorean_prime(std::uint64_t m);

// (a/q) for an odd prime q, via Euler's criterion. a may be negative.
int legendre_symbol(std::int64_t a, std::uint64_t q);

// Jacobi symbol (a/m) for odd m >= 1. a may be negative.
int jacobi_symbol(std::int64_t a, std::uint64_t m);

struct GraphParams {
  std::uint64_t q = 0;  // prime, q = 1 mod 4
  std::uint32_t e = 0;  // odd exponent
  std::uint64_t n = 0;  // q^e
  std::uint64_t d = 0;  // regular degree (q^e - q^(e-1)) / 2

  // Validates q (Pythagorean prime), e (odd, >= 1) and that q^e fits 64 bits.
  static GraphParams create(std::uint64_t q, std::uint32_t e);
};

// chi(x) = (x mod q / q) for odd e; zero exactly on multiples of q.
// Materialized as a length-n table built from a squares-mod-q scan, which
// keeps it an independent route from legendre_symbol's Euler criterion.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(const GraphParams& params);

  const GraphParams& params() const { return params_; }
  int operator()(std::uint64_t x) const { return table_[x % params_.n]; }
  const std::vector<std::int8_t>& table() const { return table_; }

 private:
  GraphParams params_;
  std::vector<std::int8_t> table_;
};

// Q = { u^2 mod n : u a unit of Z_n }, ascending. |Q| = (n - n/q) / 2.
std::vector<std::uint64_t> unit_squares(const GraphParams& params);

// sum_{x in Z_{q^k}} exp(2 pi i b x^2 / q^k) for gcd(b, q) = 1, by direct
// pairwise summation. Equals jacobi(b, q^k) * sqrt(q^k) for q = 1 mod 4.
std::complex<double> gauss_sum(std::uint64_t b, std::uint64_t q, std::uint32_t k);

}  // namespace ecgraph
