#include "number_theory.hpp"

#include <bit>
#include <numbers>
#include <string>

#include "error.hpp"
#include "summation.hpp"

namespace ecgraph {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Strong-probable-prime test for one base.
bool sprp(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::uint64_t normalize_mod(std::int64_t a, std::uint64_t m) {
  std::int64_t r = a % static_cast<std::int64_t>(m);
  if (r < 0) r += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp,
                              const char* what) {
  unsigned __int128 r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > ~static_cast<std::uint64_t>(0))
      fail(errc::invalid_argument, std::string(what) + " overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

bool is_prime_u64(std::uint64_t m) {
  // Deterministic Miller-Rabin below 2^64 with the first twelve primes
  // as witnesses.
  static constexpr std::uint64_t kSmall[] = {2,  3,  5,  7,  11, 13,
                                             17, 19, 23, 29, 31, 37};
  if (m < 2) return false;
  for (std::uint64_t p : kSmall) {
    if (m % p == 0) return m == p;
  }
  std::uint64_t d = m - 1;
  int r = std::countr_zero(d);
  d >>= r;
  for (std::uint64_t a : kSmall) {
    if (!sprp(m, a, d, r)) return false;
  }
  return true;
}

bool is_pythagorean_prime(std::uint64_t m) {
  return m % 4 == 1 && is_prime_u64(m);
}

int legendre_symbol(std::int64_t a, std::uint64_t q) {
  if (q < 3 || q % 2 == 0 || !is_prime_u64(q))
    fail(errc::invalid_argument,
         "legendre_symbol: modulus " + std::to_string(q) + " is not an odd prime");
  std::uint64_t r = normalize_mod(a, q);
  if (r == 0) return 0;
  std::uint64_t t = powmod(r, (q - 1) / 2, q);
  return t == 1 ? 1 : -1;
}

int jacobi_symbol(std::int64_t a, std::uint64_t m) {
  if (m == 0 || m % 2 == 0)
    fail(errc::invalid_argument,
         "jacobi_symbol: modulus " + std::to_string(m) + " must be odd and positive");
  std::uint64_t x = normalize_mod(a, m);
  std::uint64_t n = m;
  int s = 1;
  while (x != 0) {
    int z = std::countr_zero(x);
    x >>= z;
    if (z & 1) {
      std::uint64_t r = n % 8;
      if (r == 3 || r == 5) s = -s;
    }
    if (x % 4 == 3 && n % 4 == 3) s = -s;
    std::swap(x, n);
    x %= n;
  }
  return n == 1 ? s : 0;
}

GraphParams GraphParams::create(std::uint64_t q, std::uint32_t e) {
  if (!is_pythagorean_prime(q))
    fail(errc::invalid_argument,
         "q = " + std::to_string(q) + " is not a prime congruent to 1 mod 4");
  if (e == 0 || e % 2 == 0)
    fail(errc::invalid_argument,
         "e = " + std::to_string(e) + " must be odd and at least 1");
  GraphParams p;
  p.q = q;
  p.e = e;
  p.n = checked_pow_u64(q, e, "q^e");
  p.d = (p.n - p.n / q) / 2;
  return p;
}

QuadraticCharacter::QuadraticCharacter(const GraphParams& params)
    : params_(params) {
  if (params_.n > kResidueTableCap)
    fail(errc::cap_exceeded,
         "character table capped at n <= " + std::to_string(kResidueTableCap) +
             ", requested n = " + std::to_string(params_.n));
  // Squares-mod-q scan; independent of Euler's criterion on purpose.
  std::vector<std::int8_t> lut(params_.q, -1);
  lut[0] = 0;
  for (std::uint64_t u = 1; u < params_.q; ++u) lut[u * u % params_.q] = 1;
  table_.resize(params_.n);
  for (std::uint64_t x = 0; x < params_.n; ++x)
    table_[x] = lut[x % params_.q];
}

std::vector<std::uint64_t> unit_squares(const GraphParams& params) {
  if (params.n > kResidueTableCap)
    fail(errc::cap_exceeded,
         "unit square table capped at n <= " + std::to_string(kResidueTableCap) +
             ", requested n = " + std::to_string(params.n));
  std::vector<std::uint8_t> mark(params.n, 0);
  for (std::uint64_t u = 1; u < params.n; ++u) {
    if (u % params.q == 0) continue;
    mark[static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(u) * u % params.n)] = 1;
  }
  std::vector<std::uint64_t> out;
  out.reserve(params.d);
  for (std::uint64_t x = 0; x < params.n; ++x)
    if (mark[x]) out.push_back(x);
  return out;
}

std::complex<double> gauss_sum(std::uint64_t b, std::uint64_t q, std::uint32_t k) {
  if (!is_pythagorean_prime(q))
    fail(errc::invalid_argument,
         "gauss_sum: q = " + std::to_string(q) + " is not a prime congruent to 1 mod 4");
  if (k == 0) fail(errc::invalid_argument, "gauss_sum: k must be at least 1");
  std::uint64_t m = checked_pow_u64(q, k, "q^k");
  if (m > kResidueTableCap)
    fail(errc::cap_exceeded,
         "gauss_sum: direct summation capped at q^k <= " +
             std::to_string(kResidueTableCap) + ", requested " + std::to_string(m));
  b %= m;
  if (b % q == 0)
    fail(errc::invalid_argument, "gauss_sum: b must be coprime to q");
  const double tau = 2.0 * std::numbers::pi / static_cast<double>(m);
  return pairwise_sum(0, m, [&](std::uint64_t x) {
    std::uint64_t x2 = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(x) * x % m);
    std::uint64_t r = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(b) * x2 % m);
    return std::polar(1.0, tau * static_cast<double>(r));
  });
}

}  // namespace ecgraph
