#include "ec_check.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>
#include <thread>

#include "error.hpp"

namespace ecgraph {

namespace {

using boost::multiprecision::cpp_int;
using u128 = unsigned __int128;

// Marks A and B membership, rejecting out-of-range vertices, duplicates,
// overlap, and the empty configuration.
std::vector<std::uint8_t> mark_config(const CayleyGraph& g,
                                      const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b) {
  const std::uint64_t n = g.order();
  if (a.empty() && b.empty())
    fail(errc::invalid_argument, "A and B must not both be empty");
  std::vector<std::uint8_t> in_ab(n, 0);
  auto take = [&](const std::vector<std::uint64_t>& side, const char* name) {
    for (std::uint64_t v : side) {
      if (v >= n)
        fail(errc::invalid_argument,
             std::string(name) + " contains vertex " + std::to_string(v) +
                 " out of range for n = " + std::to_string(n));
      if (in_ab[v])
        fail(errc::invalid_argument,
             "vertex " + std::to_string(v) + " appears twice across A and B");
      in_ab[v] = 1;
    }
  };
  take(a, "A");
  take(b, "B");
  return in_ab;
}

std::vector<std::uint8_t> residue_flags(const CayleyGraph& g,
                                        const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) {
  std::vector<std::uint8_t> flags(g.params().q, 0);
  for (std::uint64_t v : a) flags[v % g.params().q] = 1;
  for (std::uint64_t v : b) flags[v % g.params().q] = 1;
  return flags;
}

Bitset candidate_mask(const CayleyGraph& g,
                      const std::vector<std::uint64_t>& a,
                      const std::vector<std::uint64_t>& b) {
  Bitset set(g.order());
  set.set_all();
  for (std::uint64_t v : a) set.and_with(g.row(v));
  for (std::uint64_t v : b) set.andnot_with(g.row(v));
  for (std::uint64_t v : a) set.reset(v);
  for (std::uint64_t v : b) set.reset(v);
  return set;
}

cpp_int pow_cpp(cpp_int base, std::uint64_t exp) {
  cpp_int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

constexpr u128 kBinomSat = ~static_cast<u128>(0) >> 1;

// Exact binomial coefficient, saturating far above any usable rank.
u128 binom_capped(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t factor = n - k + i;
    if (r > kBinomSat / factor) return kBinomSat;
    r = r * factor / i;
  }
  return r;
}

// Lexicographic unranking over increasing index tuples.
std::vector<std::uint64_t> unrank_combination(std::uint64_t rank,
                                              std::uint64_t n,
                                              std::uint64_t t) {
  std::vector<std::uint64_t> c(t);
  std::uint64_t next = 0;
  u128 r = rank;
  for (std::uint64_t i = 0; i < t; ++i) {
    for (std::uint64_t v = next;; ++v) {
      u128 cnt = binom_capped(n - 1 - v, t - 1 - i);
      if (r < cnt) {
        c[i] = v;
        next = v + 1;
        break;
      }
      r -= cnt;
    }
  }
  return c;
}

bool next_combination(std::vector<std::uint64_t>& c, std::uint64_t n) {
  const std::uint64_t t = c.size();
  for (std::uint64_t i = t; i-- > 0;) {
    if (c[i] < n - t + i) {
      ++c[i];
      for (std::uint64_t j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct WorkerResult {
  bool failed = false;
  std::uint64_t fail_rank = ~0ull;
  std::uint64_t fail_mask = 0;
  std::uint64_t witness_min = ~0ull;
};

}  // namespace

std::int64_t extender(const CayleyGraph& g, const std::vector<std::uint64_t>& a,
                      const std::vector<std::uint64_t>& b) {
  mark_config(g, a, b);
  return candidate_mask(g, a, b).find_first();
}

std::vector<std::uint64_t> forbidden_set(const CayleyGraph& g,
                                         const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b) {
  mark_config(g, a, b);
  const std::vector<std::uint8_t> flags = residue_flags(g, a, b);
  std::vector<std::uint64_t> out;
  for (std::uint64_t z = 0; z < g.order(); ++z)
    if (flags[z % g.params().q]) out.push_back(z);
  return out;
}

std::int64_t extender_avoiding_forbidden(const CayleyGraph& g,
                                         const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b) {
  mark_config(g, a, b);
  Bitset set = candidate_mask(g, a, b);
  const std::vector<std::uint8_t> flags = residue_flags(g, a, b);
  for (std::uint64_t r = 0; r < g.params().q; ++r) {
    if (!flags[r]) continue;
    for (std::uint64_t z = r; z < g.order(); z += g.params().q) set.reset(z);
  }
  return set.find_first();
}

CharSumReport char_sums(const CayleyGraph& graph,
                        const std::vector<std::uint64_t>& a,
                        const std::vector<std::uint64_t>& b) {
  const std::vector<std::uint8_t> in_ab = mark_config(graph, a, b);
  const std::uint64_t t = a.size() + b.size();
  if (t > 40)
    fail(errc::invalid_argument,
         "character sums limited to t <= 40, got t = " + std::to_string(t));
  const GraphParams& p = graph.params();
  const QuadraticCharacter& chi = graph.chi();
  const std::vector<std::uint8_t> flags = residue_flags(graph, a, b);

  CharSumReport report;
  report.t = t;
  std::uint64_t distinct = 0;
  for (std::uint8_t fl : flags) distinct += fl;
  report.z_forbidden_size = distinct * (p.n / p.q);
  report.h_upper_bound =
      static_cast<std::int64_t>(t) << (t - 1);

  for (std::uint64_t z = 0; z < p.n; ++z) {
    std::int64_t prod = 1;
    for (std::uint64_t v : a) {
      prod *= 1 + chi(v <= z ? z - v : z + p.n - v);
      if (prod == 0) break;
    }
    if (prod != 0) {
      for (std::uint64_t v : b) {
        prod *= 1 - chi(v <= z ? z - v : z + p.n - v);
        if (prod == 0) break;
      }
    }
    if (prod == 0) continue;
    if (!flags[z % p.q]) {
      report.f += prod;
      report.g += prod;
    } else if (in_ab[z]) {
      report.h += prod;
      report.g += prod;
    }
  }

  const double c1 = static_cast<double>(report.h_upper_bound) -
                    std::ldexp(1.0, static_cast<int>(t)) + 1.0;
  const double t2t = static_cast<double>(t) * std::ldexp(1.0, static_cast<int>(t));
  const double npq = static_cast<double>(p.n / p.q);
  report.g_lower_bound = static_cast<double>(p.n) -
                         c1 * npq * std::sqrt(static_cast<double>(p.q)) -
                         t2t * npq + t2t;
  return report;
}

WeilReport verify_weil_bound(const QuadraticCharacter& chi,
                             const std::vector<std::uint64_t>& points) {
  const GraphParams& p = chi.params();
  if (points.empty())
    fail(errc::invalid_argument, "at least one point is required");
  for (std::uint64_t v : points)
    if (v >= p.n)
      fail(errc::invalid_argument,
           "point " + std::to_string(v) + " out of range for n = " +
               std::to_string(p.n));
  {
    std::vector<std::uint64_t> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(errc::invalid_argument, "points must be distinct");
  }

  WeilReport report;
  report.k = points.size();
  for (std::uint64_t x = 0; x < p.n; ++x) {
    std::int64_t prod = 1;
    for (std::uint64_t v : points) {
      prod *= chi(v <= x ? x - v : x + p.n - v);
      if (prod == 0) break;
    }
    report.sum += prod;
  }
  report.bound = static_cast<double>(report.k - 1) *
                 static_cast<double>(p.n / p.q) *
                 std::sqrt(static_cast<double>(p.q));
  report.ok = std::abs(static_cast<double>(report.sum)) <= report.bound;

  std::vector<std::uint64_t> residues;
  residues.reserve(points.size());
  for (std::uint64_t v : points) residues.push_back(v % p.q);
  std::sort(residues.begin(), residues.end());
  report.reduced_distinct =
      std::adjacent_find(residues.begin(), residues.end()) == residues.end();
  if (report.reduced_distinct) {
    // chi only sees x mod q, so the full sum collapses to n/q copies of the
    // sum over one period.
    std::int64_t period = 0;
    for (std::uint64_t x = 0; x < p.q; ++x) {
      std::int64_t prod = 1;
      for (std::uint64_t r : residues) {
        prod *= chi(r <= x ? x - r : x + p.q - r);
        if (prod == 0) break;
      }
      period += prod;
    }
    report.reduced_sum_scaled = static_cast<std::int64_t>(p.n / p.q) * period;
    report.reduction_ok = report.sum == report.reduced_sum_scaled;
  }
  return report;
}

bool sufficient_condition(std::uint64_t q, std::uint32_t e, std::uint64_t t) {
  if (!is_pythagorean_prime(q))
    fail(errc::invalid_argument,
         "q = " + std::to_string(q) + " is not a prime congruent to 1 mod 4");
  if (e == 0 || e % 2 == 0)
    fail(errc::invalid_argument,
         "e = " + std::to_string(e) + " must be odd and at least 1");
  if (t == 0) fail(errc::invalid_argument, "t must be at least 1");
  const cpp_int two_t = pow_cpp(2, t);
  const cpp_int c1 = cpp_int(t) * (two_t / 2) - two_t + 1;
  const cpp_int l = pow_cpp(q, e) - cpp_int(t) * two_t * pow_cpp(q, e - 1) +
                    cpp_int(t) * (two_t / 2);
  return l > 0 && l * l > c1 * c1 * pow_cpp(q, 2 * static_cast<std::uint64_t>(e) - 1);
}

bool sufficient_condition(const GraphParams& params, std::uint64_t t) {
  return sufficient_condition(params.q, params.e, t);
}

std::uint64_t find_least_q1(std::uint64_t t, std::uint32_t e) {
  if (t == 0) fail(errc::invalid_argument, "t must be at least 1");
  if (e == 0 || e % 2 == 0)
    fail(errc::invalid_argument,
         "e = " + std::to_string(e) + " must be odd and at least 1");
  for (std::uint64_t m = 5; m < (1ull << 40); m += 4) {
    if (is_prime_u64(m) && sufficient_condition(m, e, t)) return m;
  }
  fail(errc::cap_exceeded, "prime search exceeded 2^40");
}

EcCertificate certify_by_sufficient_condition(const GraphParams& params,
                                              std::uint64_t t) {
  EcCertificate cert;
  cert.t = t;
  cert.method = EcMethod::sufficient_condition;
  cert.verified = sufficient_condition(params, t);
  return cert;
}

EcCertificate brute_force_ec(const CayleyGraph& g, std::uint64_t t,
                             const EcOptions& options) {
  const std::uint64_t n = g.order();
  const std::uint64_t q = g.params().q;
  if (t == 0 || t >= n)
    fail(errc::invalid_argument,
         "t = " + std::to_string(t) + " must satisfy 1 <= t <= n - 1");
  if (options.distinct_residues && t >= q)
    fail(errc::invalid_argument,
         "t = " + std::to_string(t) + " must be smaller than q = " +
             std::to_string(q) + " when restricting to distinct residues");

  const cpp_int subsets = [&] {
    cpp_int r = 1;
    for (std::uint64_t i = 1; i <= t; ++i) r = r * (n - t + i) / i;
    return r;
  }();
  const std::uint64_t words = (n + 63) / 64;
  const cpp_int cost = subsets * pow_cpp(2, t) * words;
  if (cost > options.budget && !options.force)
    fail(errc::budget_exceeded,
         "estimated cost " + cost.str() + " words exceeds budget " +
             std::to_string(options.budget) + "; pass force to run anyway");
  if (subsets > std::numeric_limits<std::uint64_t>::max())
    fail(errc::budget_exceeded,
         "subset count " + subsets.str() + " exceeds 64-bit rank arithmetic");
  const std::uint64_t total_ranks = static_cast<std::uint64_t>(subsets);

  EcCertificate cert;
  cert.t = t;
  cert.method = EcMethod::exhaustive;
  cert.distinct_residues = options.distinct_residues;
  {
    const cpp_int space = subsets * pow_cpp(2, t);
    cert.search_space = space > std::numeric_limits<std::uint64_t>::max()
                            ? std::numeric_limits<std::uint64_t>::max()
                            : static_cast<std::uint64_t>(space);
  }

  unsigned workers = options.threads;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(
      {workers, total_ranks, 1024}));

  Bitset all(n);
  all.set_all();
  const Bitset::Word* ones = all.words().data();
  const std::uint64_t mask_count = 1ull << t;

  // Shared watermark of the smallest failing rank found so far; workers use
  // it only to stop scanning ranks that can no longer improve the result.
  std::atomic<std::uint64_t> global_fail{~0ull};
  std::vector<WorkerResult> results(workers);

  auto run_worker = [&](unsigned w) {
    const std::uint64_t lo = static_cast<std::uint64_t>(
        static_cast<u128>(total_ranks) * w / workers);
    const std::uint64_t hi = static_cast<std::uint64_t>(
        static_cast<u128>(total_ranks) * (w + 1) / workers);
    if (lo >= hi) return;
    WorkerResult& res = results[w];
    std::vector<std::uint64_t> subset = unrank_combination(lo, n, t);
    std::vector<const Bitset::Word*> rows(t);
    Bitset exclude(n);

    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      if (((rank - lo) & 1023) == 0 &&
          global_fail.load(std::memory_order_relaxed) < rank)
        break;
      if (options.distinct_residues) {
        bool collide = false;
        for (std::uint64_t i = 1; i < t && !collide; ++i)
          for (std::uint64_t j = 0; j < i; ++j)
            if (subset[i] % q == subset[j] % q) {
              collide = true;
              break;
            }
        if (collide) {
          next_combination(subset, n);
          continue;
        }
      }
      for (std::uint64_t i = 0; i < t; ++i)
        rows[i] = g.row(subset[i]).words().data();
      exclude.reset_all();
      for (std::uint64_t i = 0; i < t; ++i) exclude.set(subset[i]);
      const Bitset::Word* excl = exclude.words().data();

      bool rank_failed = false;
      for (std::uint64_t mask = 0; mask < mask_count; ++mask) {
        std::uint64_t witnesses = 0;
        for (std::uint64_t wd = 0; wd < words; ++wd) {
          Bitset::Word x = ones[wd];
          for (std::uint64_t i = 0; i < t; ++i)
            x = (mask >> i & 1) ? (x & rows[i][wd]) : (x & ~rows[i][wd]);
          x &= ~excl[wd];
          witnesses += std::popcount(x);
        }
        if (witnesses == 0) {
          res.failed = true;
          res.fail_rank = rank;
          res.fail_mask = mask;
          std::uint64_t cur = global_fail.load(std::memory_order_relaxed);
          while (cur > rank && !global_fail.compare_exchange_weak(
                                   cur, rank, std::memory_order_relaxed)) {
          }
          rank_failed = true;
          break;
        }
        res.witness_min = std::min(res.witness_min, witnesses);
      }
      if (rank_failed) break;
      next_combination(subset, n);
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(run_worker, w);
    for (std::thread& th : pool) th.join();
  }

  const WorkerResult* best = nullptr;
  for (const WorkerResult& res : results) {
    if (!res.failed) continue;
    if (best == nullptr || res.fail_rank < best->fail_rank) best = &res;
  }
  if (best != nullptr) {
    cert.verified = false;
    std::vector<std::uint64_t> subset = unrank_combination(best->fail_rank, n, t);
    EcCounterexample cex;
    for (std::uint64_t i = 0; i < t; ++i) {
      if (best->fail_mask >> i & 1)
        cex.a.push_back(subset[i]);
      else
        cex.b.push_back(subset[i]);
    }
    cert.counterexample = std::move(cex);
  } else {
    cert.verified = true;
    std::uint64_t wmin = ~0ull;
    for (const WorkerResult& res : results)
      wmin = std::min(wmin, res.witness_min);
    cert.witness_count_min = wmin;
  }
  return cert;
}

}  // namespace ecgraph
