#include "pseudorandom.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "error.hpp"
#include "rng.hpp"

namespace ecgraph {

namespace {

void validate_set(const CayleyGraph& g, const std::vector<std::uint64_t>& s,
                  const char* name) {
  std::vector<std::uint8_t> seen(g.order(), 0);
  for (std::uint64_t v : s) {
    if (v >= g.order())
      fail(errc::invalid_argument,
           std::string(name) + " contains vertex " + std::to_string(v) +
               " out of range for n = " + std::to_string(g.order()));
    if (seen[v])
      fail(errc::invalid_argument,
           std::string(name) + " contains vertex " + std::to_string(v) +
               " twice");
    seen[v] = 1;
  }
}

std::uint32_t row_mask32(const CayleyGraph& g, std::uint64_t v) {
  return static_cast<std::uint32_t>(g.row(v).words()[0]);
}

}  // namespace

std::uint64_t edges_between(const CayleyGraph& g,
                            const std::vector<std::uint64_t>& u,
                            const std::vector<std::uint64_t>& w) {
  validate_set(g, u, "U");
  validate_set(g, w, "W");
  Bitset wset(g.order());
  for (std::uint64_t v : w) wset.set(v);
  const std::vector<Bitset::Word>& ww = wset.words();
  std::uint64_t total = 0;
  for (std::uint64_t v : u) {
    const std::vector<Bitset::Word>& rw = g.row(v).words();
    for (std::size_t i = 0; i < ww.size(); ++i)
      total += std::popcount(rw[i] & ww[i]);
  }
  return total;
}

MixingStats mixing_stats(const CayleyGraph& g,
                         const std::vector<std::uint64_t>& u,
                         const std::vector<std::uint64_t>& w) {
  if (u.empty() || w.empty())
    fail(errc::invalid_argument, "U and W must be nonempty");
  MixingStats st;
  st.u_size = u.size();
  st.w_size = w.size();
  st.e_uw = edges_between(g, u, w);
  st.expected = static_cast<double>(g.degree()) *
                static_cast<double>(st.u_size) *
                static_cast<double>(st.w_size) /
                static_cast<double>(g.order());
  st.deviation = std::abs(static_cast<double>(st.e_uw) - st.expected);
  st.normalized = st.deviation / std::sqrt(static_cast<double>(st.u_size) *
                                           static_cast<double>(st.w_size));
  return st;
}

MixingScanResult mixing_scan(const CayleyGraph& g, std::uint64_t samples,
                             std::uint64_t seed) {
  if (samples == 0)
    fail(errc::invalid_argument, "sample count must be at least 1");
  const std::uint64_t n = g.order();
  MixingScanResult out;
  out.lambda = closed_form_spectrum(g.params()).lambda;
  out.ok = true;
  out.samples.reserve(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng = derive_stream(seed, kStreamMixing, i);
    const std::uint64_t su = log_uniform_size(rng, n);
    std::vector<std::uint64_t> u = sample_distinct(rng, n, su);
    const std::uint64_t sw = log_uniform_size(rng, n);
    std::vector<std::uint64_t> w = sample_distinct(rng, n, sw);
    MixingStats st = mixing_stats(g, u, w);
    if (st.normalized > out.lambda) out.ok = false;
    if (out.samples.empty() || st.normalized > out.max_normalized) {
      out.max_normalized = st.normalized;
      out.worst.stats = st;
      std::sort(u.begin(), u.end());
      std::sort(w.begin(), w.end());
      out.worst.u = u;
      out.worst.w = w;
    }
    out.samples.push_back(st);
  }
  return out;
}

JumblednessReport jumbledness_alpha(const CayleyGraph& g, double p,
                                    std::uint64_t samples, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0))
    fail(errc::invalid_argument, "density p must satisfy 0 < p < 1");
  const std::uint64_t n = g.order();
  JumblednessReport report;

  if (n <= kJumblednessExhaustiveCap) {
    report.exhaustive = true;
    std::vector<std::uint32_t> rows(n);
    for (std::uint64_t v = 0; v < n; ++v) rows[v] = row_mask32(g, v);
    std::vector<double> isqrt(n * n + 1, 0.0);
    for (std::uint64_t k = 1; k <= n * n; ++k)
      isqrt[k] = 1.0 / std::sqrt(static_cast<double>(k));
    const std::uint32_t full = static_cast<std::uint32_t>((1ull << n) - 1);
    std::vector<std::uint32_t> e_arr(static_cast<std::size_t>(full) + 1);
    std::vector<std::uint32_t> cnt(n);
    for (std::uint32_t umask = 1; umask <= full; ++umask) {
      const int usz = std::popcount(umask);
      for (std::uint64_t v = 0; v < n; ++v)
        cnt[v] = static_cast<std::uint32_t>(std::popcount(rows[v] & umask));
      e_arr[0] = 0;
      for (std::uint32_t wmask = 1; wmask <= full; ++wmask) {
        e_arr[wmask] =
            e_arr[wmask & (wmask - 1)] + cnt[std::countr_zero(wmask)];
        const int wsz = std::popcount(wmask);
        const double dev = std::abs(static_cast<double>(e_arr[wmask]) -
                                    p * usz * wsz);
        const double norm = dev * isqrt[static_cast<std::uint64_t>(usz) * wsz];
        if (norm > report.alpha) report.alpha = norm;
      }
    }
    return report;
  }

  if (samples == 0)
    fail(errc::invalid_argument, "sample count must be at least 1");
  report.samples = samples;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng = derive_stream(seed, kStreamJumbled, i);
    const std::uint64_t su = log_uniform_size(rng, n);
    std::vector<std::uint64_t> u = sample_distinct(rng, n, su);
    const std::uint64_t sw = log_uniform_size(rng, n);
    std::vector<std::uint64_t> w = sample_distinct(rng, n, sw);
    const double e_uw = static_cast<double>(edges_between(g, u, w));
    const double dev = std::abs(e_uw - p * static_cast<double>(su) *
                                           static_cast<double>(sw));
    const double norm = dev / std::sqrt(static_cast<double>(su) *
                                        static_cast<double>(sw));
    if (norm > report.alpha) report.alpha = norm;
  }
  return report;
}

FamilyTrendReport family_trend(std::uint32_t e,
                               std::vector<std::uint64_t> qs) {
  if (qs.size() < 2)
    fail(errc::invalid_argument, "a trend needs at least two primes");
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end())
    fail(errc::invalid_argument, "primes must be distinct");
  FamilyTrendReport report;
  report.epsilon = (static_cast<double>(e) - 1.0) / 2.0;
  for (std::uint64_t q : qs) {
    TrendInstance inst;
    inst.params = GraphParams::create(q, e);
    inst.lambda = closed_form_spectrum(inst.params).lambda;
    inst.ratio = inst.lambda / std::sqrt(static_cast<double>(inst.params.d));
    inst.edge_probability = static_cast<double>(inst.params.d) /
                            static_cast<double>(inst.params.n);
    report.instances.push_back(inst);
  }
  return report;
}

double cheeger_spectral_lower(const SpectrumReport& report) {
  if (report.eigenvalues.size() < 2)
    fail(errc::invalid_argument, "spectrum must have a non-principal class");
  // Entries are descending, so the second one is lambda_2.
  const double lambda2 = eigenvalue_value(report.eigenvalues[1], report.params);
  return (static_cast<double>(report.params.d) - lambda2) / 2.0;
}

double cheeger_bruteforce(const CayleyGraph& g) {
  const std::uint64_t n = g.order();
  if (n > kCheegerBruteCap)
    fail(errc::cap_exceeded,
         "exhaustive isoperimetric scan capped at n <= " +
             std::to_string(kCheegerBruteCap) + ", requested n = " +
             std::to_string(n));
  std::vector<std::uint32_t> rows(n);
  for (std::uint64_t v = 0; v < n; ++v) rows[v] = row_mask32(g, v);
  const std::uint32_t full = static_cast<std::uint32_t>((1ull << n) - 1);
  double best = static_cast<double>(g.degree());
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint64_t size = static_cast<std::uint64_t>(std::popcount(s));
    if (2 * size > n) continue;
    std::uint64_t cut = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      cut += std::popcount(rows[std::countr_zero(rest)] & (full & ~s));
    }
    const double ratio = static_cast<double>(cut) / static_cast<double>(size);
    if (ratio < best) best = ratio;
  }
  return best;
}

QuasirandomStats quasirandom_stats(const GraphParams& params) {
  const SpectrumReport spec = closed_form_spectrum(params);
  QuasirandomStats st;
  st.edge_count = params.n * params.d / 2;
  // Edge density p = d/n makes p*n equal the degree, which is also the
  // principal eigenvalue, so the first quasi-randomness ratio is exactly 1.
  st.lambda1_over_pn = eigenvalue_value(spec.eigenvalues[0], params) /
                       static_cast<double>(params.d);
  st.lambda2_over_n = eigenvalue_value(spec.eigenvalues[1], params) /
                      static_cast<double>(params.n);
  return st;
}

}  // namespace ecgraph
