#include "spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"
#include "summation.hpp"

namespace ecgraph {

double eigenvalue_value(const ExactEigenvalue& ev, const GraphParams& params) {
  return (static_cast<double>(ev.a_coeff) +
          static_cast<double>(ev.b_coeff) * std::sqrt(static_cast<double>(params.q))) /
         2.0;
}

SpectrumReport closed_form_spectrum(const GraphParams& params) {
  const std::int64_t npq = static_cast<std::int64_t>(params.n / params.q);
  const std::uint64_t half = (params.q - 1) / 2;

  SpectrumReport report;
  report.params = params;
  report.eigenvalues.push_back(
      {static_cast<std::int64_t>(params.n) - npq, 0, 1});
  report.eigenvalues.push_back({-npq, npq, half});
  if (params.e > 1)
    report.eigenvalues.push_back({0, 0, params.n - params.q});
  report.eigenvalues.push_back({-npq, -npq, half});
  report.lambda = static_cast<double>(npq) *
                  (std::sqrt(static_cast<double>(params.q)) + 1.0) / 2.0;
  return report;
}

ExactEigenvalue eigenvalue_for_frequency(std::uint64_t a,
                                         const GraphParams& params) {
  if (a >= params.n)
    fail(errc::invalid_argument,
         "frequency " + std::to_string(a) + " out of range for n = " +
             std::to_string(params.n));
  const std::int64_t npq = static_cast<std::int64_t>(params.n / params.q);
  const std::uint64_t half = (params.q - 1) / 2;
  if (a == 0)
    return {static_cast<std::int64_t>(params.n) - npq, 0, 1};
  // q-adic valuation of a decides the class; only valuation e-1 is nonzero.
  std::uint32_t v = 0;
  std::uint64_t rest = a;
  while (rest % params.q == 0) {
    rest /= params.q;
    ++v;
  }
  if (v != params.e - 1) return {0, 0, params.n - params.q};
  int sign = legendre_symbol(static_cast<std::int64_t>(rest), params.q);
  return {-npq, sign * npq, half};
}

bool check_spectrum_identities(const SpectrumReport& report) {
  using i128 = __int128;
  i128 sum_m = 0, sum_ma = 0, sum_mb = 0, sum_norm = 0, sum_mab = 0;
  for (const ExactEigenvalue& ev : report.eigenvalues) {
    const i128 m = static_cast<i128>(ev.multiplicity);
    const i128 a = ev.a_coeff;
    const i128 b = ev.b_coeff;
    sum_m += m;
    sum_ma += m * a;
    sum_mb += m * b;
    sum_norm += m * (a * a + static_cast<i128>(report.params.q) * b * b);
    sum_mab += m * a * b;
  }
  const i128 n = static_cast<i128>(report.params.n);
  const i128 d = static_cast<i128>(report.params.d);
  return sum_m == n && sum_ma == 0 && sum_mb == 0 && sum_norm == 4 * n * d &&
         sum_mab == 0;
}

CharacterSumSpectrum character_sum_spectrum(const GraphParams& params) {
  if (params.n > kGraphOrderCap)
    fail(errc::cap_exceeded,
         "character-sum spectrum capped at n <= " +
             std::to_string(kGraphOrderCap) + ", requested n = " +
             std::to_string(params.n));
  const std::vector<std::uint64_t> conn = unit_squares(params);
  const double tau = 2.0 * std::numbers::pi / static_cast<double>(params.n);
  std::vector<std::complex<double>> roots(params.n);
  for (std::uint64_t j = 0; j < params.n; ++j)
    roots[j] = std::polar(1.0, tau * static_cast<double>(j));

  CharacterSumSpectrum out;
  out.values.resize(params.n);
  for (std::uint64_t a = 0; a < params.n; ++a) {
    std::complex<double> val =
        pairwise_sum(0, conn.size(), [&](std::uint64_t i) {
          std::uint64_t j = static_cast<std::uint64_t>(
              static_cast<unsigned __int128>(a) * conn[i] % params.n);
          return roots[j];
        });
    out.values[a] = val.real();
    out.max_imag = std::max(out.max_imag, std::abs(val.imag()));
  }
  return out;
}

std::complex<double> character_sum_eigenvalue(const GraphParams& params,
                                              std::uint64_t a) {
  if (a >= params.n)
    fail(errc::invalid_argument,
         "frequency " + std::to_string(a) + " out of range for n = " +
             std::to_string(params.n));
  const std::vector<std::uint64_t> conn = unit_squares(params);
  const double tau = 2.0 * std::numbers::pi / static_cast<double>(params.n);
  return pairwise_sum(0, conn.size(), [&](std::uint64_t i) {
    std::uint64_t j = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * conn[i] % params.n);
    return std::polar(1.0, tau * static_cast<double>(j));
  });
}

std::vector<double> numerical_spectrum(const CayleyGraph& g,
                                       std::uint64_t max_order) {
  const std::uint64_t cap = max_order == 0 ? kNumericalSpectrumCap : max_order;
  const std::uint64_t n = g.order();
  if (n > cap)
    fail(errc::cap_exceeded,
         "numerical spectrum capped at n <= " + std::to_string(cap) +
             ", requested n = " + std::to_string(n));
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
  for (std::uint64_t u = 0; u < n; ++u) {
    const Bitset& r = g.row(u);
    for (std::int64_t v = r.find_first(); v >= 0;
         v = r.find_first_from(static_cast<std::uint64_t>(v) + 1)) {
      adj(static_cast<Eigen::Index>(u), v) = 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    fail(errc::invalid_argument, "eigensolver failed to converge");
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + n);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace ecgraph
