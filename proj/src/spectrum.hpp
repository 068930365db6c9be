#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cayley.hpp"
#include "number_theory.hpp"

namespace ecgraph {

// Dense eigensolves are cubic; keep the default cap modest.
inline constexpr std::uint64_t kNumericalSpectrumCap = 3000;

// Eigenvalues of the graph are all of the form (a + b*sqrt(q)) / 2 with
// integer a, b.  Storing the integer pair keeps the spectrum exact.
struct ExactEigenvalue {
  std::int64_t a_coeff = 0;
  std::int64_t b_coeff = 0;
  std::uint64_t multiplicity = 0;

  bool operator==(const ExactEigenvalue&) const = default;
};

double eigenvalue_value(const ExactEigenvalue& ev, const GraphParams& params);

struct SpectrumReport {
  GraphParams params;
  std::vector<ExactEigenvalue> eigenvalues;  // descending by value
  double lambda = 0.0;  // max |eigenvalue| over non-principal classes
};

// Closed-form spectrum: the distinct eigenvalue classes with exact integer
// coefficients and multiplicities, ordered by descending value.
SpectrumReport closed_form_spectrum(const GraphParams& params);

// Eigenvalue of the circulant for one Fourier frequency a in [0, n),
// classified exactly from the q-adic valuation of a.  The multiplicity
// reported is that of the whole class the frequency falls in.
ExactEigenvalue eigenvalue_for_frequency(std::uint64_t a,
                                         const GraphParams& params);

// Exact moment identities over the closed form (128-bit arithmetic):
// sum m = n, sum m*a = 0, sum m*b = 0, sum m*(a^2 + q*b^2) = 4*n*d,
// sum m*a*b = 0.
bool check_spectrum_identities(const SpectrumReport& report);

struct CharacterSumSpectrum {
  std::vector<double> values;  // indexed by frequency a in [0, n)
  double max_imag = 0.0;       // largest |imag part| seen before discarding
};

// Independent spectral route: eigenvalue at frequency a as the exponential
// sum over the connection set, evaluated with pairwise summation.
CharacterSumSpectrum character_sum_spectrum(const GraphParams& params);
std::complex<double> character_sum_eigenvalue(const GraphParams& params,
                                              std::uint64_t a);

// Third route: dense symmetric eigensolve of the adjacency matrix,
// descending order.  max_order == 0 means the default cap.
std::vector<double> numerical_spectrum(const CayleyGraph& g,
                                       std::uint64_t max_order = 0);

}  // namespace ecgraph
