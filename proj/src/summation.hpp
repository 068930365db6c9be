#pragma once

// Pairwise summation over an index range; keeps rounding error at
// O(log n * eps) so trigonometric sums meet 1e-9 tolerances comfortably.

#include <cstdint>
#include <utility>

namespace ecgraph {

template <class Term>
auto pairwise_sum(std::uint64_t lo, std::uint64_t hi, Term&& term)
    -> decltype(term(lo)) {
  using Value = decltype(term(lo));
  if (hi - lo <= 64) {
    Value acc{};
    for (std::uint64_t x = lo; x < hi; ++x) acc += term(x);
    return acc;
  }
  std::uint64_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(lo, mid, term) + pairwise_sum(mid, hi, term);
}

}  // namespace ecgraph
