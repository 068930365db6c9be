#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bitset.hpp"
#include "number_theory.hpp"

namespace ecgraph {

// Dense adjacency rows are materialized per vertex, so graph construction is
// capped well below the residue-table cap.
inline constexpr std::uint64_t kGraphOrderCap = 32768;

// Circulant graph on Z_n whose connection set is the set of unit squares:
// x ~ y iff x - y is the square of a unit mod n.  For q = 1 (mod 4) the
// connection set is symmetric, so the graph is undirected and loop-free.
class CayleyGraph {
 public:
  static CayleyGraph build(const GraphParams& params);
  static CayleyGraph build(std::uint64_t q, std::uint32_t e);

  const GraphParams& params() const { return params_; }
  std::uint64_t order() const { return params_.n; }
  std::uint64_t degree() const { return params_.d; }
  const QuadraticCharacter& chi() const { return chi_; }
  const std::vector<std::uint64_t>& connection_set() const { return conn_; }

  const Bitset& row(std::uint64_t v) const;
  bool is_adjacent(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t edge_count() const { return params_.n * params_.d / 2; }

  // Writes "n m" then one "u v" line per edge with u < v, ascending
  // lexicographic order.
  void export_edge_list(std::ostream& os) const;
  void export_edge_list_file(const std::string& path) const;

 private:
  CayleyGraph(const GraphParams& params, QuadraticCharacter chi);

  GraphParams params_;
  QuadraticCharacter chi_;
  std::vector<std::uint64_t> conn_;
  std::vector<Bitset> rows_;
};

}  // namespace ecgraph
