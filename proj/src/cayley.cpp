#include "cayley.hpp"

#include <fstream>
#include <ostream>

#include "error.hpp"

namespace ecgraph {

CayleyGraph::CayleyGraph(const GraphParams& params, QuadraticCharacter chi)
    : params_(params), chi_(std::move(chi)) {}

CayleyGraph CayleyGraph::build(const GraphParams& params) {
  if (params.n > kGraphOrderCap)
    fail(errc::cap_exceeded,
         "graph construction capped at n <= " + std::to_string(kGraphOrderCap) +
             ", requested n = " + std::to_string(params.n));
  CayleyGraph g(params, QuadraticCharacter(params));
  g.conn_ = unit_squares(params);
  Bitset row0(params.n);
  for (std::uint64_t s : g.conn_) row0.set(s);
  g.rows_.reserve(params.n);
  // The graph is circulant: row v is row 0 rotated by v.
  for (std::uint64_t v = 0; v < params.n; ++v)
    g.rows_.push_back(row0.rotated(v));
  return g;
}

CayleyGraph CayleyGraph::build(std::uint64_t q, std::uint32_t e) {
  return build(GraphParams::create(q, e));
}

const Bitset& CayleyGraph::row(std::uint64_t v) const {
  if (v >= params_.n)
    fail(errc::invalid_argument,
         "vertex " + std::to_string(v) + " out of range for n = " +
             std::to_string(params_.n));
  return rows_[v];
}

bool CayleyGraph::is_adjacent(std::uint64_t x, std::uint64_t y) const {
  if (x >= params_.n || y >= params_.n)
    fail(errc::invalid_argument,
         "vertex pair (" + std::to_string(x) + ", " + std::to_string(y) +
             ") out of range for n = " + std::to_string(params_.n));
  return rows_[x].test(y);
}

void CayleyGraph::export_edge_list(std::ostream& os) const {
  os << params_.n << ' ' << edge_count() << '\n';
  for (std::uint64_t u = 0; u < params_.n; ++u) {
    const Bitset& r = rows_[u];
    for (std::int64_t v = r.find_first_from(u + 1); v >= 0;
         v = r.find_first_from(static_cast<std::uint64_t>(v) + 1)) {
      os << u << ' ' << v << '\n';
    }
  }
}

void CayleyGraph::export_edge_list_file(const std::string& path) const {
  std::ofstream os(path);
  if (!os) fail(errc::io_error, "cannot open " + path + " for writing");
  export_edge_list(os);
  if (!os.flush()) fail(errc::io_error, "write to " + path + " failed");
}

}  // namespace ecgraph
