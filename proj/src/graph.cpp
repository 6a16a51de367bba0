#include "zdg/graph.hpp"

#include <algorithm>
#include <utility>

namespace zdg {

Graph::Graph(std::size_t n, std::vector<std::string> labels)
    : adj_(n, Bitset(n)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("v" + std::to_string(i));
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw SameVertex("loops are not allowed in a simple graph");
  adj_[u].set(v);
  adj_[v].set(u);
}

void Graph::check_vertex(std::size_t v) const {
  if (v >= adj_.size())
    throw UnknownVertex("vertex " + std::to_string(v) + " is out of range (graph has " +
                        std::to_string(adj_.size()) + " vertices)");
}

std::vector<elem> zero_divisor_vertices(const Semigroup& s) {
  const std::size_t n = s.order();
  const elem zero = s.zero();
  std::vector<elem> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == zero) continue;
    auto row = s.row(static_cast<elem>(v));
    for (std::size_t w = 0; w < n; ++w) {
      if (w == zero) continue;
      if (row[w] == zero) {
        out.push_back(static_cast<elem>(v));
        break;
      }
    }
  }
  return out;  // ascending by construction
}

ZeroDivisorGraph ZeroDivisorGraph::build(Semigroup s) {
  std::vector<elem> verts = zero_divisor_vertices(s);
  std::vector<std::string> labels;
  labels.reserve(verts.size());
  for (elem v : verts) labels.push_back(s.label(v));
  Graph g(verts.size(), std::move(labels));
  const elem zero = s.zero();
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (s.mul(verts[i], verts[j]) == zero) g.add_edge(i, j);
  return ZeroDivisorGraph(std::move(s), std::move(verts), std::move(g));
}

bool ZeroDivisorGraph::is_vertex(elem v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t ZeroDivisorGraph::position(elem v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw UnknownVertex("element " +
                        (v < source_.order() ? source_.label(v) : std::to_string(v)) +
                        " is not a vertex of the zero-divisor graph");
  return static_cast<std::size_t>(it - vertices_.begin());
}

Neighborhood ZeroDivisorGraph::neighborhood(elem v) const {
  const std::size_t pos = position(v);
  Neighborhood nb{v, {}};
  graph_.neighbors(pos).for_each(
      [&](std::size_t w) { nb.members.push_back(vertices_[w]); });
  return nb;
}

}  // namespace zdg
