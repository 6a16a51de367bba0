#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zdg/bitset.hpp"
#include "zdg/errors.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

/// Simple undirected graph with per-vertex bitset adjacency rows and one
/// display label per vertex. No loops; edges stored symmetrically.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const;

  void add_edge(std::size_t u, std::size_t v);

  bool adjacent(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
  }

  const Bitset& neighbors(std::size_t v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::size_t degree(std::size_t v) const { return neighbors(v).count(); }

  const std::string& label(std::size_t v) const {
    check_vertex(v);
    return labels_[v];
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }

  void check_vertex(std::size_t v) const;

 private:
  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;
};

/// Open neighborhood of a zero-divisor-graph vertex, in semigroup element
/// indices. members are ascending; center is never a member.
struct Neighborhood {
  elem center;
  std::vector<elem> members;
};

/// The nonzero elements of s annihilated by some nonzero element, ascending.
/// An element may qualify via itself (v*v = 0), so isolated vertices exist.
std::vector<elem> zero_divisor_vertices(const Semigroup& s);

/// Zero-divisor graph G(S): vertices are the nonzero zero-divisors of the
/// source semigroup, distinct u, v adjacent iff u*v = 0. Vertex order is
/// ascending element index. Immutable after build.
class ZeroDivisorGraph {
 public:
  static ZeroDivisorGraph build(Semigroup s);

  const Semigroup& source() const noexcept { return source_; }
  const std::vector<elem>& vertices() const noexcept { return vertices_; }
  const Graph& graph() const noexcept { return graph_; }

  bool is_vertex(elem v) const;

  /// Position of element v in the vertex order; throws UnknownVertex.
  std::size_t position(elem v) const;

  elem element_at(std::size_t pos) const { return vertices_.at(pos); }

  Neighborhood neighborhood(elem v) const;

  /// Adjacency by semigroup element index; both must be vertices.
  bool adjacent_elements(elem u, elem v) const {
    return graph_.adjacent(position(u), position(v));
  }

 private:
  ZeroDivisorGraph(Semigroup s, std::vector<elem> vertices, Graph graph)
      : source_(std::move(s)), vertices_(std::move(vertices)), graph_(std::move(graph)) {}

  Semigroup source_;
  std::vector<elem> vertices_;
  Graph graph_;
};

}  // namespace zdg
