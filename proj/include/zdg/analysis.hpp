#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg {

inline constexpr std::size_t kDefaultCliqueCap = 512;
inline constexpr std::size_t kDefaultIsoCap = 64;

/// a ⊥ b: adjacent with no common neighbor (the edge a-b lies on no
/// triangle). Throws SameVertex when a == b, UnknownVertex when out of range.
bool orthogonal(const Graph& g, std::size_t a, std::size_t b);

/// Vertices orthogonal to a, ascending.
std::vector<std::size_t> orthogonal_partners(const Graph& g, std::size_t a);

struct ComplementationVerdict {
  bool complemented = true;
  /// Lowest vertex with no orthogonal partner, when not complemented.
  std::optional<std::size_t> uncomplemented_witness;
  bool uniquely_complemented = true;
  /// First (a, b, c) in ascending scan with a ⊥ b, a ⊥ c and N(b) != N(c).
  /// Populated whenever such a triple exists, even if complementedness
  /// already failed.
  std::optional<std::array<std::size_t, 3>> nonunique_witness;
};

/// Empty graphs are vacuously complemented and uniquely complemented.
ComplementationVerdict complementation_verdict(const Graph& g);

/// Quotient of g by the neighborhood-equality relation N(a) = N(b).
struct Reduction {
  /// Partition of the vertex set; each class ascending, classes ordered by
  /// lowest member.
  std::vector<std::vector<std::size_t>> classes;
  /// Lowest member of each class.
  std::vector<std::size_t> representatives;
  /// One vertex per class, labeled "[<representative label>]"; classes
  /// adjacent iff their members are (equivalently: iff representatives are).
  Graph quotient;
};

Reduction reduce(const Graph& g);

struct CliqueCertificate {
  std::vector<std::size_t> members;  // ascending; pairwise adjacent
  std::size_t size = 0;
};

/// Exact maximum clique via Bron–Kerbosch with pivoting. Returns the
/// lexicographically smallest maximum clique. Throws NoVertices on an empty
/// graph and SizeLimitExceeded past cap.
CliqueCertificate clique_number(const Graph& g, std::size_t cap = kDefaultCliqueCap);

struct IsomorphismResult {
  bool isomorphic = false;
  /// mapping[u in g1] = v in g2; present iff isomorphic.
  std::vector<std::size_t> mapping;
};

/// Backtracking isomorphism search with fast rejection on vertex count, edge
/// count and sorted degree sequence, plus neighbor-degree-multiset
/// refinement. Candidates are assigned in descending-degree order of g1 and
/// ascending index order of g2, so the returned bijection is deterministic.
/// Every bijection is re-verified edge-by-edge in both directions before
/// being reported.
IsomorphismResult isomorphic(const Graph& g1, const Graph& g2,
                             std::size_t cap = kDefaultIsoCap);

/// build_graph(power_set_semigroup(n)); the graph has 2^n − 2 vertices.
/// Requires 1 <= n <= 12.
ZeroDivisorGraph graph_of_power_set(int n);

}  // namespace zdg
