#include "zdg/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zdg {

bool orthogonal(const Graph& g, std::size_t a, std::size_t b) {
  g.check_vertex(a);
  g.check_vertex(b);
  if (a == b) throw SameVertex("orthogonality requires two distinct vertices");
  if (!g.adjacent(a, b)) return false;
  // In a simple graph the neighborhoods never contain their own centers, so
  // the intersection cannot pick up a or b.
  return !g.neighbors(a).intersects(g.neighbors(b));
}

std::vector<std::size_t> orthogonal_partners(const Graph& g, std::size_t a) {
  std::vector<std::size_t> out;
  g.neighbors(a).for_each([&](std::size_t b) {
    if (!g.neighbors(a).intersects(g.neighbors(b))) out.push_back(b);
  });
  return out;
}

ComplementationVerdict complementation_verdict(const Graph& g) {
  ComplementationVerdict verdict;
  const std::size_t n = g.vertex_count();
  for (std::size_t a = 0; a < n; ++a) {
    auto partners = orthogonal_partners(g, a);
    if (partners.empty() && !verdict.uncomplemented_witness) {
      verdict.complemented = false;
      verdict.uncomplemented_witness = a;
    }
    if (!verdict.nonunique_witness) {
      for (std::size_t i = 0; i < partners.size() && !verdict.nonunique_witness; ++i)
        for (std::size_t j = i + 1; j < partners.size(); ++j)
          if (g.neighbors(partners[i]) != g.neighbors(partners[j])) {
            verdict.nonunique_witness = {a, partners[i], partners[j]};
            break;
          }
    }
  }
  verdict.uniquely_complemented = verdict.complemented && !verdict.nonunique_witness;
  return verdict;
}

Reduction reduce(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Reduction r;
  std::map<std::vector<std::size_t>, std::size_t> class_of;  // neighborhood -> class
  std::vector<std::size_t> vertex_class(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto key = g.neighbors(v).to_indices();
    auto [it, inserted] = class_of.try_emplace(std::move(key), r.classes.size());
    if (inserted) {
      r.classes.emplace_back();
      r.representatives.push_back(v);
    }
    vertex_class[v] = it->second;
    r.classes[it->second].push_back(v);
  }

  // Equal neighborhoods force non-adjacency (b in N(a) = N(b) would be a
  // loop); the quotient's loop-freeness rests on this.
  for (const auto& cls : r.classes)
    for (std::size_t i = 0; i + 1 < cls.size(); ++i)
      if (g.adjacent(cls[i], cls[i + 1]))
        throw std::logic_error("equivalent vertices are adjacent; source graph is not simple");

  std::vector<std::string> labels;
  labels.reserve(r.classes.size());
  for (std::size_t c = 0; c < r.classes.size(); ++c)
    labels.push_back("[" + g.label(r.representatives[c]) + "]");
  Graph q(r.classes.size(), std::move(labels));
  for (std::size_t a = 0; a < r.classes.size(); ++a)
    for (std::size_t b = a + 1; b < r.classes.size(); ++b)
      if (g.adjacent(r.representatives[a], r.representatives[b])) q.add_edge(a, b);
  r.quotient = std::move(q);
  return r;
}

namespace {

/// Bron–Kerbosch with pivoting (Tomita). Visits every maximal clique;
/// `best` keeps the maximum size with lexicographically-smallest members.
struct CliqueSearch {
  const Graph& g;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;

  void expand(const Bitset& cand, const Bitset& excl) {
    if (!cand.any() && !excl.any()) {
      if (current.size() > best.size() ||
          (current.size() == best.size() && current < best))
        best = current;
      return;
    }
    // Pivot: vertex of cand ∪ excl covering the most candidates.
    std::size_t pivot = g.vertex_count();
    std::size_t pivot_cover = 0;
    bool have_pivot = false;
    for (std::size_t u = cand.next(0); u < cand.size(); u = cand.next(u + 1)) {
      std::size_t cover = (cand & g.neighbors(u)).count();
      if (!have_pivot || cover > pivot_cover) pivot = u, pivot_cover = cover, have_pivot = true;
    }
    for (std::size_t u = excl.next(0); u < excl.size(); u = excl.next(u + 1)) {
      std::size_t cover = (cand & g.neighbors(u)).count();
      if (!have_pivot || cover > pivot_cover) pivot = u, pivot_cover = cover, have_pivot = true;
    }

    Bitset cand_work = cand, excl_work = excl;
    const Bitset& pn = g.neighbors(pivot);
    for (std::size_t v = cand.next(0); v < cand.size(); v = cand.next(v + 1)) {
      if (pn.test(v)) continue;
      if (!cand_work.test(v)) continue;
      current.push_back(v);
      expand(cand_work & g.neighbors(v), excl_work & g.neighbors(v));
      current.pop_back();
      cand_work.reset(v);
      excl_work.set(v);
    }
  }
};

}  // namespace

CliqueCertificate clique_number(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw NoVertices("clique number is undefined on an empty graph");
  if (n > cap)
    throw SizeLimitExceeded("graph has " + std::to_string(n) +
                                " vertices, over the clique search cap " +
                                std::to_string(cap),
                            n, cap);
  CliqueSearch search{g, {}, {}};
  Bitset cand(n), excl(n);
  for (std::size_t v = 0; v < n; ++v) cand.set(v);
  search.expand(cand, excl);
  return CliqueCertificate{search.best, search.best.size()};
}

namespace {

/// Degree plus sorted multiset of neighbor degrees: an isomorphism invariant
/// used to restrict candidate assignments.
std::vector<std::vector<std::size_t>> vertex_signatures(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<std::vector<std::size_t>> sig(n);
  for (std::size_t v = 0; v < n; ++v) {
    sig[v].push_back(deg[v]);
    g.neighbors(v).for_each([&](std::size_t w) { sig[v].push_back(deg[w]); });
    std::sort(sig[v].begin() + 1, sig[v].end());
  }
  return sig;
}

bool bijection_preserves_edges(const Graph& g1, const Graph& g2,
                               const std::vector<std::size_t>& map) {
  const std::size_t n = g1.vertex_count();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (g1.adjacent(u, v) != g2.adjacent(map[u], map[v])) return false;
  return true;
}

}  // namespace

IsomorphismResult isomorphic(const Graph& g1, const Graph& g2, std::size_t cap) {
  const std::size_t n = g1.vertex_count();
  for (const Graph* g : {&g1, &g2})
    if (g->vertex_count() > cap)
      throw SizeLimitExceeded("graph has " + std::to_string(g->vertex_count()) +
                                  " vertices, over the isomorphism cap " +
                                  std::to_string(cap),
                              g->vertex_count(), cap);
  if (n != g2.vertex_count()) return {};
  if (n == 0) return {true, {}};
  if (g1.edge_count() != g2.edge_count()) return {};

  auto sig1 = vertex_signatures(g1), sig2 = vertex_signatures(g2);
  {
    auto s1 = sig1, s2 = sig2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return {};  // covers the sorted degree sequence as well
  }

  // Assign g1 vertices in descending-degree order; try g2 candidates in
  // ascending index order so the first bijection found is deterministic.
  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (g1.degree(a) != g1.degree(b)) return g1.degree(a) > g1.degree(b);
    return a < b;
  });

  std::vector<std::size_t> map(n, n);
  std::vector<bool> used(n, false);

  auto backtrack = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t u = order[depth];
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || sig1[u] != sig2[v]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t w = order[d];
        if (g1.adjacent(u, w) != g2.adjacent(v, map[w])) ok = false;
      }
      if (!ok) continue;
      map[u] = v;
      used[v] = true;
      if (self(self, depth + 1)) return true;
      used[v] = false;
      map[u] = n;
    }
    return false;
  };

  if (!backtrack(backtrack, 0)) return {};
  // Certify before reporting: the mapping must preserve edges and non-edges
  // in both directions.
  if (!bijection_preserves_edges(g1, g2, map))
    throw std::logic_error("isomorphism search produced a non-preserving bijection");
  return {true, map};
}

ZeroDivisorGraph graph_of_power_set(int n) {
  if (n < 1) throw std::invalid_argument("power set parameter must be >= 1");
  if (n > 12)
    throw SizeLimitExceeded("G(P(" + std::to_string(n) + ")) would have 2^" +
                                std::to_string(n) + " - 2 vertices, over the bound",
                            static_cast<std::size_t>(n), 12);
  return ZeroDivisorGraph::build(power_set_semigroup(n));
}

}  // namespace zdg
