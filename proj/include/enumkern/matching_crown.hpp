#pragma once

#include <optional>
#include <variant>

#include "enumkern/graph.hpp"

namespace enumkern {

struct Matching {
  EdgeSet edges;
  int size() const { return edges.size(); }
  VertexSet saturated() const;
  // Checks that no vertex is covered twice and every edge exists in g.
  void audit(const Graph& g) const;
};

// (C, H, B) partition of V: C independent, N(C) = H, and the saturating
// matching matches every head vertex into the crown.
struct CrownDecomposition {
  VertexSet crown;  // C
  VertexSet head;   // H
  VertexSet body;   // B
  Matching saturating;
  int width() const { return head.size(); }
  void audit(const Graph& g) const;
};

// Crown decomposition with |B| + 2|H| <= 3 * width bound.
struct HeavyCrown {
  CrownDecomposition base;
  void audit(const Graph& g, int t) const;
};

// Maximum matching of the bipartite subgraph spanned by edges between left
// and right (which must be disjoint).
Matching hopcroft_karp(const Graph& g, const VertexSet& left,
                       const VertexSet& right);

// Maximum matching of g itself (greedy maximal + augmenting improvement via
// the bipartite routine is not valid in general graphs; this uses simple
// augmenting-path search and is only called on forests, where it is exact).
Matching maximum_matching_forest(const Graph& g);

// Either a matching of size exactly t+1 or a heavy crown of width <= t.
// Requires no isolated vertices and |V| >= 3t+1.
std::variant<Matching, HeavyCrown> heavy_crown_or_matching(const Graph& g,
                                                           int t);

// Crown from the half-integral vertex cover LP, solved by König's theorem on
// the bipartite double cover: C = value-0 vertices, H = value-1 vertices,
// B = half-valued vertices. Extraction is iterated until the remaining body
// yields an empty crown, so C is inclusion-maximal for this process.
CrownDecomposition nt_crown(const Graph& g);

struct FvsImprovement {
  Graph body_graph;          // g[B]
  VertexSet x_new;           // labels: (X cap B) union unmatched forest rest
  VertexSet unmatched;       // labels: I, the new independent additions
  CrownDecomposition crown;  // ids of g
};

// Given a feedback vertex set X (labels), compute the crown (C,H,B) of g,
// the body graph g' = g[B] and X_new = (X cap B) union I where I are the
// vertices of g' \ X left unmatched by a maximum matching. Guarantees
// |X_new| <= 2|X| and that g' \ X_new is a forest with a perfect matching.
FvsImprovement improve_fvs(const Graph& g, const VertexSet& x_labels);

}  // namespace enumkern
