#pragma once

#include <functional>
#include <memory>

#include "enumkern/graph.hpp"
#include "enumkern/stream.hpp"

namespace enumkern {

// Total vertex order, stored as rank per internal id (lower rank = earlier).
struct VertexOrder {
  std::vector<int> rank;

  static VertexOrder by_label(const Graph& g);
  static VertexOrder identity(int n);
  int of(int v) const { return rank[v]; }
};

// Three-way comparison of vertex sets under the branching order: a < b when
// either a is a prefix-extension ancestor of b (a subset whose missing
// elements all come after everything in a) or the smallest element of the
// symmetric difference belongs to a.
int lex_compare(const VertexSet& a, const VertexSet& b, const VertexOrder& ord);

// alpha(g[keep]) for the oracle class chosen by the caller.
using AlphaFn = std::function<int(const Graph& g, const VertexSet& keep)>;

AlphaFn alpha_fn_forest();
class MisOracle;
AlphaFn alpha_fn_exact(const MisOracle& oracle);

// Streams every independent set S of g with S >= require, S disjoint from
// avoid and |S| >= t, in lexicographic order of S \ require. Delay is a
// constant number of extension-oracle calls per branching-tree edge. Sets are
// emitted in internal ids.
std::unique_ptr<SolutionStream> enum_is_lex(
    const Graph& g, int t, const VertexOrder& ord, AlphaFn alpha,
    const VertexSet& avoid = {}, const VertexSet& require = {},
    std::shared_ptr<StepCounter> counter = nullptr);

// First (lexicographically smallest) output, if any.
std::optional<VertexSet> first_is_lex(const Graph& g, int t,
                                      const VertexOrder& ord, AlphaFn alpha,
                                      const VertexSet& avoid = {},
                                      const VertexSet& require = {});

// All subsets of ground of size at most r, in the same lexicographic order,
// with constant delay.
std::unique_ptr<SolutionStream> enum_subsets_le(
    const VertexSet& ground, int r, const VertexOrder& ord,
    std::shared_ptr<StepCounter> counter = nullptr);

}  // namespace enumkern
