#pragma once

#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "enumkern/graph.hpp"

namespace enumkern {

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Maximum independent set size of a forest, by tree DP. Throws
// std::invalid_argument when the graph has a cycle.
int alpha_forest(const Graph& g);
int alpha_forest_induced(const Graph& g, const VertexSet& ids);

// Exact maximum independent set by branch and reduce: degree-0/1 vertices are
// taken greedily, then we branch on a maximum-degree vertex. Queries above
// the vertex cap raise ResourceCapError. Results for small subgraphs are
// memoized; the cache may be shared between threads.
class MisOracle {
 public:
  explicit MisOracle(int cap = 40) : cap_(cap) {}

  int cap() const { return cap_; }
  int alpha(const Graph& g) const;
  int alpha_induced(const Graph& g, const VertexSet& ids) const;

  // True iff some independent set of g of size >= t contains m and avoids p.
  bool is_extension(const Graph& g, const VertexSet& m, const VertexSet& p,
                    int t) const;

 private:
  int cap_;
  static constexpr int kMemoMaxVertices = 16;
  mutable std::unordered_map<std::string, int> memo_;
  mutable std::mutex mu_;

  int solve(const Graph& g) const;
};

// alpha(g[region]) - alpha(g[region \ N(probe)]). Requires the probe to be
// disjoint from the region; always >= 0.
int conflicts(const Graph& g, const VertexSet& region, const VertexSet& probe,
              const MisOracle& oracle);

// All independent subsets of x (internal ids) of size at most max_size that
// contain no forbidden set, the empty set included, in lexicographic order
// of sorted id lists.
std::vector<VertexSet> enumerate_chunks(const Graph& g, const VertexSet& x,
                                        int max_size,
                                        const std::vector<VertexSet>& forbidden);

// Number of components (given as id sets) on which the chunk has conflicts.
int chunk_degree(const Graph& g, const std::vector<VertexSet>& components,
                 const VertexSet& chunk, const MisOracle& oracle);

// z is free when no chunk has conflicts on it.
bool is_free(const Graph& g, const std::vector<VertexSet>& chunks,
             const VertexSet& z, const MisOracle& oracle);

// z is y-almost-free when every chunk with conflicts on z has at least y
// conflicts on all of rest (typically rest = V \ X).
bool is_almost_free(const Graph& g, const std::vector<VertexSet>& chunks,
                    const VertexSet& z, const VertexSet& rest, int y,
                    const MisOracle& oracle);

}  // namespace enumkern
