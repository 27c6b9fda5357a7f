#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>

#include "enumkern/graph.hpp"
#include "enumkern/mis_oracle.hpp"

namespace enumkern {

// Rooted forest whose ancestor-descendant closure covers every edge.
// Vertices are labels; parent[l] is the parent label, roots map to -1.
struct TreedepthDecomposition {
  std::map<int, int> parent;
  std::vector<int> roots;
  int depth = 0;
  void audit(const Graph& g) const;
};

// Connected induced subgraph all of whose edges are bridges of the host.
struct TreeOfBridges {
  VertexSet vertices;  // internal ids of the host graph
  EdgeSet edges;
  void audit(const Graph& host) const;
};

struct LoweringTree {
  TreeOfBridges tree;
  int bd_before = 0;  // bd of the host component; removal drops it by one
};

// Exact depth computations; both are exponential and guarded by a vertex cap.
class DepthSolver {
 public:
  explicit DepthSolver(int cap = 20) : cap_(cap) {}

  int cap() const { return cap_; }
  std::pair<int, TreedepthDecomposition> treedepth(const Graph& g) const;
  int bridgedepth(const Graph& g) const;

  // Preimage of a contracted-graph vertex minimizing bd after removal;
  // ties broken towards the smallest external label. The host component must
  // be connected and nonempty.
  LoweringTree lowering_tree(const Graph& component) const;

 private:
  int cap_;
  mutable std::unordered_map<std::string, int> td_memo_;
  mutable std::unordered_map<std::string, int> bd_memo_;

  int td_value(const Graph& g) const;
  int bd_value(const Graph& g) const;
};

// A diameter path of the tree (double BFS), itself a tree-of-bridges.
TreeOfBridges longest_path(const Graph& host, const TreeOfBridges& t);

// Tree-of-bridges induced by a vertex subset of the host (edges = bridges of
// the host inside the set).
TreeOfBridges tree_of_bridges_from_vertices(const Graph& host,
                                            const VertexSet& vertices);

}  // namespace enumkern
