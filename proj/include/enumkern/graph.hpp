#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "enumkern/vertex_set.hpp"

namespace enumkern {

// Simple undirected graph. Internal ids are dense and 0-based; every vertex
// carries a stable external label that survives all edit operations, so that
// lifted solutions can be reported in the labels of the original instance.
// Graphs are immutable values: every edit returns a new graph.
class Graph {
 public:
  Graph() = default;

  // labels[i] is the external label of internal id i; labels must be
  // pairwise distinct. Edges are given as internal-id pairs.
  static Graph build(std::vector<int> labels, const std::vector<Edge>& edges);
  // Convenience: labels 0..n-1.
  static Graph build(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;
  bool has_edge(int u, int v) const;
  std::vector<Edge> edges() const;

  int label(int v) const;
  // Internal id carrying the given label; throws if absent.
  int id_of_label(int label) const;
  bool has_label(int label) const;
  const std::vector<int>& labels() const { return labels_; }
  VertexSet label_set() const;

  VertexSet ids_of_labels(const VertexSet& labels) const;
  VertexSet labels_of_ids(const VertexSet& ids) const;

  // N(s) \ s, internal ids.
  VertexSet open_neighborhood(const VertexSet& s) const;
  // N[s], internal ids.
  VertexSet closed_neighborhood(const VertexSet& s) const;
  bool is_independent(const VertexSet& s) const;

  // Subgraph induced by s; second component maps old id -> new id.
  std::pair<Graph, std::unordered_map<int, int>> induced_subgraph(
      const VertexSet& s) const;
  Graph delete_vertices(const VertexSet& s) const;
  Graph delete_edges(const EdgeSet& es) const;
  // Idempotent on existing edges; rejects loops.
  Graph add_edges(const EdgeSet& es) const;
  // Merge `merge` into `keep`: the merged vertex disappears, keep's
  // neighborhood becomes the union of both minus the pair itself. The
  // resulting graph keeps the label of `keep`.
  Graph identify(int keep, int merge) const;

  std::vector<VertexSet> connected_components() const;
  bool is_connected() const;
  bool is_forest() const;

  // Edges whose removal increases the component count.
  EdgeSet bridges() const;
  // Contract every bridge. Returns the contracted graph plus, per contracted
  // vertex, the set of original internal ids in its preimage. Each preimage
  // induces a tree all of whose edges are bridges of the host graph; the
  // contracted vertex inherits the minimum label of its preimage.
  std::pair<Graph, std::vector<VertexSet>> contract_bridges() const;

  // Throws std::logic_error on any violation of simplicity (loops, parallel
  // edges, asymmetric adjacency, duplicate labels).
  void audit_simple() const;

  bool operator==(const Graph& o) const;

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<int> labels_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<int, int> label_to_id_;

  void check_vertex(int v) const;
};

}  // namespace enumkern
