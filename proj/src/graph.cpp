#include "enumkern/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace enumkern {

Graph Graph::build(std::vector<int> labels, const std::vector<Edge>& edges) {
  Graph g;
  g.n_ = static_cast<int>(labels.size());
  g.labels_ = std::move(labels);
  g.adj_.assign(g.n_, {});
  for (int i = 0; i < g.n_; ++i) {
    auto [it, fresh] = g.label_to_id_.emplace(g.labels_[i], i);
    if (!fresh) throw std::invalid_argument("duplicate vertex label");
  }
  EdgeSet es(edges);
  for (const Edge& e : es) {
    if (e.u == e.v) throw std::invalid_argument("self-loop rejected");
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.m_ = es.size();
  return g;
}

Graph Graph::build(int n, const std::vector<Edge>& edges) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return build(std::move(labels), edges);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::label(int v) const {
  check_vertex(v);
  return labels_[v];
}

int Graph::id_of_label(int label) const {
  auto it = label_to_id_.find(label);
  if (it == label_to_id_.end()) throw std::out_of_range("unknown label");
  return it->second;
}

bool Graph::has_label(int label) const {
  return label_to_id_.count(label) > 0;
}

VertexSet Graph::label_set() const {
  return VertexSet(labels_);
}

VertexSet Graph::ids_of_labels(const VertexSet& labels) const {
  std::vector<int> ids;
  ids.reserve(labels.size());
  for (int l : labels) ids.push_back(id_of_label(l));
  return VertexSet(std::move(ids));
}

VertexSet Graph::labels_of_ids(const VertexSet& ids) const {
  std::vector<int> ls;
  ls.reserve(ids.size());
  for (int v : ids) ls.push_back(label(v));
  return VertexSet(std::move(ls));
}

VertexSet Graph::open_neighborhood(const VertexSet& s) const {
  std::vector<int> out;
  for (int v : s) {
    check_vertex(v);
    for (int w : adj_[v])
      if (!s.contains(w)) out.push_back(w);
  }
  return VertexSet(std::move(out));
}

VertexSet Graph::closed_neighborhood(const VertexSet& s) const {
  return set_union(s, open_neighborhood(s));
}

bool Graph::is_independent(const VertexSet& s) const {
  for (int v : s)
    for (int w : adj_[v])
      if (w > v && s.contains(w)) return false;
  return true;
}

std::pair<Graph, std::unordered_map<int, int>> Graph::induced_subgraph(
    const VertexSet& s) const {
  std::unordered_map<int, int> old_to_new;
  std::vector<int> labels;
  labels.reserve(s.size());
  int next = 0;
  for (int v : s) {
    check_vertex(v);
    old_to_new[v] = next++;
    labels.push_back(labels_[v]);
  }
  std::vector<Edge> es;
  for (int v : s)
    for (int w : adj_[v])
      if (v < w && s.contains(w)) es.emplace_back(old_to_new[v], old_to_new[w]);
  return {build(std::move(labels), es), std::move(old_to_new)};
}

Graph Graph::delete_vertices(const VertexSet& s) const {
  for (int v : s) check_vertex(v);
  return induced_subgraph(set_minus(VertexSet::range(n_), s)).first;
}

Graph Graph::delete_edges(const EdgeSet& es) const {
  for (const Edge& e : es) {
    check_vertex(e.u);
    check_vertex(e.v);
  }
  std::vector<Edge> keep;
  for (const Edge& e : edges())
    if (!es.contains(e)) keep.push_back(e);
  return build(labels_, keep);
}

Graph Graph::add_edges(const EdgeSet& es) const {
  std::vector<Edge> all = edges();
  for (const Edge& e : es) {
    if (e.u == e.v) throw std::invalid_argument("loop addition rejected");
    check_vertex(e.u);
    check_vertex(e.v);
    all.push_back(e);
  }
  return build(labels_, all);
}

Graph Graph::identify(int keep, int merge) const {
  check_vertex(keep);
  check_vertex(merge);
  if (keep == merge) throw std::invalid_argument("identify needs two vertices");
  // Reattach merge's edges to keep, then drop merge.
  std::vector<Edge> es;
  for (const Edge& e : edges()) {
    int a = e.u == merge ? keep : e.u;
    int b = e.v == merge ? keep : e.v;
    if (a == b) continue;
    es.emplace_back(a, b);
  }
  std::vector<int> labels = labels_;
  Graph merged = build(std::move(labels), es);
  return merged.delete_vertices(VertexSet{merge});
}

std::vector<VertexSet> Graph::connected_components() const {
  std::vector<VertexSet> out;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack;
  for (int s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  return connected_components().size() == 1;
}

bool Graph::is_forest() const {
  // A forest has exactly n - #components edges.
  return m_ == n_ - static_cast<long long>(connected_components().size());
}

EdgeSet Graph::bridges() const {
  // Iterative low-link DFS.
  std::vector<int> disc(n_, -1), low(n_, 0), parent_edge(n_, -1);
  std::vector<Edge> out;
  int timer = 0;
  // Assign ids to edges so parallel traversal of the tree edge is skipped
  // exactly once.
  std::vector<Edge> es = edges();
  std::unordered_map<long long, int> edge_id;
  auto key = [this](int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) * n_ + v;
  };
  for (size_t i = 0; i < es.size(); ++i) edge_id[key(es[i].u, es[i].v)] = (int)i;

  struct Frame {
    int v;
    size_t next_nb;
  };
  for (int s = 0; s < n_; ++s) {
    if (disc[s] != -1) continue;
    std::vector<Frame> stack{{s, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_nb < adj_[f.v].size()) {
        int w = adj_[f.v][f.next_nb++];
        int eid = edge_id[key(f.v, w)];
        if (eid == parent_edge[f.v]) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          parent_edge[w] = eid;
          stack.push_back({w, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) out.emplace_back(p, v);
        }
      }
    }
  }
  return EdgeSet(std::move(out));
}

std::pair<Graph, std::vector<VertexSet>> Graph::contract_bridges() const {
  EdgeSet br = bridges();
  // Union-find over bridge endpoints.
  std::vector<int> dsu(n_);
  std::iota(dsu.begin(), dsu.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  };
  for (const Edge& e : br) {
    int a = find(e.u), b = find(e.v);
    if (a != b) dsu[a] = b;
  }
  // Group preimages; contracted vertex label = min label of its preimage.
  std::unordered_map<int, int> root_to_new;
  std::vector<std::vector<int>> pre;
  std::vector<int> new_labels;
  for (int v = 0; v < n_; ++v) {
    int r = find(v);
    auto it = root_to_new.find(r);
    if (it == root_to_new.end()) {
      it = root_to_new.emplace(r, (int)pre.size()).first;
      pre.emplace_back();
      new_labels.push_back(labels_[v]);
    }
    int idx = it->second;
    pre[idx].push_back(v);
    new_labels[idx] = std::min(new_labels[idx], labels_[v]);
  }
  std::vector<Edge> es;
  for (const Edge& e : edges()) {
    if (br.contains(e)) continue;
    int a = root_to_new[find(e.u)], b = root_to_new[find(e.v)];
    if (a == b) throw std::logic_error("non-bridge edge inside a preimage");
    es.emplace_back(a, b);
  }
  std::vector<VertexSet> preimages;
  preimages.reserve(pre.size());
  for (auto& p : pre) preimages.emplace_back(std::move(p));
  return {build(std::move(new_labels), es), std::move(preimages)};
}

void Graph::audit_simple() const {
  if (static_cast<int>(labels_.size()) != n_ ||
      static_cast<int>(adj_.size()) != n_)
    throw std::logic_error("inconsistent sizes");
  long long deg_sum = 0;
  for (int v = 0; v < n_; ++v) {
    const auto& nb = adj_[v];
    if (!std::is_sorted(nb.begin(), nb.end()))
      throw std::logic_error("unsorted adjacency");
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::logic_error("parallel edge");
    for (int w : nb) {
      if (w == v) throw std::logic_error("self-loop");
      if (w < 0 || w >= n_) throw std::logic_error("neighbor out of range");
      const auto& back = adj_[w];
      if (!std::binary_search(back.begin(), back.end(), v))
        throw std::logic_error("asymmetric adjacency");
    }
    deg_sum += static_cast<long long>(nb.size());
  }
  if (deg_sum != 2 * m_) throw std::logic_error("edge count mismatch");
  std::vector<int> ls = labels_;
  std::sort(ls.begin(), ls.end());
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
    throw std::logic_error("duplicate labels");
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && labels_ == o.labels_ && adj_ == o.adj_;
}

}  // namespace enumkern
