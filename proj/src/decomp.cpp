#include "enumkern/decomp.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace enumkern {

void TreedepthDecomposition::audit(const Graph& g) const {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!parent.count(g.label(v)))
      throw std::logic_error("vertex missing from decomposition");
  // Every edge must connect an ancestor-descendant pair.
  auto is_ancestor = [&](int a, int d) {
    int cur = d;
    while (cur != -1) {
      if (cur == a) return true;
      auto it = parent.find(cur);
      cur = it == parent.end() ? -1 : it->second;
    }
    return false;
  };
  for (const Edge& e : g.edges()) {
    int lu = g.label(e.u), lv = g.label(e.v);
    if (!is_ancestor(lu, lv) && !is_ancestor(lv, lu))
      throw std::logic_error("edge not along an ancestor path");
  }
  int max_depth = 0;
  for (const auto& [v, p] : parent) {
    int d = 1, cur = v;
    while (true) {
      auto it = parent.find(cur);
      if (it == parent.end() || it->second == -1) break;
      cur = it->second;
      ++d;
    }
    max_depth = std::max(max_depth, d);
  }
  if (g.vertex_count() > 0 && max_depth != depth)
    throw std::logic_error("decomposition depth differs from value");
}

void TreeOfBridges::audit(const Graph& host) const {
  Graph sub = host.induced_subgraph(vertices).first;
  if (sub.vertex_count() > 0 && !sub.is_connected())
    throw std::logic_error("tree-of-bridges not connected");
  if (!sub.is_forest()) throw std::logic_error("tree-of-bridges has a cycle");
  EdgeSet host_bridges = host.bridges();
  for (const Edge& e : edges)
    if (!host_bridges.contains(e))
      throw std::logic_error("tree edge is not a bridge of the host");
}

namespace {

std::string graph_key(const Graph& g) {
  std::ostringstream key;
  std::vector<int> ls = g.labels();
  std::sort(ls.begin(), ls.end());
  for (int l : ls) key << l << ',';
  key << '|';
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.emplace_back(g.label(e.u), g.label(e.v));
  std::sort(es.begin(), es.end());
  for (const Edge& e : es) key << e.u << '-' << e.v << ',';
  return key.str();
}

}  // namespace

int DepthSolver::td_value(const Graph& g) const {
  int n = g.vertex_count();
  if (n == 0) return 0;
  std::string key = graph_key(g);
  auto it = td_memo_.find(key);
  if (it != td_memo_.end()) return it->second;

  int result;
  auto comps = g.connected_components();
  if (comps.size() > 1) {
    result = 0;
    for (const auto& comp : comps)
      result = std::max(result, td_value(g.induced_subgraph(comp).first));
  } else if (g.edge_count() == 0) {
    result = 1;
  } else {
    result = n;
    VertexSet all = VertexSet::range(n);
    for (int v = 0; v < n; ++v) {
      Graph rest = g.induced_subgraph(set_minus(all, VertexSet{v})).first;
      result = std::min(result, 1 + td_value(rest));
    }
  }
  td_memo_.emplace(std::move(key), result);
  return result;
}

std::pair<int, TreedepthDecomposition> DepthSolver::treedepth(
    const Graph& g) const {
  if (g.vertex_count() > cap_)
    throw ResourceCapError("treedepth query exceeds vertex cap");
  TreedepthDecomposition deco;
  deco.depth = td_value(g);

  // Rebuild an optimal decomposition; smallest-label tie-breaking.
  std::function<void(const Graph&, int)> build = [&](const Graph& h,
                                                     int parent_label) {
    for (const VertexSet& comp : h.connected_components()) {
      Graph sub = h.induced_subgraph(comp).first;
      int n = sub.vertex_count();
      if (n == 0) continue;
      int target = td_value(sub);
      int best = -1, best_label = 0;
      if (sub.edge_count() == 0 && target == 1) {
        // Isolated vertices become siblings, each one a leaf.
        for (int lab : sub.labels()) {
          deco.parent[lab] = parent_label;
          if (parent_label == -1) deco.roots.push_back(lab);
        }
        continue;
      }
      VertexSet all = VertexSet::range(n);
      for (int v = 0; v < n; ++v) {
        Graph rest = sub.induced_subgraph(set_minus(all, VertexSet{v})).first;
        if (1 + td_value(rest) == target) {
          int lab = sub.label(v);
          if (best == -1 || lab < best_label) {
            best = v;
            best_label = lab;
          }
        }
      }
      deco.parent[best_label] = parent_label;
      if (parent_label == -1) deco.roots.push_back(best_label);
      Graph rest = sub.induced_subgraph(set_minus(all, VertexSet{best})).first;
      build(rest, best_label);
    }
  };
  build(g, -1);
  deco.audit(g);
  return {deco.depth, deco};
}

int DepthSolver::bd_value(const Graph& g) const {
  int n = g.vertex_count();
  if (n == 0) return 0;
  std::string key = graph_key(g);
  auto it = bd_memo_.find(key);
  if (it != bd_memo_.end()) return it->second;

  int result;
  auto comps = g.connected_components();
  if (comps.size() > 1) {
    result = 0;
    for (const auto& comp : comps)
      result = std::max(result, bd_value(g.induced_subgraph(comp).first));
  } else {
    Graph cb = g.contract_bridges().first;
    int m = cb.vertex_count();
    result = 1 + m;  // upper bound placeholder
    VertexSet all = VertexSet::range(m);
    for (int v = 0; v < m; ++v) {
      Graph rest = cb.induced_subgraph(set_minus(all, VertexSet{v})).first;
      result = std::min(result, 1 + bd_value(rest));
    }
  }
  bd_memo_.emplace(std::move(key), result);
  return result;
}

int DepthSolver::bridgedepth(const Graph& g) const {
  if (g.vertex_count() > cap_)
    throw ResourceCapError("bridgedepth query exceeds vertex cap");
  return bd_value(g);
}

LoweringTree DepthSolver::lowering_tree(const Graph& component) const {
  if (component.vertex_count() == 0 || !component.is_connected())
    throw std::invalid_argument("lowering_tree needs a connected component");
  if (component.vertex_count() > cap_)
    throw ResourceCapError("lowering_tree query exceeds vertex cap");
  auto [cb, preimages] = component.contract_bridges();
  int m = cb.vertex_count();
  VertexSet all = VertexSet::range(m);
  int best = -1, best_bd = 0, best_label = 0;
  for (int v = 0; v < m; ++v) {
    Graph rest = cb.induced_subgraph(set_minus(all, VertexSet{v})).first;
    int bd = bd_value(rest);
    int lab = cb.label(v);
    if (best == -1 || bd < best_bd || (bd == best_bd && lab < best_label)) {
      best = v;
      best_bd = bd;
      best_label = lab;
    }
  }
  LoweringTree lt;
  lt.tree = tree_of_bridges_from_vertices(component, preimages[best]);
  lt.bd_before = bd_value(component);
  int after = bd_value(component.delete_vertices(lt.tree.vertices));
  if (after != lt.bd_before - 1)
    throw std::logic_error("lowering tree does not lower bd by one");
  return lt;
}

TreeOfBridges tree_of_bridges_from_vertices(const Graph& host,
                                            const VertexSet& vertices) {
  TreeOfBridges t;
  t.vertices = vertices;
  EdgeSet host_bridges = host.bridges();
  std::vector<Edge> es;
  for (const Edge& e : host_bridges)
    if (vertices.contains(e.u) && vertices.contains(e.v)) es.push_back(e);
  t.edges = EdgeSet(std::move(es));
  t.audit(host);
  return t;
}

TreeOfBridges longest_path(const Graph& host, const TreeOfBridges& t) {
  if (t.vertices.empty())
    throw std::invalid_argument("longest_path needs a nonempty tree");
  // Adjacency restricted to tree edges.
  std::unordered_map<int, std::vector<int>> adj;
  for (int v : t.vertices) adj[v];
  for (const Edge& e : t.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  auto bfs_far = [&](int s) {
    std::unordered_map<int, int> par;
    par[s] = s;
    std::deque<int> q{s};
    int last = s;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      last = v;
      for (int w : adj[v])
        if (!par.count(w)) {
          par[w] = v;
          q.push_back(w);
        }
    }
    return std::make_pair(last, par);
  };
  int a = bfs_far(t.vertices.front()).first;
  auto [b, par] = bfs_far(a);
  std::vector<int> path;
  for (int cur = b;; cur = par[cur]) {
    path.push_back(cur);
    if (cur == par[cur]) break;
  }
  return tree_of_bridges_from_vertices(host, VertexSet(std::move(path)));
}

}  // namespace enumkern
