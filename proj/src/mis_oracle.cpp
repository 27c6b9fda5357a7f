#include "enumkern/mis_oracle.hpp"

#include <algorithm>
#include <sstream>

namespace enumkern {

int alpha_forest(const Graph& g) {
  if (!g.is_forest()) throw std::invalid_argument("alpha_forest needs a forest");
  int n = g.vertex_count();
  std::vector<int> take(n, 0), skip(n, 0);
  std::vector<char> done(n, 0);
  int total = 0;
  for (const VertexSet& comp : g.connected_components()) {
    int root = comp.front();
    // Post-order over the tree.
    std::vector<std::pair<int, int>> stack{{root, -1}};
    std::vector<std::pair<int, int>> order;
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      order.emplace_back(v, parent);
      for (int w : g.neighbors(v))
        if (w != parent) stack.emplace_back(w, v);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, parent] = *it;
      take[v] = 1;
      skip[v] = 0;
      for (int w : g.neighbors(v)) {
        if (w == parent || !done[w]) continue;
        take[v] += skip[w];
        skip[v] += std::max(take[w], skip[w]);
      }
      done[v] = 1;
    }
    total += std::max(take[root], skip[root]);
  }
  return total;
}

int alpha_forest_induced(const Graph& g, const VertexSet& ids) {
  return alpha_forest(g.induced_subgraph(ids).first);
}

namespace {

std::string memo_key(const Graph& g) {
  // Exact labeled subgraph key: sorted labels plus edges in label terms.
  std::ostringstream key;
  std::vector<int> labels = g.labels();
  std::sort(labels.begin(), labels.end());
  for (int l : labels) key << l << ',';
  key << '|';
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    es.emplace_back(g.label(e.u), g.label(e.v));
  std::sort(es.begin(), es.end());
  for (const Edge& e : es) key << e.u << '-' << e.v << ',';
  return key.str();
}

}  // namespace

int MisOracle::alpha(const Graph& g) const {
  if (g.vertex_count() > cap_)
    throw ResourceCapError("alpha query exceeds vertex cap (" +
                           std::to_string(g.vertex_count()) + " > " +
                           std::to_string(cap_) + ")");
  return solve(g);
}

int MisOracle::alpha_induced(const Graph& g, const VertexSet& ids) const {
  return alpha(g.induced_subgraph(ids).first);
}

int MisOracle::solve(const Graph& g) const {
  int n = g.vertex_count();
  if (n == 0) return 0;

  bool cacheable = n <= kMemoMaxVertices;
  std::string key;
  if (cacheable) {
    key = memo_key(g);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  // Greedy reductions: isolated vertices are always taken, degree-1 vertices
  // can be taken ahead of their neighbor.
  VertexSet keep = VertexSet::range(n);
  int gained = 0;
  bool changed = true;
  std::vector<char> alive(n, 1);
  auto live_degree = [&](int v) {
    int d = 0;
    for (int w : g.neighbors(v)) d += alive[w];
    return d;
  };
  while (changed) {
    changed = false;
    for (int v = 0; v < n && !changed; ++v) {
      if (!alive[v]) continue;
      int d = live_degree(v);
      if (d == 0) {
        alive[v] = 0;
        ++gained;
        changed = true;
      } else if (d == 1) {
        alive[v] = 0;
        for (int w : g.neighbors(v))
          if (alive[w]) alive[w] = 0;
        ++gained;
        changed = true;
      }
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (alive[v]) rest.push_back(v);

  int result;
  if (rest.empty()) {
    result = gained;
  } else {
    Graph h = g.induced_subgraph(VertexSet(rest)).first;
    auto comps = h.connected_components();
    if (comps.size() > 1) {
      int sum = 0;
      for (const auto& comp : comps)
        sum += solve(h.induced_subgraph(comp).first);
      result = gained + sum;
    } else {
      int best_v = 0;
      for (int v = 1; v < h.vertex_count(); ++v)
        if (h.degree(v) > h.degree(best_v)) best_v = v;
      VertexSet all = VertexSet::range(h.vertex_count());
      // Branch: take best_v or leave it out.
      Graph without = h.induced_subgraph(set_minus(all, VertexSet{best_v})).first;
      Graph taken = h.induced_subgraph(
          set_minus(all, h.closed_neighborhood(VertexSet{best_v}))).first;
      result = gained + std::max(solve(without), 1 + solve(taken));
    }
  }

  if (cacheable) {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(std::move(key), result);
  }
  return result;
}

bool MisOracle::is_extension(const Graph& g, const VertexSet& m,
                             const VertexSet& p, int t) const {
  if (!disjoint(m, p))
    throw std::invalid_argument("is_extension: m and p overlap");
  if (!g.is_independent(m)) return false;
  if (m.size() >= t) return true;
  VertexSet blocked = set_union(g.closed_neighborhood(m), p);
  VertexSet free = set_minus(VertexSet::range(g.vertex_count()), blocked);
  return alpha_induced(g, free) >= t - m.size();
}

int conflicts(const Graph& g, const VertexSet& region, const VertexSet& probe,
              const MisOracle& oracle) {
  if (!disjoint(region, probe))
    throw std::invalid_argument("conflicts: probe overlaps region");
  int whole = oracle.alpha_induced(g, region);
  VertexSet hit = set_minus(region, g.open_neighborhood(probe));
  int rest = oracle.alpha_induced(g, hit);
  return whole - rest;
}

namespace {

void chunk_rec(const Graph& g, const std::vector<int>& pool, size_t from,
               VertexSet& cur, int max_size,
               const std::vector<VertexSet>& forbidden,
               std::vector<VertexSet>& out) {
  out.push_back(cur);
  if (cur.size() == max_size) return;
  for (size_t i = from; i < pool.size(); ++i) {
    int v = pool[i];
    bool ok = true;
    for (int u : cur)
      if (g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.insert(v);
    for (const VertexSet& f : forbidden)
      if (is_subset(f, cur)) {
        ok = false;
        break;
      }
    if (ok) chunk_rec(g, pool, i + 1, cur, max_size, forbidden, out);
    cur.erase(v);
  }
}

}  // namespace

std::vector<VertexSet> enumerate_chunks(const Graph& g, const VertexSet& x,
                                        int max_size,
                                        const std::vector<VertexSet>& forbidden) {
  std::vector<VertexSet> out;
  VertexSet cur;
  chunk_rec(g, x.items(), 0, cur, max_size, forbidden, out);
  return out;
}

int chunk_degree(const Graph& g, const std::vector<VertexSet>& components,
                 const VertexSet& chunk, const MisOracle& oracle) {
  int deg = 0;
  for (const VertexSet& comp : components)
    if (conflicts(g, comp, chunk, oracle) > 0) ++deg;
  return deg;
}

bool is_free(const Graph& g, const std::vector<VertexSet>& chunks,
             const VertexSet& z, const MisOracle& oracle) {
  for (const VertexSet& y : chunks)
    if (conflicts(g, z, y, oracle) > 0) return false;
  return true;
}

bool is_almost_free(const Graph& g, const std::vector<VertexSet>& chunks,
                    const VertexSet& z, const VertexSet& rest, int y,
                    const MisOracle& oracle) {
  for (const VertexSet& chunk : chunks) {
    if (conflicts(g, z, chunk, oracle) > 0 &&
        conflicts(g, rest, chunk, oracle) < y)
      return false;
  }
  return true;
}

}  // namespace enumkern
