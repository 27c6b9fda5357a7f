#include "enumkern/matching_crown.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace enumkern {

VertexSet Matching::saturated() const {
  std::vector<int> vs;
  for (const Edge& e : edges) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  return VertexSet(std::move(vs));
}

void Matching::audit(const Graph& g) const {
  std::vector<int> seen;
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) throw std::logic_error("matching edge missing");
    seen.push_back(e.u);
    seen.push_back(e.v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::logic_error("vertex matched twice");
}

void CrownDecomposition::audit(const Graph& g) const {
  int n = g.vertex_count();
  if (!disjoint(crown, head) || !disjoint(crown, body) || !disjoint(head, body))
    throw std::logic_error("crown parts overlap");
  if (crown.size() + head.size() + body.size() != n)
    throw std::logic_error("crown parts do not partition V");
  if (!g.is_independent(crown)) throw std::logic_error("crown not independent");
  if (g.open_neighborhood(crown) != head)
    throw std::logic_error("N(crown) != head");
  saturating.audit(g);
  VertexSet sat_heads;
  for (const Edge& e : saturating.edges) {
    bool uh = head.contains(e.u), vh = head.contains(e.v);
    bool uc = crown.contains(e.u), vc = crown.contains(e.v);
    if (!((uh && vc) || (vh && uc)))
      throw std::logic_error("saturating edge not between head and crown");
    sat_heads.insert(uh ? e.u : e.v);
  }
  if (sat_heads != head) throw std::logic_error("head not saturated");
}

void HeavyCrown::audit(const Graph& g, int t) const {
  base.audit(g);
  if (base.body.size() + 2 * base.head.size() > 3 * t)
    throw std::logic_error("heavy crown bound violated");
  if (base.width() > t) throw std::logic_error("crown width exceeds t");
}

namespace {

struct BipartiteResult {
  Matching matching;
  VertexSet min_cover;
};

// Hopcroft-Karp on the edges between left and right, plus the König cover
// derived from alternating reachability.
BipartiteResult bipartite_matching_cover(const Graph& g, const VertexSet& left,
                                         const VertexSet& right) {
  if (!disjoint(left, right))
    throw std::invalid_argument("bipartite sides overlap");
  int n = g.vertex_count();
  std::vector<int> match(n, -1);
  std::vector<char> is_left(n, 0), is_right(n, 0);
  for (int v : left) is_left[v] = 1;
  for (int v : right) is_right[v] = 1;

  const int INF = 1 << 29;
  std::vector<int> dist(n, INF);

  auto bfs = [&]() {
    std::deque<int> q;
    for (int u : left) {
      if (match[u] == -1) {
        dist[u] = 0;
        q.push_back(u);
      } else {
        dist[u] = INF;
      }
    }
    bool found = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : g.neighbors(u)) {
        if (!is_right[w]) continue;
        int nxt = match[w];
        if (nxt == -1) {
          found = true;
        } else if (dist[nxt] == INF) {
          dist[nxt] = dist[u] + 1;
          q.push_back(nxt);
        }
      }
    }
    return found;
  };

  std::function<bool(int)> dfs = [&](int u) {
    for (int w : g.neighbors(u)) {
      if (!is_right[w]) continue;
      int nxt = match[w];
      if (nxt == -1 || (dist[nxt] == dist[u] + 1 && dfs(nxt))) {
        match[u] = w;
        match[w] = u;
        return true;
      }
    }
    dist[u] = INF;
    return false;
  };

  while (bfs()) {
    for (int u : left)
      if (match[u] == -1) dfs(u);
  }

  std::vector<Edge> medges;
  for (int u : left)
    if (match[u] != -1) medges.emplace_back(u, match[u]);

  // König: alternate from free left vertices; cover = (L \ Z) u (R n Z).
  std::vector<char> reached(n, 0);
  std::deque<int> q;
  for (int u : left)
    if (match[u] == -1) {
      reached[u] = 1;
      q.push_back(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (is_left[u]) {
      for (int w : g.neighbors(u)) {
        if (!is_right[w] || reached[w]) continue;
        if (match[u] == w) continue;  // only non-matching edges leftward
        reached[w] = 1;
        q.push_back(w);
      }
    } else {
      int u2 = match[u];
      if (u2 != -1 && !reached[u2]) {
        reached[u2] = 1;
        q.push_back(u2);
      }
    }
  }
  std::vector<int> cover;
  for (int u : left)
    if (!reached[u]) cover.push_back(u);
  for (int w : right)
    if (reached[w]) cover.push_back(w);

  BipartiteResult res;
  res.matching.edges = EdgeSet(std::move(medges));
  res.min_cover = VertexSet(std::move(cover));
  return res;
}

std::pair<VertexSet, VertexSet> two_color_forest(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> side0, side1;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      (color[v] == 0 ? side0 : side1).push_back(v);
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push_back(w);
        }
      }
    }
  }
  return {VertexSet(std::move(side0)), VertexSet(std::move(side1))};
}

}  // namespace

Matching hopcroft_karp(const Graph& g, const VertexSet& left,
                       const VertexSet& right) {
  return bipartite_matching_cover(g, left, right).matching;
}

Matching maximum_matching_forest(const Graph& g) {
  if (!g.is_forest())
    throw std::invalid_argument("maximum_matching_forest needs a forest");
  auto [a, b] = two_color_forest(g);
  return hopcroft_karp(g, a, b);
}

std::variant<Matching, HeavyCrown> heavy_crown_or_matching(const Graph& g,
                                                           int t) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      throw std::invalid_argument("heavy_crown_or_matching: isolated vertex");
  if (n < 3 * t + 1)
    throw std::invalid_argument("heavy_crown_or_matching needs |V| >= 3t+1");

  auto trim = [](const Matching& m, int sz) {
    std::vector<Edge> es(m.edges.items().begin(),
                         m.edges.items().begin() + sz);
    Matching out;
    out.edges = EdgeSet(std::move(es));
    return out;
  };

  // Greedy maximal matching, lowest ids first.
  Matching m1;
  {
    std::vector<char> used(n, 0);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u) {
      if (used[u]) continue;
      for (int w : g.neighbors(u)) {
        if (!used[w]) {
          used[u] = used[w] = 1;
          es.emplace_back(u, w);
          break;
        }
      }
    }
    m1.edges = EdgeSet(std::move(es));
  }
  if (m1.size() >= t + 1) return trim(m1, t + 1);

  VertexSet w = m1.saturated();
  VertexSet i = set_minus(VertexSet::range(n), w);
  BipartiteResult br = bipartite_matching_cover(g, w, i);
  if (br.matching.size() >= t + 1) return trim(br.matching, t + 1);

  HeavyCrown hc;
  hc.base.head = set_intersect(br.min_cover, w);
  hc.base.crown = set_minus(i, br.min_cover);
  hc.base.body = set_minus(VertexSet::range(n),
                           set_union(hc.base.head, hc.base.crown));
  // Body vertices whose whole neighborhood sits in the head can join the
  // crown: independence and N(C) = H are preserved and the body only shrinks.
  for (int v : hc.base.body) {
    bool inside = true;
    for (int u : g.neighbors(v))
      if (!hc.base.head.contains(u)) {
        inside = false;
        break;
      }
    if (inside) hc.base.crown.insert(v);
  }
  hc.base.body = set_minus(hc.base.body, hc.base.crown);
  std::vector<Edge> sat;
  for (const Edge& e : br.matching.edges) {
    int head_end = hc.base.head.contains(e.u) ? e.u
                 : hc.base.head.contains(e.v) ? e.v : -1;
    if (head_end != -1) sat.push_back(e);
  }
  hc.base.saturating.edges = EdgeSet(std::move(sat));
  hc.audit(g, t);
  return hc;
}

CrownDecomposition nt_crown(const Graph& g) {
  // Fixpoint of LP-crown extraction; labels are the stable currency across
  // the shrinking body graphs.
  VertexSet crown_labels, head_labels;
  Graph cur = g;
  while (cur.vertex_count() > 0) {
    int n = cur.vertex_count();
    // Bipartite double cover: ids 0..n-1 left, n..2n-1 right.
    std::vector<Edge> des;
    for (const Edge& e : cur.edges()) {
      des.emplace_back(e.u, e.v + n);
      des.emplace_back(e.v, e.u + n);
    }
    Graph dc = Graph::build(2 * n, des);
    VertexSet left = VertexSet::range(n);
    std::vector<int> rights(n);
    for (int v = 0; v < n; ++v) rights[v] = v + n;
    BipartiteResult br = bipartite_matching_cover(dc, left, VertexSet(rights));

    VertexSet c_stage, h_stage;
    for (int v = 0; v < n; ++v) {
      int x2 = (br.min_cover.contains(v) ? 1 : 0) +
               (br.min_cover.contains(v + n) ? 1 : 0);
      if (x2 == 0) c_stage.insert(v);
      if (x2 == 2) h_stage.insert(v);
    }
    if (c_stage.empty()) break;
    for (int v : c_stage) crown_labels.insert(cur.label(v));
    for (int v : h_stage) head_labels.insert(cur.label(v));
    VertexSet rest = set_minus(VertexSet::range(n), set_union(c_stage, h_stage));
    cur = cur.induced_subgraph(rest).first;
  }

  CrownDecomposition cd;
  cd.crown = g.ids_of_labels(crown_labels);
  cd.head = g.ids_of_labels(head_labels);
  cd.body = set_minus(VertexSet::range(g.vertex_count()),
                      set_union(cd.crown, cd.head));
  cd.saturating = hopcroft_karp(g, cd.head, cd.crown);
  cd.audit(g);
  return cd;
}

FvsImprovement improve_fvs(const Graph& g, const VertexSet& x_labels) {
  VertexSet x_ids = g.ids_of_labels(x_labels);
  VertexSet all = VertexSet::range(g.vertex_count());
  if (!g.induced_subgraph(set_minus(all, x_ids)).first.is_forest())
    throw std::invalid_argument("improve_fvs: X is not a feedback vertex set");

  FvsImprovement out;
  out.crown = nt_crown(g);
  out.body_graph = g.induced_subgraph(out.crown.body).first;

  VertexSet body_labels = g.labels_of_ids(out.crown.body);
  VertexSet x_hat = set_intersect(x_labels, body_labels);
  VertexSet rest_labels = set_minus(body_labels, x_hat);
  Graph forest = out.body_graph
                     .induced_subgraph(out.body_graph.ids_of_labels(rest_labels))
                     .first;
  Matching m = maximum_matching_forest(forest);
  VertexSet matched_labels = forest.labels_of_ids(m.saturated());
  out.unmatched = set_minus(rest_labels, matched_labels);
  out.x_new = set_union(x_hat, out.unmatched);

  if (out.x_new.size() > 2 * x_labels.size())
    throw std::logic_error("improve_fvs: |X_new| > 2|X|");
  // The remainder must be a forest with a perfect matching.
  VertexSet rem = set_minus(body_labels, out.x_new);
  Graph rem_g = out.body_graph
                    .induced_subgraph(out.body_graph.ids_of_labels(rem))
                    .first;
  Matching pm = maximum_matching_forest(rem_g);
  if (2 * pm.size() != rem_g.vertex_count())
    throw std::logic_error("improve_fvs: remainder has no perfect matching");
  return out;
}

}  // namespace enumkern
