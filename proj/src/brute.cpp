#include "enumkern/brute.hpp"

#include <algorithm>
#include <stdexcept>

#include "enumkern/flashlight.hpp"

namespace enumkern {

std::vector<VertexSet> brute_solutions(const EnumInstance& inst) {
  const Graph& g = inst.graph;
  int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("brute_solutions guarded at n <= 20");
  std::vector<VertexSet> hyper_ids;
  for (const auto& h : inst.hyperedges) hyper_ids.push_back(g.ids_of_labels(h));
  auto edges = g.edges();

  std::vector<VertexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) ids.push_back(v);
    VertexSet s(std::move(ids));
    bool ok = true;
    switch (inst.problem) {
      case Problem::VC: {
        if (s.size() > *inst.budget_k) { ok = false; break; }
        for (const Edge& e : edges)
          if (!s.contains(e.u) && !s.contains(e.v)) { ok = false; break; }
        break;
      }
      case Problem::AIS:
        for (const VertexSet& h : hyper_ids)
          if (is_subset(h, s)) { ok = false; break; }
        [[fallthrough]];
      case Problem::IS: {
        if (!ok) break;
        if (s.size() < *inst.target_t) { ok = false; break; }
        if (!g.is_independent(s)) ok = false;
        break;
      }
    }
    if (ok) out.push_back(g.labels_of_ids(s));
  }
  sort_lex_by_label(out);
  return out;
}

void sort_lex_by_label(std::vector<VertexSet>& sols) {
  // Label sets compared directly under the ascending-label order.
  int max_label = 0;
  for (const auto& s : sols)
    if (!s.empty()) max_label = std::max(max_label, s.back());
  VertexOrder ord = VertexOrder::identity(max_label + 1);
  std::sort(sols.begin(), sols.end(), [&](const VertexSet& a, const VertexSet& b) {
    return lex_compare(a, b, ord) < 0;
  });
}

}  // namespace enumkern
