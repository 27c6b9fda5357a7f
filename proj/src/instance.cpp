#include "enumkern/instance.hpp"

#include <stdexcept>

namespace enumkern {

std::string problem_name(Problem p) {
  switch (p) {
    case Problem::VC: return "vc";
    case Problem::IS: return "is";
    case Problem::AIS: return "ais";
  }
  return "?";
}

int EnumInstance::parameter() const {
  if (budget_k) return *budget_k;
  if (target_t) return *target_t;
  throw std::logic_error("instance has no parameter");
}

VertexSet EnumInstance::modulator_ids() const {
  if (!modulator) return {};
  return graph.ids_of_labels(*modulator);
}

void EnumInstance::validate() const {
  graph.audit_simple();
  if (problem == Problem::VC) {
    if (!budget_k || target_t)
      throw std::invalid_argument("vc instance needs budget k only");
    if (*budget_k < 0) throw std::invalid_argument("negative budget");
  } else {
    if (budget_k || !target_t)
      throw std::invalid_argument("is/ais instance needs target t only");
    if (*target_t < 0) throw std::invalid_argument("negative target");
  }
  if (modulator) {
    for (int l : *modulator)
      if (!graph.has_label(l))
        throw std::invalid_argument("modulator vertex outside graph");
  }
  if (!hyperedges.empty()) {
    if (problem != Problem::AIS)
      throw std::invalid_argument("hyperedges only valid for ais");
    if (!modulator) throw std::invalid_argument("hyperedges need a modulator");
    for (const auto& h : hyperedges) {
      if (h.empty()) throw std::invalid_argument("empty hyperedge");
      if (!is_subset(h, *modulator))
        throw std::invalid_argument("hyperedge outside modulator");
    }
  }
  if (c && *c < 0) throw std::invalid_argument("negative c");
}

EnumInstance make_vc_instance(Graph g, int k) {
  EnumInstance inst;
  inst.graph = std::move(g);
  inst.problem = Problem::VC;
  inst.budget_k = k;
  inst.validate();
  return inst;
}

EnumInstance make_is_instance(Graph g, int t, std::optional<VertexSet> modulator,
                              std::optional<int> c) {
  EnumInstance inst;
  inst.graph = std::move(g);
  inst.problem = Problem::IS;
  inst.target_t = t;
  inst.modulator = std::move(modulator);
  inst.c = c;
  inst.validate();
  return inst;
}

EnumInstance make_ais_instance(Graph g, int t, VertexSet modulator,
                               std::vector<VertexSet> hyperedges,
                               std::optional<int> c) {
  EnumInstance inst;
  inst.graph = std::move(g);
  inst.problem = Problem::AIS;
  inst.target_t = t;
  inst.modulator = std::move(modulator);
  inst.hyperedges = std::move(hyperedges);
  inst.c = c;
  inst.validate();
  return inst;
}

EnumInstance dualize(const EnumInstance& inst) {
  if (inst.problem != Problem::VC)
    throw std::invalid_argument("dualize expects a vc instance");
  int n = inst.graph.vertex_count();
  int k = *inst.budget_k;
  if (k > n)
    throw std::invalid_argument("dualize rejects k > n");
  EnumInstance out;
  out.graph = inst.graph;
  out.problem = Problem::IS;
  out.target_t = n - k;
  out.modulator = inst.modulator;
  out.c = inst.c;
  out.validate();
  return out;
}

}  // namespace enumkern
