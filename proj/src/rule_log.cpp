#include "enumkern/rule_log.hpp"

#include <sstream>

namespace enumkern {

using nlohmann::json;

json graph_to_json(const Graph& g) {
  json j;
  j["labels"] = g.labels();
  json edges = json::array();
  for (const Edge& e : g.edges())
    edges.push_back({g.label(e.u), g.label(e.v)});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const json& j) {
  std::vector<int> labels = j.at("labels").get<std::vector<int>>();
  std::unordered_map<int, int> id;
  for (size_t i = 0; i < labels.size(); ++i) id[labels[i]] = (int)i;
  std::vector<Edge> es;
  for (const auto& e : j.at("edges"))
    es.emplace_back(id.at(e.at(0).get<int>()), id.at(e.at(1).get<int>()));
  return Graph::build(std::move(labels), es);
}

json instance_to_json(const EnumInstance& inst) {
  json j;
  j["problem"] = problem_name(inst.problem);
  j["graph"] = graph_to_json(inst.graph);
  if (inst.budget_k) j["k"] = *inst.budget_k;
  if (inst.target_t) j["t"] = *inst.target_t;
  if (inst.modulator) j["x"] = inst.modulator->items();
  if (!inst.hyperedges.empty()) {
    json hs = json::array();
    for (const auto& h : inst.hyperedges) hs.push_back(h.items());
    j["h"] = std::move(hs);
  }
  if (inst.c) j["c"] = *inst.c;
  return j;
}

EnumInstance instance_from_json(const json& j) {
  EnumInstance inst;
  std::string p = j.at("problem").get<std::string>();
  inst.problem = p == "vc" ? Problem::VC : p == "is" ? Problem::IS : Problem::AIS;
  inst.graph = graph_from_json(j.at("graph"));
  if (j.contains("k")) inst.budget_k = j.at("k").get<int>();
  if (j.contains("t")) inst.target_t = j.at("t").get<int>();
  if (j.contains("x"))
    inst.modulator = VertexSet(j.at("x").get<std::vector<int>>());
  if (j.contains("h"))
    for (const auto& h : j.at("h"))
      inst.hyperedges.emplace_back(h.get<std::vector<int>>());
  if (j.contains("c")) inst.c = j.at("c").get<int>();
  inst.validate();
  return inst;
}

json GraphOp::to_json() const {
  static const char* names[] = {"add_edge", "remove_edge", "remove_vertex",
                                "identify"};
  json j;
  j["op"] = names[static_cast<int>(kind)];
  j["a"] = a;
  if (kind != Kind::RemoveVertex) j["b"] = b;
  return j;
}

GraphOp GraphOp::from_json(const json& j) {
  GraphOp op;
  std::string name = j.at("op").get<std::string>();
  if (name == "add_edge") op.kind = Kind::AddEdge;
  else if (name == "remove_edge") op.kind = Kind::RemoveEdge;
  else if (name == "remove_vertex") op.kind = Kind::RemoveVertex;
  else if (name == "identify") op.kind = Kind::Identify;
  else throw std::invalid_argument("unknown graph op '" + name + "'");
  op.a = j.at("a").get<int>();
  if (j.contains("b")) op.b = j.at("b").get<int>();
  return op;
}

json RuleLogEntry::to_json() const {
  json j;
  j["rule"] = rule;
  if (!ops.empty()) {
    json os = json::array();
    for (const GraphOp& op : ops) os.push_back(op.to_json());
    j["ops"] = std::move(os);
  }
  if (param_delta != 0) j["param_delta"] = param_delta;
  if (!modulator_add.empty()) j["modulator_add"] = modulator_add;
  if (!modulator_remove.empty()) j["modulator_remove"] = modulator_remove;
  if (!hyperedges_add.empty()) j["hyperedges_add"] = hyperedges_add;
  if (replaces_instance) j["replacement"] = replacement;
  if (!meta.is_null()) j["meta"] = meta;
  return j;
}

RuleLogEntry RuleLogEntry::from_json(const json& j) {
  RuleLogEntry e;
  e.rule = j.at("rule").get<std::string>();
  if (j.contains("ops"))
    for (const auto& op : j.at("ops")) e.ops.push_back(GraphOp::from_json(op));
  if (j.contains("param_delta")) e.param_delta = j.at("param_delta").get<int>();
  if (j.contains("modulator_add"))
    e.modulator_add = j.at("modulator_add").get<std::vector<int>>();
  if (j.contains("modulator_remove"))
    e.modulator_remove = j.at("modulator_remove").get<std::vector<int>>();
  if (j.contains("hyperedges_add"))
    e.hyperedges_add =
        j.at("hyperedges_add").get<std::vector<std::vector<int>>>();
  if (j.contains("replacement")) {
    e.replaces_instance = true;
    e.replacement = j.at("replacement");
  }
  if (j.contains("meta")) e.meta = j.at("meta");
  return e;
}

std::string RuleLog::to_jsonl() const {
  std::ostringstream out;
  json head;
  head["kernel"] = kernel;
  head["header"] = header;
  out << head.dump() << '\n';
  for (const RuleLogEntry& e : entries) out << e.to_json().dump() << '\n';
  return out.str();
}

RuleLog RuleLog::from_jsonl(const std::string& text) {
  RuleLog log;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    if (first) {
      log.kernel = j.at("kernel").get<std::string>();
      log.header = j.value("header", json());
      first = false;
    } else {
      log.entries.push_back(RuleLogEntry::from_json(j));
    }
  }
  if (first) throw std::invalid_argument("empty rule log");
  return log;
}

EnumInstance apply_entry(const EnumInstance& inst, const RuleLogEntry& e) {
  if (e.replaces_instance) return instance_from_json(e.replacement);

  EnumInstance out = inst;
  Graph g = out.graph;
  for (const GraphOp& op : e.ops) {
    switch (op.kind) {
      case GraphOp::Kind::AddEdge:
        g = g.add_edges(EdgeSet({Edge(g.id_of_label(op.a), g.id_of_label(op.b))}));
        break;
      case GraphOp::Kind::RemoveEdge:
        g = g.delete_edges(
            EdgeSet({Edge(g.id_of_label(op.a), g.id_of_label(op.b))}));
        break;
      case GraphOp::Kind::RemoveVertex:
        g = g.delete_vertices(VertexSet{g.id_of_label(op.a)});
        break;
      case GraphOp::Kind::Identify:
        g = g.identify(g.id_of_label(op.a), g.id_of_label(op.b));
        break;
    }
  }
  out.graph = std::move(g);
  if (e.param_delta != 0) {
    if (out.budget_k) *out.budget_k += e.param_delta;
    else *out.target_t += e.param_delta;
  }
  if (out.modulator || !e.modulator_add.empty()) {
    VertexSet x = out.modulator.value_or(VertexSet{});
    for (int l : e.modulator_add) x.insert(l);
    for (int l : e.modulator_remove) x.erase(l);
    out.modulator = std::move(x);
  }
  for (const auto& h : e.hyperedges_add) out.hyperedges.emplace_back(h);
  // Removed vertices silently leave the modulator as well.
  if (out.modulator) {
    VertexSet x;
    for (int l : *out.modulator)
      if (out.graph.has_label(l)) x.insert(l);
    out.modulator = std::move(x);
  }
  out.validate();
  return out;
}

EnumInstance replay_rule_log(const EnumInstance& input, const RuleLog& log) {
  EnumInstance cur = input;
  for (const RuleLogEntry& e : log.entries) cur = apply_entry(cur, e);
  return cur;
}

}  // namespace enumkern
