#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "enumkern/instance.hpp"

namespace enumkern {

// Label-preserving JSON forms (the on-disk text format compacts labels;
// these do not).
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const EnumInstance& inst);
EnumInstance instance_from_json(const nlohmann::json& j);

// One primitive graph edit, in external labels.
struct GraphOp {
  enum class Kind { AddEdge, RemoveEdge, RemoveVertex, Identify };
  Kind kind;
  int a = 0;
  int b = 0;  // unused for RemoveVertex; Identify keeps a, merges b

  nlohmann::json to_json() const;
  static GraphOp from_json(const nlohmann::json& j);
};

// One rule application. Replaying the ops (in order), the parameter delta and
// the modulator / hyperedge updates on the instance the rule saw reproduces
// the instance it produced; `replacement` swaps in a whole new instance
// instead (degenerate outputs and trivial no-instances).
struct RuleLogEntry {
  std::string rule;
  std::vector<GraphOp> ops;
  int param_delta = 0;
  std::vector<int> modulator_add;
  std::vector<int> modulator_remove;
  std::vector<std::vector<int>> hyperedges_add;
  bool replaces_instance = false;
  nlohmann::json replacement;
  nlohmann::json meta;  // lift context: crowns, removed components, gadget map

  nlohmann::json to_json() const;
  static RuleLogEntry from_json(const nlohmann::json& j);
};

struct RuleLog {
  std::string kernel;       // which kernel wrote the log
  nlohmann::json header;    // core map and kernel-level context
  std::vector<RuleLogEntry> entries;

  std::string to_jsonl() const;
  static RuleLog from_jsonl(const std::string& text);
};

EnumInstance apply_entry(const EnumInstance& inst, const RuleLogEntry& e);
EnumInstance replay_rule_log(const EnumInstance& input, const RuleLog& log);

}  // namespace enumkern
