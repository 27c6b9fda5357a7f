#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enumkern/graph.hpp"
#include "enumkern/vertex_set.hpp"

namespace enumkern {

enum class Problem { VC, IS, AIS };

std::string problem_name(Problem p);

// One enumeration instance. The modulator and the hyperedges are stored as
// external label sets so they stay meaningful while the graph is edited.
//   VC:  all vertex covers of size at most budget_k.
//   IS:  all independent sets of size at least target_t.
//   AIS: independent sets of size at least target_t containing no hyperedge.
struct EnumInstance {
  Graph graph;
  Problem problem = Problem::IS;
  std::optional<int> budget_k;
  std::optional<int> target_t;
  std::optional<VertexSet> modulator;         // labels
  std::vector<VertexSet> hyperedges;          // labels, each within modulator
  std::optional<int> c;                       // structural constant (td / bd)

  int parameter() const;                      // k or t, whichever is set
  VertexSet modulator_ids() const;
  // Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

EnumInstance make_vc_instance(Graph g, int k);
EnumInstance make_is_instance(Graph g, int t,
                              std::optional<VertexSet> modulator = {},
                              std::optional<int> c = {});
EnumInstance make_ais_instance(Graph g, int t, VertexSet modulator,
                               std::vector<VertexSet> hyperedges,
                               std::optional<int> c = {});

// VC (H,k) -> IS (G, t = n-k) on the same graph; modulator and c carry over.
// Rejects k > n.
EnumInstance dualize(const EnumInstance& inst);

// Parse error with 1-based line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
};

// On-disk grammar, one record per line:
//   p <vc|is|ais> <n> <m>
//   e <u> <v>            (m lines, 1-indexed)
//   x <v1> ... <vr>      (optional modulator)
//   h <v1> ... <vs>      (optional hyperedge, repeatable)
//   c <int>              (optional)
//   k <int> | t <int>    (exactly one)
EnumInstance parse_instance(const std::string& text);
// Canonical form: header, sorted edges, sorted modulator, sorted hyperedges,
// c line, parameter line. Vertices are written compacted to 1..n in label
// order. parse(serialize(x)) == serialize-normal-form of x.
std::string serialize_instance(const EnumInstance& inst);

// One solution per line, sorted labels space-separated, empty set as "-".
std::string format_solution(const VertexSet& labels);

}  // namespace enumkern
