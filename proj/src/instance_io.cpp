#include <algorithm>
#include <map>
#include <sstream>

#include "enumkern/instance.hpp"

namespace enumkern {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& s, int line) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "malformed integer '" + s + "'");
  }
}

}  // namespace

EnumInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  bool have_header = false;
  Problem problem = Problem::IS;
  int n = 0, m = 0;
  std::vector<Edge> edges;
  std::optional<VertexSet> modulator;
  std::vector<VertexSet> hyperedges;
  std::optional<int> cval, kval, tval;

  auto check_vertex = [&](int v, int ln) {
    if (v < 1 || v > n) throw ParseError(ln, "vertex out of range");
    return v - 1;  // 1-indexed on disk, 0-based internally
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& tag = toks[0];
    if (tag == "p") {
      if (have_header) throw ParseError(lineno, "duplicate header");
      if (toks.size() != 4) throw ParseError(lineno, "malformed header");
      if (toks[1] == "vc") problem = Problem::VC;
      else if (toks[1] == "is") problem = Problem::IS;
      else if (toks[1] == "ais") problem = Problem::AIS;
      else throw ParseError(lineno, "unknown problem '" + toks[1] + "'");
      n = parse_int(toks[2], lineno);
      m = parse_int(toks[3], lineno);
      if (n < 0 || m < 0) throw ParseError(lineno, "negative header counts");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(lineno, "record before header");
    if (tag == "e") {
      if (toks.size() != 3) throw ParseError(lineno, "malformed edge line");
      int u = check_vertex(parse_int(toks[1], lineno), lineno);
      int v = check_vertex(parse_int(toks[2], lineno), lineno);
      if (u == v) throw ParseError(lineno, "self-loop");
      Edge e(u, v);
      if (std::find(edges.begin(), edges.end(), e) != edges.end())
        throw ParseError(lineno, "duplicate edge");
      edges.push_back(e);
    } else if (tag == "x") {
      if (modulator) throw ParseError(lineno, "duplicate modulator line");
      std::vector<int> xs;
      for (size_t i = 1; i < toks.size(); ++i)
        xs.push_back(check_vertex(parse_int(toks[i], lineno), lineno) + 1);
      modulator = VertexSet(std::move(xs));
    } else if (tag == "h") {
      if (toks.size() < 2) throw ParseError(lineno, "empty hyperedge");
      std::vector<int> hs;
      for (size_t i = 1; i < toks.size(); ++i)
        hs.push_back(check_vertex(parse_int(toks[i], lineno), lineno) + 1);
      VertexSet h(std::move(hs));
      if (!modulator || !is_subset(h, *modulator))
        throw ParseError(lineno, "hyperedge outside modulator");
      hyperedges.push_back(std::move(h));
    } else if (tag == "c") {
      if (toks.size() != 2 || cval) throw ParseError(lineno, "malformed c line");
      cval = parse_int(toks[1], lineno);
    } else if (tag == "k") {
      if (toks.size() != 2 || kval || tval)
        throw ParseError(lineno, "malformed parameter line");
      kval = parse_int(toks[1], lineno);
    } else if (tag == "t") {
      if (toks.size() != 2 || kval || tval)
        throw ParseError(lineno, "malformed parameter line");
      tval = parse_int(toks[1], lineno);
    } else {
      throw ParseError(lineno, "unknown record '" + tag + "'");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(lineno, "edge count differs from header");
  if (!kval && !tval) throw ParseError(lineno, "missing parameter line");
  if (problem == Problem::VC && !kval)
    throw ParseError(lineno, "vc instance needs k");
  if (problem != Problem::VC && !tval)
    throw ParseError(lineno, "is/ais instance needs t");

  EnumInstance inst;
  // Disk vertices 1..n become labels 1..n.
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  inst.graph = Graph::build(std::move(labels), edges);
  inst.problem = problem;
  inst.budget_k = kval;
  inst.target_t = tval;
  inst.modulator = std::move(modulator);
  inst.hyperedges = std::move(hyperedges);
  inst.c = cval;
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
  return inst;
}

std::string serialize_instance(const EnumInstance& inst) {
  // Compact labels to 1..n in ascending label order.
  std::vector<int> sorted_labels = inst.graph.labels();
  std::sort(sorted_labels.begin(), sorted_labels.end());
  std::map<int, int> compact;
  for (size_t i = 0; i < sorted_labels.size(); ++i)
    compact[sorted_labels[i]] = static_cast<int>(i) + 1;

  std::vector<Edge> es;
  for (const Edge& e : inst.graph.edges())
    es.emplace_back(compact[inst.graph.label(e.u)],
                    compact[inst.graph.label(e.v)]);
  std::sort(es.begin(), es.end());

  std::ostringstream out;
  out << "p " << problem_name(inst.problem) << ' '
      << inst.graph.vertex_count() << ' ' << es.size() << '\n';
  for (const Edge& e : es) out << "e " << e.u << ' ' << e.v << '\n';
  if (inst.modulator) {
    out << "x";
    for (int l : *inst.modulator) out << ' ' << compact[l];
    out << '\n';
  }
  std::vector<std::vector<int>> hs;
  for (const auto& h : inst.hyperedges) {
    std::vector<int> hh;
    for (int l : h) hh.push_back(compact[l]);
    std::sort(hh.begin(), hh.end());
    hs.push_back(std::move(hh));
  }
  std::sort(hs.begin(), hs.end());
  for (const auto& h : hs) {
    out << "h";
    for (int v : h) out << ' ' << v;
    out << '\n';
  }
  if (inst.c) out << "c " << *inst.c << '\n';
  if (inst.problem == Problem::VC)
    out << "k " << *inst.budget_k << '\n';
  else
    out << "t " << *inst.target_t << '\n';
  return out.str();
}

std::string format_solution(const VertexSet& labels) {
  if (labels.empty()) return "-";
  std::ostringstream out;
  bool first = true;
  for (int l : labels) {
    if (!first) out << ' ';
    out << l;
    first = false;
  }
  return out.str();
}

}  // namespace enumkern
