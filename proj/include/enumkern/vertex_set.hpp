#pragma once

#include <initializer_list>
#include <ostream>
#include <vector>

namespace enumkern {

// Sorted, duplicate-free set of vertex identifiers. Depending on context the
// entries are internal ids of some graph or stable external labels.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> xs) : v_(xs) { normalize(); }
  explicit VertexSet(std::vector<int> xs) : v_(std::move(xs)) { normalize(); }

  static VertexSet range(int n);

  bool contains(int x) const;
  bool empty() const { return v_.empty(); }
  int size() const { return static_cast<int>(v_.size()); }
  void insert(int x);
  void erase(int x);
  void clear() { v_.clear(); }
  int front() const { return v_.front(); }
  int back() const { return v_.back(); }

  const std::vector<int>& items() const { return v_; }
  std::vector<int>::const_iterator begin() const { return v_.begin(); }
  std::vector<int>::const_iterator end() const { return v_.end(); }

  bool operator==(const VertexSet& o) const { return v_ == o.v_; }
  bool operator!=(const VertexSet& o) const { return v_ != o.v_; }
  bool operator<(const VertexSet& o) const { return v_ < o.v_; }

 private:
  std::vector<int> v_;
  void normalize();
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

// Unordered vertex pair with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
  bool operator<(const Edge& o) const {
    return u != o.u ? u < o.u : v < o.v;
  }
};

// Sorted, duplicate-free edge list.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> es) : e_(std::move(es)) { normalize(); }

  bool contains(const Edge& e) const;
  void insert(const Edge& e);
  bool empty() const { return e_.empty(); }
  int size() const { return static_cast<int>(e_.size()); }
  const std::vector<Edge>& items() const { return e_; }
  std::vector<Edge>::const_iterator begin() const { return e_.begin(); }
  std::vector<Edge>::const_iterator end() const { return e_.end(); }
  bool operator==(const EdgeSet& o) const { return e_ == o.e_; }

 private:
  std::vector<Edge> e_;
  void normalize();
};

}  // namespace enumkern
