#include "doctest.h"
#include "enumkern/vertex_set.hpp"

using namespace enumkern;

TEST_CASE("vertex set basics") {
  VertexSet s{3, 1, 2, 1};
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK(!s.contains(4));
  s.insert(4);
  s.insert(4);
  CHECK(s.size() == 4);
  s.erase(1);
  CHECK(!s.contains(1));
  CHECK(s.items() == std::vector<int>({2, 3, 4}));
}

TEST_CASE("set operations") {
  VertexSet a{1, 2, 3}, b{3, 4};
  CHECK(set_union(a, b) == VertexSet({1, 2, 3, 4}));
  CHECK(set_minus(a, b) == VertexSet({1, 2}));
  CHECK(set_intersect(a, b) == VertexSet({3}));
  CHECK(is_subset(VertexSet{1, 3}, a));
  CHECK(!is_subset(a, b));
  CHECK(disjoint(VertexSet{1}, VertexSet{2}));
  CHECK(!disjoint(a, b));
  CHECK(is_subset(VertexSet{}, b));
}

TEST_CASE("edge set normalizes pairs") {
  EdgeSet es({Edge(2, 1), Edge(1, 2), Edge(0, 3)});
  CHECK(es.size() == 2);
  CHECK(es.contains(Edge(1, 2)));
  CHECK(es.contains(Edge(2, 1)));
}
