#pragma once

#include <vector>

#include "enumkern/instance.hpp"

namespace enumkern {

// Exhaustive solution set, in external labels, sorted in the lexicographic
// stream order for the ascending-label vertex order. Guarded at n <= 20.
//   VC:  covers of size <= k.
//   IS:  independent sets of size >= t.
//   AIS: independent sets of size >= t containing no hyperedge.
std::vector<VertexSet> brute_solutions(const EnumInstance& inst);

// Sorts label sets in the canonical stream order.
void sort_lex_by_label(std::vector<VertexSet>& sols);

}  // namespace enumkern
