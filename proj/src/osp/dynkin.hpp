#pragma once

#include "osp/root_system.hpp"

#include <string>
#include <vector>

namespace osp {

// Recognized Cartan type of a (possibly reducible) simple system, with a
// canonical reordering of the simple roots. Components are ordered by rank
// then label; within B/C/F components the short roots come first, which is
// the ordering under which the reference Cartan matrices are quoted.
struct DynkinClassification {
  std::string label;                       // e.g. "F4", "C4", "B2 x B4", "A1 x A1"
  std::vector<int> canonical_order;        // permutation of simple-root indices
  std::vector<std::vector<long>> cartan;   // A[i][j] = <a_i, a_j^vee> in canonical order
};

// Throws ValidationError carrying the Cartan matrix if the diagram is not of
// finite classical/exceptional type.
DynkinClassification classify_dynkin(const RootSystem& rs);

}  // namespace osp
