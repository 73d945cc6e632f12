#pragma once

#include "osp/sym_space.hpp"

#include <vector>

namespace osp {

// The affine lattice of integral G-weights restricting to a fixed K-weight:
// basepoint + integer combinations of the displacement basis. Built by an
// integer affine solve in fundamental-weight coordinates, so integrality of
// the G-weight lattice is enforced by construction.
struct FiberLattice {
  RatVec lambda_k;
  RatVec basepoint;                    // ambient coordinates
  std::vector<RatVec> displacements;   // ambient coordinates
  int arity = 0;

  RatVec point(const std::vector<long>& k) const;
};

FiberLattice fiber_lattice(const SymmetricSpace& S, const RatVec& lambda_k);

struct FiberMinima {
  std::vector<RatVec> minimizers;  // all lattice points achieving the minimum
  Rat min_shifted_norm;            // ||mu + delta_G||^2 at the minimum
};

// All lattice points of the fiber minimizing ||mu + delta_G||^2, by exact
// branch-and-bound around the rational unconstrained minimizer.
FiberMinima minimize_over_fiber(const SymmetricSpace& S, const FiberLattice& fl);

// All fiber points with ||mu + delta_G||^2 <= bound (used by the optimality
// certification sweep and by test oracles).
std::vector<RatVec> enumerate_fiber_below(const SymmetricSpace& S, const FiberLattice& fl,
                                          const Rat& bound);

}  // namespace osp
