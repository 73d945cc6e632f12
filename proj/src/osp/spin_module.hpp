#pragma once

#include "osp/sym_space.hpp"

#include <vector>

namespace osp {

// Weight multiset of the spin representation of K. Weights are stored as
// quadrupled integer coordinates in the K basis (every spin weight is a
// half-sum of restricted roots, whose coordinates are halves at worst).
struct SpinWeightTable {
  int r0 = 0;
  bool odd_case = false;                       // dim t0 odd
  long long multiplicity_factor = 1;           // 2^r0 (even) or 2^(r0-1) (odd)
  Int spinor_dim;                              // 2^floor(dim p / 2)
  std::vector<std::pair<std::vector<int>, long long>> entries;  // 4*weight -> multiplicity
};

struct SpinComponent {
  RatVec lambda;    // K coordinates
  long long mult;   // multiplicity in the spin module
  Int dim;          // dimension of the irreducible with highest weight lambda
};

struct SpinDecomposition {
  std::vector<SpinComponent> components;  // in peel order
  int r0 = 0;
  bool odd_case = false;
  Int spinor_dim;
  bool full_table_path = true;  // enumerated-table peel vs candidate-level peel
};

// Full sign-pattern enumeration of the spin weights (cap-guarded).
SpinWeightTable enumerate_spin_weights(const SymmetricSpace& S);

// K-dominant-integral weights of the necessary highest-weight form: all
// gamma' contributions positive, beta' signs free (cap-guarded).
std::vector<RatVec> highest_weight_candidates(const SymmetricSpace& S);

// Candidate highest weights from the inner-pair construction:
// w . delta_G1 - delta_K1 + (1/2) sum gamma', over the coset representatives
// w with w . Phi_G1+ containing Phi_K1+. Unfiltered; callers intersect with
// K-dominance.
std::vector<RatVec> parthasarathy_highest_weights(const SymmetricSpace& S);

// Decomposes the spin module into irreducibles. Uses greedy character peeling
// on the full table when the enumeration fits the cap, and an equivalent
// candidate-level peel (exact table multiplicities by meet-in-the-middle
// counting) when it does not. Both finish by checking the dimension identity
// sum(mult * dim) = 2^floor(dim p / 2).
SpinDecomposition decompose_spin(const SymmetricSpace& S);

}  // namespace osp
