#pragma once

#include "osp/weight.hpp"

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace osp {

enum class WeightClass { DominantIntegral, IntegralNotDominant, NonIntegral };

struct RootSystemCaps {
  long positive_root_cap = 10000;
  long orbit_cap = 1000000;
  Int dimension_cap = Int(1) << 22;
};

// Finite (possibly reducible) root system given by a simple system inside a
// rational inner-product space. Everything downstream -- Weyl vector,
// fundamental weights, orbits, dimensions, multiplicities -- is derived from
// the simple roots and the Gram matrix by exact arithmetic.
class RootSystem {
 public:
  RootSystem(std::string basis_tag, RatMat gram, std::vector<RatVec> simple_roots,
             RootSystemCaps caps = {});

  int rank() const { return (int)simple_.size(); }
  int ambient_dim() const { return gram_.rows(); }
  const std::string& basis() const { return basis_; }
  const RatMat& gram() const { return gram_; }
  const std::vector<RatVec>& simple_roots() const { return simple_; }
  const std::vector<RatVec>& positive_roots() const { return positive_; }
  const std::vector<std::vector<long>>& cartan() const { return cartan_; }
  const RatVec& weyl_vector() const { return delta_; }
  const std::vector<RatVec>& fundamental_weights() const { return omega_; }
  const RootSystemCaps& caps() const { return caps_; }

  Rat inner(const RatVec& a, const RatVec& b) const { return dot_form(a, gram_, b); }
  // <mu, alpha_i^vee>
  Rat pairing(const RatVec& mu, int i) const;
  RatVec pairings(const RatVec& mu) const;
  RatVec reflect(const RatVec& mu, int i) const;

  WeightClass classify(const RatVec& mu) const;
  bool is_dominant_integral(const RatVec& mu) const { return classify(mu) == WeightClass::DominantIntegral; }

  // Unique dominant weight in the W-orbit plus the number of simple
  // reflections applied to reach it.
  std::pair<RatVec, int> dominant_representative(const RatVec& mu) const;

  std::vector<RatVec> weyl_orbit(const RatVec& mu) const;

  Int weyl_dim(const RatVec& lambda) const;
  Rat casimir(const RatVec& mu) const { return inner(mu, add(mu, scale(delta_, Rat(2)))); }
  Rat shifted_norm(const RatVec& mu) const {  // ||mu + delta||^2
    RatVec s = add(mu, delta_);
    return inner(s, s);
  }

  // Fundamental-weight coordinates of an integral weight in the root span.
  std::vector<Int> omega_coords(const RatVec& mu) const;
  RatVec from_omega(const std::vector<Int>& n) const;
  // Coordinates in the simple-root basis; throws unless mu lies in the root
  // lattice span with the requested integrality.
  std::vector<Int> root_lattice_coords(const RatVec& mu) const;
  RatVec simple_basis_coords(const RatVec& mu) const;
  bool in_root_span(const RatVec& mu) const;

  Int weyl_order_bruteforce(long cap) const;  // |W| by closure over reflection matrices (test oracle aid)

 private:
  std::string basis_;
  RatMat gram_;
  std::vector<RatVec> simple_;
  std::vector<RatVec> coroot_;  // 2 alpha / <alpha,alpha>
  std::vector<RatVec> positive_;
  std::vector<std::vector<long>> cartan_;
  RatVec delta_;
  std::vector<RatVec> omega_;
  RatMat simple_coord_extractor_;  // c = E * v  gives v = sum c_i alpha_i  (for v in span)
  RatMat cartan_inv_t_;            // (A^{-T}) as rationals
  RootSystemCaps caps_;
};

// Weight multiplicities of the irreducible module with highest weight lambda.
// Keys are fundamental-weight coordinates of the dominant weights; the full
// multiset is recovered by expanding Weyl orbits.
struct IrrepCharacter {
  std::vector<std::pair<std::vector<long>, long long>> dominant_mults;
  Int dimension;  // = weyl_dim(lambda), asserted equal to the expanded total
};

IrrepCharacter freudenthal_multiplicities(const RootSystem& rs, const RatVec& lambda);

// Full Weyl orbit of a weight given in fundamental-weight coordinates.
// Integer-only breadth-first closure under simple reflections.
std::vector<std::vector<long>> weyl_orbit_omega(const RootSystem& rs, const std::vector<long>& start,
                                                long cap);

// Multiplicity of a single weight of V(nu), with shared memoization. Used by
// the candidate-level spin peel where full characters would be too large.
class SingleWeightMultiplicity {
 public:
  SingleWeightMultiplicity(const RootSystem& rs, const RatVec& nu);
  long long multiplicity(const RatVec& mu);

 private:
  struct Impl;
  const RootSystem& rs_;
  std::shared_ptr<void> impl_;
};

}  // namespace osp
