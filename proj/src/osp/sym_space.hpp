#pragma once

#include "osp/dynkin.hpp"
#include "osp/root_system.hpp"

#include <memory>
#include <string>
#include <vector>

namespace osp {

enum class Family { SU2mSO2m, SU2mSpm, SOGrassmann, E6F4, E6Sp4 };

struct SpaceSpec {
  Family family = Family::E6F4;
  int m = 0, p = 0, q = 0;

  // Parses the stable kebab-case identifiers; throws ValidationError on an
  // unknown name or out-of-range parameters.
  static SpaceSpec make(const std::string& family_name, int m, int p, int q);
  void validate() const;
  std::string name() const;
  std::string params_str() const;  // "m=3" / "p=1,q=2" / ""
  bool parametric_m() const { return family == Family::SU2mSO2m || family == Family::SU2mSpm; }
};

struct Dims {
  long g = 0, k = 0, p = 0, t = 0, tK = 0, t0 = 0;
};

struct EngineCaps {
  int max_enum_log2 = 22;      // sign-pattern enumeration cap (log2)
  long orbit_cap = 1000000;    // Weyl orbit cap
  int dim_cap_log2 = 22;       // irrep dimension cap (log2)
  int arity_cap = 16;          // fiber minimizer arity cap
  long pos_root_cap = 10000;
  long w1_orbit_cap = 12000000;  // inner-pair Weyl orbit cap (Parthasarathy)
  RootSystemCaps root_caps() const {
    return RootSystemCaps{pos_root_cap, orbit_cap, Int(1) << dim_cap_log2};
  }
};

// sigma^* as a rational matrix on the ambient weight coordinates.
struct Involution {
  RatMat matrix;
};

struct RootPartition {
  std::vector<RatVec> phi1_plus, phi2_plus, phi3_prime_plus;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Everything the downstream modules need about one outer symmetric space:
// the ambient root system in the paper's coordinates, the involution, the
// root partition, the restriction to the isotropy torus and the K system.
class SymmetricSpace {
 public:
  SpaceSpec spec;
  Dims dims;
  EngineCaps caps;
  std::shared_ptr<const RootSystem> g;
  std::shared_ptr<const RootSystem> k;
  Involution sigma;
  RootPartition partition;
  RatMat restriction;                   // (rank K) x (ambient dim)
  std::vector<RatVec> k_basis_ambient;  // K coordinate basis inside the ambient space
  DynkinClassification k_type;
  std::vector<int> g_display_order;     // coordinate print order (paper convention)

  RatVec sigma_star(const RatVec& mu) const { return sigma.matrix.apply(mu); }
  RatVec restrict_weight(const RatVec& mu) const { return restriction.apply(mu); }

  // Lexicographic order in the paper's printed coordinate order.
  bool display_less(const RatVec& a, const RatVec& b) const;
  std::string display_g(const RatVec& mu) const;
  std::string display_k(const RatVec& lam) const;

  std::vector<CheckResult> verify_root_partition() const;
};

std::shared_ptr<const SymmetricSpace> build_space(const SpaceSpec& spec, const EngineCaps& caps = {});

const std::vector<std::string>& family_names();

}  // namespace osp
