#pragma once

#include "osp/linalg.hpp"
#include "osp/rational.hpp"

#include <stdexcept>
#include <string>

namespace osp {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Raised when the solver declines to report a result it cannot certify.
struct RefusalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BasisMismatchError : ValidationError {
  BasisMismatchError(const std::string& a, const std::string& b)
      : ValidationError("weight basis mismatch: '" + a + "' vs '" + b + "'") {}
};

// A coordinate vector in a tagged basis. Weights from different bases never
// meet in one arithmetic expression; operations check the tag.
struct Weight {
  std::string basis;
  RatVec coords;

  bool operator==(const Weight& o) const { return basis == o.basis && coords == o.coords; }
};

inline void require_same_basis(const Weight& a, const Weight& b) {
  if (a.basis != b.basis) throw BasisMismatchError(a.basis, b.basis);
}

// Symmetric positive definite form on a tagged coordinate space.
struct BilinearForm {
  std::string basis;
  RatMat gram;

  void validate() const {
    if (!positive_definite(gram))
      throw ValidationError("bilinear form on '" + basis + "' is not symmetric positive definite");
  }
};

inline bool rat_vec_less(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

}  // namespace osp
