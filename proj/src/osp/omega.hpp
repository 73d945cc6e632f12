#pragma once

#include "osp/root_system.hpp"

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace osp::detail {

struct LongVecHash {
  size_t operator()(const std::vector<long>& v) const {
    size_t h = 1469598103934665603ull;
    for (long x : v) {
      h ^= (size_t)x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Integer view of a root system in fundamental-weight coordinates: reflections
// and inner products become pure integer arithmetic. The Gram matrix of the
// fundamental weights is scaled to clear denominators; every formula that
// uses it is homogeneous in the form, so the scale cancels.
struct OmegaCtx {
  int R;
  std::vector<std::vector<long>> A;        // Cartan matrix
  std::vector<std::vector<long long>> G;   // scaled omega-basis Gram
  std::vector<std::vector<long>> pos_om;   // positive roots, omega coords
  std::vector<std::vector<long>> pos_sim;  // positive roots, simple coords
  RatMat cartan_inv_t;

  explicit OmegaCtx(const RootSystem& rs);

  long long ip(const std::vector<long>& a, const std::vector<long>& b) const {
    long long s = 0;
    for (int i = 0; i < R; ++i) {
      if (!a[i]) continue;
      long long row = 0;
      for (int j = 0; j < R; ++j)
        if (b[j]) row += G[i][j] * (long long)b[j];
      s += a[i] * row;
    }
    return s;
  }

  long long shifted_norm(const std::vector<long>& n) const {
    std::vector<long> s(n);
    for (int i = 0; i < R; ++i) s[i] += 1;  // + delta
    return ip(s, s);
  }

  std::vector<long> domrep(std::vector<long> n) const {
    for (;;) {
      int neg = -1;
      for (int i = 0; i < R; ++i)
        if (n[i] < 0) { neg = i; break; }
      if (neg < 0) return n;
      long c = n[neg];
      for (int j = 0; j < R; ++j) n[j] -= c * A[neg][j];
    }
  }

  // Simple-root coordinates of a root-lattice vector; nullopt if outside.
  std::optional<std::vector<long>> simple_coords(const std::vector<long>& n) const {
    RatVec v(R);
    for (int i = 0; i < R; ++i) v[i] = Rat(n[i]);
    RatVec c = cartan_inv_t.apply(v);
    std::vector<long> out(R);
    for (int i = 0; i < R; ++i) {
      if (!c[i].is_integer()) return std::nullopt;
      out[i] = c[i].to_int().get_si();
    }
    return out;
  }

  // Largest k with mu + k*root <= lambda, given c = simple coords of lambda-mu.
  long kmax(const std::vector<long>& c, int root_idx) const {
    long k = -1;
    const auto& s = pos_sim[root_idx];
    for (int j = 0; j < R; ++j) {
      if (s[j] <= 0) continue;
      long b = c[j] / s[j];
      if (k < 0 || b < k) k = b;
    }
    return k < 0 ? 0 : k;
  }
};

std::vector<long> to_longs(const std::vector<Int>& n);

}  // namespace osp::detail
