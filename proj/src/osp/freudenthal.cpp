#include "osp/omega.hpp"
#include "osp/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <memory>

namespace osp {

using detail::LongVecHash;
using detail::OmegaCtx;
using detail::to_longs;

namespace detail {

OmegaCtx::OmegaCtx(const RootSystem& rs) : R(rs.rank()), A(rs.cartan()) {
  const auto& om = rs.fundamental_weights();
  RatMat gw(R, R);
  Int lcm = 1;
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      gw.at(i, j) = rs.inner(om[i], om[j]);
      Int l;
      mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), gw.at(i, j).den().get_mpz_t());
      lcm = l;
    }
  G.assign(R, std::vector<long long>(R, 0));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      Int v = (gw.at(i, j) * Rat(lcm)).to_int();
      if (!v.fits_slong_p()) throw InternalError("omega Gram entry too large");
      G[i][j] = v.get_si();
    }
  RatMat At(R, R);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) At.at(i, j) = Rat(A[j][i]);
  cartan_inv_t = inverse(At);
  for (const auto& root : rs.positive_roots()) {
    std::vector<long> o(R), s(R);
    RatVec p = rs.pairings(root);
    RatVec c = rs.simple_basis_coords(root);
    for (int i = 0; i < R; ++i) {
      o[i] = p[i].to_int().get_si();
      s[i] = c[i].to_int().get_si();
    }
    pos_om.push_back(std::move(o));
    pos_sim.push_back(std::move(s));
  }
}

std::vector<long> to_longs(const std::vector<Int>& n) {
  std::vector<long> v(n.size());
  for (size_t i = 0; i < n.size(); ++i) {
    if (!n[i].fits_slong_p()) throw CapExceededError("weight coordinate too large");
    v[i] = n[i].get_si();
  }
  return v;
}

}  // namespace detail

namespace {

// All dominant mu <= lambda in the root-lattice coset, paired with the simple
// coordinates of lambda - mu.
void dominant_weights_below(const OmegaCtx& ctx, const std::vector<long>& lam,
                            std::vector<std::pair<std::vector<long>, std::vector<long>>>& out) {
  int R = ctx.R;
  // box bound: c <= A^{-T} n(lambda) entrywise (the inverse Cartan matrix of a
  // finite-type system is entrywise nonnegative)
  RatVec nl(R);
  for (int i = 0; i < R; ++i) nl[i] = Rat(lam[i]);
  RatVec bound = ctx.cartan_inv_t.apply(nl);
  std::vector<long> cmax(R);
  for (int i = 0; i < R; ++i) {
    if (bound[i].sign() < 0) throw InternalError("negative dominant box bound");
    cmax[i] = (long)bound[i].floor().get_si();
  }
  std::vector<long> c(R, 0);
  std::vector<long> n(lam);
  long long visited = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == R) {
      if (++visited > (50LL << 20)) throw CapExceededError("dominant weight enumeration too large");
      for (int i = 0; i < R; ++i)
        if (n[i] < 0) return;
      out.push_back({n, c});
      return;
    }
    for (long v = 0; v <= cmax[depth]; ++v) {
      c[depth] = v;
      self(self, depth + 1);
      for (int i = 0; i < R; ++i) n[i] -= ctx.A[depth][i];
    }
    for (int i = 0; i < R; ++i) n[i] += (cmax[depth] + 1) * ctx.A[depth][i];
    c[depth] = 0;
  };
  rec(rec, 0);
}

}  // namespace

IrrepCharacter freudenthal_multiplicities(const RootSystem& rs, const RatVec& lambda) {
  Int dim = rs.weyl_dim(lambda);
  if (dim > rs.caps().dimension_cap)
    throw CapExceededError("irrep dimension " + dim.get_str() + " exceeds the configured cap");
  OmegaCtx ctx(rs);
  std::vector<long> lam = to_longs(rs.omega_coords(lambda));

  std::vector<std::pair<std::vector<long>, std::vector<long>>> doms;
  dominant_weights_below(ctx, lam, doms);
  std::sort(doms.begin(), doms.end(), [&](const auto& a, const auto& b) {
    long long na = ctx.shifted_norm(a.first), nb = ctx.shifted_norm(b.first);
    if (na != nb) return na > nb;
    return a.first > b.first;
  });

  std::unordered_map<std::vector<long>, long long, LongVecHash> memo;
  const long long lam_norm = ctx.shifted_norm(lam);
  IrrepCharacter chr;
  chr.dimension = dim;
  std::vector<long> w(ctx.R);
  for (const auto& [mu, c] : doms) {
    long long m;
    if (mu == lam) {
      m = 1;
    } else {
      long long denom = lam_norm - ctx.shifted_norm(mu);
      if (denom <= 0) throw InternalError("freudenthal: nonpositive denominator");
      __int128 sum = 0;
      for (size_t r = 0; r < ctx.pos_om.size(); ++r) {
        long km = ctx.kmax(c, (int)r);
        if (km <= 0) continue;
        w = mu;
        for (long k = 1; k <= km; ++k) {
          for (int i = 0; i < ctx.R; ++i) w[i] += ctx.pos_om[r][i];
          auto it = memo.find(ctx.domrep(w));
          if (it == memo.end() || it->second == 0) continue;
          sum += (__int128)it->second * ctx.ip(w, ctx.pos_om[r]);
        }
      }
      if (2 * sum % denom != 0) throw InternalError("freudenthal: non-exact division");
      __int128 m128 = 2 * sum / denom;
      if (m128 < 0 || m128 > (__int128)9e17)
        throw InternalError("freudenthal: multiplicity out of range");
      m = (long long)m128;
    }
    memo.emplace(mu, m);
    if (m > 0) chr.dominant_mults.push_back({mu, m});
  }
  return chr;
}

std::vector<std::vector<long>> weyl_orbit_omega(const RootSystem& rs, const std::vector<long>& start,
                                                long cap) {
  const auto& A = rs.cartan();
  int R = rs.rank();
  std::unordered_set<std::vector<long>, LongVecHash> seen{start};
  std::deque<std::vector<long>> queue{start};
  std::vector<std::vector<long>> out{start};
  while (!queue.empty()) {
    std::vector<long> cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < R; ++i) {
      if (cur[i] == 0) continue;
      std::vector<long> s(cur);
      long c = s[i];
      for (int j = 0; j < R; ++j) s[j] -= c * A[i][j];
      if (seen.insert(s).second) {
        if ((long)seen.size() > cap) throw CapExceededError("orbit exceeds cap");
        out.push_back(s);
        queue.push_back(std::move(s));
      }
    }
  }
  return out;
}

struct SingleWeightMultiplicity::Impl {
  OmegaCtx ctx;
  std::vector<long> nu;
  std::unordered_map<std::vector<long>, long long, LongVecHash> memo;

  explicit Impl(const RootSystem& rs, const RatVec& nu_w)
      : ctx(rs), nu(to_longs(rs.omega_coords(nu_w))) {}

  long long mult(const std::vector<long>& n) {
    if (n == nu) return 1;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<long> diff(ctx.R);
    for (int i = 0; i < ctx.R; ++i) diff[i] = nu[i] - n[i];
    auto c = ctx.simple_coords(diff);
    long long m = 0;
    if (c) {
      bool below = true;
      for (long x : *c)
        if (x < 0) { below = false; break; }
      long long denom = ctx.shifted_norm(nu) - ctx.shifted_norm(n);
      if (below && denom > 0) {
        __int128 sum = 0;
        std::vector<long> w(ctx.R);
        for (size_t r = 0; r < ctx.pos_om.size(); ++r) {
          long km = ctx.kmax(*c, (int)r);
          if (km <= 0) continue;
          w = n;
          for (long k = 1; k <= km; ++k) {
            for (int i = 0; i < ctx.R; ++i) w[i] += ctx.pos_om[r][i];
            long long mm = mult(ctx.domrep(w));
            if (mm) sum += (__int128)mm * ctx.ip(w, ctx.pos_om[r]);
          }
        }
        if (2 * sum % denom != 0) throw InternalError("freudenthal: non-exact division");
        m = (long long)(2 * sum / denom);
      }
    }
    memo.emplace(n, m);
    return m;
  }
};

SingleWeightMultiplicity::SingleWeightMultiplicity(const RootSystem& rs, const RatVec& nu)
    : rs_(rs) {
  if (rs.classify(nu) != WeightClass::DominantIntegral)
    throw ValidationError("SingleWeightMultiplicity requires a dominant integral highest weight");
  impl_ = std::make_shared<Impl>(rs, nu);
}

long long SingleWeightMultiplicity::multiplicity(const RatVec& mu) {
  auto* impl = static_cast<Impl*>(impl_.get());
  return impl->mult(impl->ctx.domrep(to_longs(rs_.omega_coords(mu))));
}

}  // namespace osp
