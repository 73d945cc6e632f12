#include "osp/spin_module.hpp"

#include "osp/flat_map.hpp"
#include "osp/omega.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <map>
#include <set>

namespace osp {

using detail::FlatCounter;
using detail::pack_coords;
using detail::unpack_coords;

namespace {

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return rat_vec_less(a, b); }
};

std::vector<int> quad_ints(const RatVec& v) {
  std::vector<int> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rat x = v[i] * Rat(4);
    if (!x.is_integer()) throw InternalError("coordinate is not a quarter-integer");
    Int n = x.to_int();
    if (!n.fits_sint_p()) throw CapExceededError("quad coordinate too large");
    out[i] = (int)n.get_si();
  }
  return out;
}

RatVec from_quad(const std::vector<int>& q) {
  RatVec v(q.size());
  for (size_t i = 0; i < q.size(); ++i) v[i] = Rat(q[i], 4);
  return v;
}

// Integer scaffolding for the spin-table loops: restricted roots doubled,
// the K Gram scaled to integers, and the K fundamental weights quadrupled.
struct SpinCtx {
  const SymmetricSpace& S;
  int n;                                  // K rank
  std::vector<std::vector<int>> d_beta;   // 2 * restriction of Phi2+
  std::vector<std::vector<int>> d_gamma;  // 2 * restriction of Phi3'+
  std::vector<std::vector<long long>> kgram_scaled;
  std::vector<int> delta_quad;            // 4 * delta_K
  std::vector<std::vector<int>> omega_quad;  // 4 * fundamental weights of K
  std::vector<std::vector<long long>> simple_scaled;  // scaled K simple roots (dominance signs)
  int r0 = 0;
  bool odd_case = false;
  long long factor = 1;
  Int spinor_dim;

  explicit SpinCtx(const SymmetricSpace& space) : S(space), n(space.k->rank()) {
    if (n > 8) throw CapExceededError("K rank above packing limit");
    auto dbl = [&](const RatVec& r) {
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i) {
        Rat x = r[i] * Rat(2);
        if (!x.is_integer()) throw InternalError("restricted root has non-half coordinates");
        v[i] = (int)x.to_int().get_si();
      }
      return v;
    };
    for (const auto& b : S.partition.phi2_plus) d_beta.push_back(dbl(S.restrict_weight(b)));
    for (const auto& g : S.partition.phi3_prime_plus) d_gamma.push_back(dbl(S.restrict_weight(g)));

    Int lcm = 1;
    const RatMat& G = S.k->gram();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int l;
        mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), G.at(i, j).den().get_mpz_t());
        lcm = l;
      }
    kgram_scaled.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) kgram_scaled[i][j] = (G.at(i, j) * Rat(lcm)).to_int().get_si();
    delta_quad = quad_ints(S.k->weyl_vector());
    for (const auto& w : S.k->fundamental_weights()) omega_quad.push_back(quad_ints(w));
    for (const auto& a : S.k->simple_roots()) {
      std::vector<long long> v(n);
      for (int i = 0; i < n; ++i) {
        Rat x = a[i] * Rat(lcm) * Rat(4);
        v[i] = x.to_int().get_si();
      }
      // scaled G * alpha, so that dot(quad, this) has the sign of <w, alpha>
      std::vector<long long> ga(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ga[i] += kgram_scaled[i][j] * v[j];
      simple_scaled.push_back(std::move(ga));
    }

    long t0 = S.dims.t0;
    odd_case = (t0 % 2) != 0;
    r0 = (int)((t0 + 1) / 2);
    factor = 1LL << (odd_case ? r0 - 1 : r0);
    spinor_dim = Int(1) << (unsigned long)(S.dims.p / 2);
  }

  long long norm_shifted(const std::vector<int>& quad) const {
    long long s = 0;
    for (int i = 0; i < n; ++i) {
      long long xi = quad[i] + delta_quad[i];
      if (!xi) continue;
      long long row = 0;
      for (int j = 0; j < n; ++j) row += kgram_scaled[i][j] * (long long)(quad[j] + delta_quad[j]);
      s += xi * row;
    }
    return s;
  }

  bool dominant_quad(const std::vector<int>& quad) const {
    for (const auto& ga : simple_scaled) {
      long long dot = 0;
      for (int i = 0; i < n; ++i) dot += ga[i] * (long long)quad[i];
      if (dot < 0) return false;
    }
    return true;
  }

  std::vector<int> omega_to_quad(const std::vector<long>& om) const {
    std::vector<long long> acc(n, 0);
    for (int i = 0; i < n; ++i)
      if (om[i])
        for (int j = 0; j < n; ++j) acc[j] += (long long)om[i] * omega_quad[i][j];
    std::vector<int> out(n);
    for (int j = 0; j < n; ++j) {
      if (acc[j] < -120 || acc[j] > 120) throw CapExceededError("orbit weight out of packing range");
      out[j] = (int)acc[j];
    }
    return out;
  }
};

// Gray-code accumulation of sum(eps_i * d_i) over all sign patterns.
void gray_accumulate(const std::vector<std::vector<int>>& roots, int n, FlatCounter& out,
                     long long inc = 1) {
  const int N = (int)roots.size();
  std::vector<int> cur(n, 0);
  std::vector<int> sign(N, 1);
  for (const auto& d : roots)
    for (int i = 0; i < n; ++i) cur[i] += d[i];
  out.add(pack_coords(cur.data(), n), inc);
  const unsigned long long total = 1ULL << N;
  for (unsigned long long i = 1; i < total; ++i) {
    int b = std::countr_zero(i);
    sign[b] = -sign[b];
    const auto& d = roots[b];
    for (int j = 0; j < n; ++j) cur[j] += 2 * sign[b] * d[j];
    out.add(pack_coords(cur.data(), n), inc);
  }
}

}  // namespace

SpinWeightTable enumerate_spin_weights(const SymmetricSpace& S) {
  SpinCtx ctx(S);
  const int PQ = (int)(ctx.d_beta.size() + ctx.d_gamma.size());
  if (PQ > S.caps.max_enum_log2)
    throw CapExceededError("spin weight enumeration needs 2^" + std::to_string(PQ) +
                           " sign patterns, above the configured cap 2^" +
                           std::to_string(S.caps.max_enum_log2));
  std::vector<std::vector<int>> roots = ctx.d_beta;
  roots.insert(roots.end(), ctx.d_gamma.begin(), ctx.d_gamma.end());
  FlatCounter tbl(1u << std::min(PQ + 1, 22));
  gray_accumulate(roots, ctx.n, tbl);

  SpinWeightTable out;
  out.r0 = ctx.r0;
  out.odd_case = ctx.odd_case;
  out.multiplicity_factor = ctx.factor;
  out.spinor_dim = ctx.spinor_dim;
  Int total = 0;
  out.entries.reserve(tbl.size());
  tbl.for_each([&](uint64_t key, long long cnt) {
    std::vector<int> q(ctx.n);
    unpack_coords(key, q.data(), ctx.n);
    long long mult = cnt * ctx.factor;
    out.entries.push_back({std::move(q), mult});
    total += (long)mult;
  });
  std::sort(out.entries.begin(), out.entries.end());
  if (total != out.spinor_dim)
    throw InternalError("spin table total " + total.get_str() + " != 2^floor(dim p/2)");
  return out;
}

std::vector<RatVec> highest_weight_candidates(const SymmetricSpace& S) {
  SpinCtx ctx(S);
  const int P = (int)ctx.d_beta.size();
  if (P > std::min(S.caps.max_enum_log2, 24))
    throw CapExceededError("highest-weight candidate enumeration needs 2^" + std::to_string(P) +
                           " sign patterns, above the configured cap");
  std::vector<int> base(ctx.n, 0);
  for (const auto& d : ctx.d_gamma)
    for (int i = 0; i < ctx.n; ++i) base[i] += d[i];
  FlatCounter seen(1u << std::min(P + 1, 20));
  if (P == 0) {
    seen.add(pack_coords(base.data(), ctx.n), 1);
  } else {
    std::vector<int> cur(base);
    std::vector<int> sign(P, 1);
    for (const auto& d : ctx.d_beta)
      for (int i = 0; i < ctx.n; ++i) cur[i] += d[i];
    seen.add(pack_coords(cur.data(), ctx.n), 1);
    for (unsigned long long i = 1; i < (1ULL << P); ++i) {
      int b = std::countr_zero(i);
      sign[b] = -sign[b];
      for (int j = 0; j < ctx.n; ++j) cur[j] += 2 * sign[b] * ctx.d_beta[b][j];
      seen.add(pack_coords(cur.data(), ctx.n), 1);
    }
  }
  std::vector<RatVec> out;
  seen.for_each([&](uint64_t key, long long) {
    std::vector<int> q(ctx.n);
    unpack_coords(key, q.data(), ctx.n);
    RatVec w = from_quad(q);
    if (S.k->classify(w) == WeightClass::DominantIntegral) out.push_back(std::move(w));
  });
  std::sort(out.begin(), out.end(), rat_vec_less);
  return out;
}

std::vector<RatVec> parthasarathy_highest_weights(const SymmetricSpace& S) {
  if (S.partition.phi2_plus.empty() && S.spec.family != Family::SOGrassmann)
    throw ValidationError("the inner-pair construction is vacuous when Phi2 is empty");

  RatVec half_gamma((size_t)S.k->ambient_dim());
  for (const auto& g : S.partition.phi3_prime_plus)
    half_gamma = add(half_gamma, S.restrict_weight(g));
  half_gamma = scale(half_gamma, Rat(1, 2));

  std::set<RatVec, RatVecLess> g1set, k1set;
  for (const auto& r : S.partition.phi1_plus) {
    RatVec w = S.restrict_weight(r);
    g1set.insert(w);
    k1set.insert(w);
  }
  for (const auto& r : S.partition.phi2_plus) g1set.insert(S.restrict_weight(r));
  if (g1set.size() != S.partition.phi1_plus.size() + S.partition.phi2_plus.size())
    throw InternalError("restriction not injective on the fixed roots");

  if (g1set.empty()) return {half_gamma};  // degenerate inner pair, W1 = {e}

  std::vector<RatVec> simples;
  for (const auto& r : g1set) {
    bool decomposable = false;
    for (const auto& u : g1set)
      if (g1set.count(sub(r, u))) { decomposable = true; break; }
    if (!decomposable) simples.push_back(r);
  }
  RootSystemCaps rc = S.caps.root_caps();
  RootSystem g1(S.spec.name() + ":g1", S.k->gram(), simples, rc);
  {
    std::set<RatVec, RatVecLess> closure(g1.positive_roots().begin(), g1.positive_roots().end());
    if (closure != g1set) throw InternalError("inner-pair root closure mismatch");
  }

  RatVec delta_k1((size_t)S.k->ambient_dim());
  for (const auto& r : k1set) delta_k1 = add(delta_k1, r);
  delta_k1 = scale(delta_k1, Rat(1, 2));

  detail::OmegaCtx ctx(g1);
  std::vector<std::vector<long>> k1_om;
  for (const auto& r : k1set) {
    std::vector<long> v(g1.rank());
    RatVec pr = g1.pairings(r);
    for (int i = 0; i < g1.rank(); ++i) v[i] = pr[i].to_int().get_si();
    k1_om.push_back(std::move(v));
  }

  const int R = g1.rank();
  std::vector<std::vector<long>> k1_dominant;
  std::vector<long> start(R, 1);  // delta_G1 in fundamental-weight coordinates
  auto k1dom = [&](const std::vector<long>& nu) {
    for (const auto& rho : k1_om)
      if (ctx.ip(nu, rho) <= 0) return false;
    return true;
  };
  if (R <= 8) {
    // packed breadth-first closure; the inner-pair Weyl group can be large
    FlatCounter seen(1u << 16);
    std::deque<uint64_t> queue;
    std::vector<int> buf(R);
    auto pack = [&](const std::vector<long>& v) {
      for (int i = 0; i < R; ++i) buf[i] = (int)v[i];
      return pack_coords(buf.data(), R);
    };
    uint64_t s0 = pack(start);
    seen.add(s0, 1);
    queue.push_back(s0);
    if (k1dom(start)) k1_dominant.push_back(start);
    std::vector<long> cur(R), nxt(R);
    std::vector<int> ibuf(R);
    while (!queue.empty()) {
      uint64_t key = queue.front();
      queue.pop_front();
      unpack_coords(key, ibuf.data(), R);
      for (int i = 0; i < R; ++i) cur[i] = ibuf[i];
      for (int i = 0; i < R; ++i) {
        if (cur[i] == 0) continue;
        nxt = cur;
        long c = nxt[i];
        for (int j = 0; j < R; ++j) nxt[j] -= c * ctx.A[i][j];
        uint64_t nk = pack(nxt);
        if (!seen.find(nk)) {
          seen.add(nk, 1);
          if ((long)seen.size() > S.caps.w1_orbit_cap)
            throw CapExceededError("inner-pair Weyl orbit exceeds cap");
          if (k1dom(nxt)) k1_dominant.push_back(nxt);
          queue.push_back(nk);
        }
      }
    }
  } else {
    for (auto& nu : weyl_orbit_omega(g1, start, S.caps.w1_orbit_cap))
      if (k1dom(nu)) k1_dominant.push_back(std::move(nu));
  }

  std::vector<RatVec> out;
  for (const auto& nu : k1_dominant) {
    std::vector<Int> n(R);
    for (int i = 0; i < R; ++i) n[i] = nu[i];
    RatVec lam = add(sub(g1.from_omega(n), delta_k1), half_gamma);
    out.push_back(std::move(lam));
  }
  std::sort(out.begin(), out.end(), rat_vec_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

SpinDecomposition decompose_full(const SymmetricSpace& S, SpinCtx& ctx) {
  const int PQ = (int)(ctx.d_beta.size() + ctx.d_gamma.size());
  std::vector<std::vector<int>> roots = ctx.d_beta;
  roots.insert(roots.end(), ctx.d_gamma.begin(), ctx.d_gamma.end());
  FlatCounter tbl(1u << std::min(PQ + 1, 22));
  gray_accumulate(roots, ctx.n, tbl, ctx.factor);  // table in true multiplicity units

  SpinDecomposition out;
  out.r0 = ctx.r0;
  out.odd_case = ctx.odd_case;
  out.spinor_dim = ctx.spinor_dim;
  out.full_table_path = true;

  Int remaining = ctx.spinor_dim;
  std::vector<int> q(ctx.n), bestq(ctx.n);
  int guard = 0;
  while (remaining > 0) {
    if (++guard > 100000) throw InternalError("spin peel failed to terminate");
    bool have = false, best_dom = false;
    long long bestN = 0, best_mult = 0;
    tbl.for_each([&](uint64_t key, long long cnt) {
      if (cnt == 0) return;
      unpack_coords(key, q.data(), ctx.n);
      long long N = ctx.norm_shifted(q);
      bool better = false;
      if (!have || N > bestN) {
        better = true;
      } else if (N == bestN) {
        bool dom = ctx.dominant_quad(q);
        if (dom != best_dom)
          better = dom;
        else
          better = q > bestq;
      }
      if (better) {
        have = true;
        bestN = N;
        bestq = q;
        best_dom = ctx.dominant_quad(q);
        best_mult = cnt;
      }
    });
    if (!have) throw InternalError("spin peel: table empty with dimension remaining");
    if (!best_dom)
      throw InternalError("spin peel: maximal remaining weight is not dominant");
    RatVec lambda = from_quad(bestq);
    long long mult = best_mult;
    IrrepCharacter chr = freudenthal_multiplicities(*S.k, lambda);
    for (const auto& [domw, cm] : chr.dominant_mults) {
      for (const auto& o : weyl_orbit_omega(*S.k, domw, S.caps.orbit_cap)) {
        std::vector<int> oq = ctx.omega_to_quad(o);
        long long* slot = tbl.find(pack_coords(oq.data(), ctx.n));
        if (!slot) throw InternalError("spin peel: character weight missing from table");
        *slot -= mult * cm;
        if (*slot < 0)
          throw InternalError("spin peel: negative remaining multiplicity (transcription error?)");
      }
    }
    remaining -= Int((long)mult) * chr.dimension;
    if (remaining < 0) throw InternalError("spin peel: dimension underflow");
    out.components.push_back({lambda, mult, chr.dimension});
  }
  tbl.for_each([&](uint64_t, long long cnt) {
    if (cnt != 0) throw InternalError("spin peel: leftover weights after exhausting the dimension");
  });
  return out;
}

SpinDecomposition decompose_candidates(const SymmetricSpace& S, SpinCtx& ctx) {
  const int P = (int)ctx.d_beta.size();
  const int PQ = P + (int)ctx.d_gamma.size();
  const int half = (PQ + 1) / 2;
  if (half > S.caps.max_enum_log2)
    throw CapExceededError("spin decomposition infeasible: meet-in-the-middle needs 2^" +
                           std::to_string(half) + " patterns");

  std::vector<RatVec> cands;
  if (P <= std::min(S.caps.max_enum_log2, 20)) {
    cands = highest_weight_candidates(S);
  } else {
    for (auto& w : parthasarathy_highest_weights(S))
      if (S.k->classify(w) == WeightClass::DominantIntegral) cands.push_back(std::move(w));
    std::sort(cands.begin(), cands.end(), rat_vec_less);
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  }

  // exact table multiplicities by meet-in-the-middle sign counting
  std::vector<std::vector<int>> roots = ctx.d_beta;
  roots.insert(roots.end(), ctx.d_gamma.begin(), ctx.d_gamma.end());
  std::vector<std::vector<int>> rootsA(roots.begin(), roots.begin() + roots.size() / 2);
  std::vector<std::vector<int>> rootsB(roots.begin() + roots.size() / 2, roots.end());
  FlatCounter mapA(1u << std::min((int)rootsA.size() + 1, 22));
  FlatCounter mapB(1u << std::min((int)rootsB.size() + 1, 22));
  gray_accumulate(rootsA, ctx.n, mapA);
  gray_accumulate(rootsB, ctx.n, mapB);

  struct Cand {
    RatVec lambda;
    std::vector<int> quad;
    long long table_mult;
    long long norm;
  };
  std::vector<Cand> list;
  for (const auto& lam : cands) {
    std::vector<int> quad = quad_ints(lam);
    __int128 count = 0;
    std::vector<int> a(ctx.n), need(ctx.n);
    mapA.for_each([&](uint64_t key, long long ca) {
      unpack_coords(key, a.data(), ctx.n);
      bool ok = true;
      for (int i = 0; i < ctx.n; ++i) {
        need[i] = quad[i] - a[i];
        if (need[i] < -120 || need[i] > 120) { ok = false; break; }
      }
      if (!ok) return;
      long long cb = mapB.get(pack_coords(need.data(), ctx.n));
      if (cb) count += (__int128)ca * cb;
    });
    if (count > 0) {
      __int128 tm = count * ctx.factor;
      if (tm > (__int128)9e17) throw CapExceededError("table multiplicity overflow");
      list.push_back({lam, std::move(quad), (long long)tm, 0});
      list.back().norm = ctx.norm_shifted(list.back().quad);
    }
  }
  std::sort(list.begin(), list.end(), [](const Cand& x, const Cand& y) {
    if (x.norm != y.norm) return x.norm > y.norm;
    return rat_vec_less(y.lambda, x.lambda);
  });

  SpinDecomposition out;
  out.r0 = ctx.r0;
  out.odd_case = ctx.odd_case;
  out.spinor_dim = ctx.spinor_dim;
  out.full_table_path = false;

  std::vector<SingleWeightMultiplicity> swms;
  std::vector<size_t> comp_idx;  // index into list for each emitted component
  for (size_t i = 0; i < list.size(); ++i) {
    long long tbl = list[i].table_mult;
    for (size_t c = 0; c < out.components.size(); ++c) {
      const auto& comp = out.components[c];
      if (list[comp_idx[c]].norm <= list[i].norm) continue;  // strict norm drop required
      long long mm = swms[c].multiplicity(list[i].lambda);
      if (mm) tbl -= comp.mult * mm;
    }
    if (tbl < 0) throw InternalError("candidate peel: negative remaining multiplicity");
    if (tbl == 0) continue;
    Int dim = S.k->weyl_dim(list[i].lambda);
    out.components.push_back({list[i].lambda, tbl, dim});
    comp_idx.push_back(i);
    swms.emplace_back(*S.k, list[i].lambda);
  }

  Int total = 0;
  for (const auto& c : out.components) total += Int((long)c.mult) * c.dim;
  if (total != ctx.spinor_dim)
    throw InternalError("candidate peel: dimension identity failed, got " + total.get_str() +
                        " expected " + ctx.spinor_dim.get_str());
  return out;
}

}  // namespace

SpinDecomposition decompose_spin(const SymmetricSpace& S) {
  SpinCtx ctx(S);
  const int PQ = (int)(ctx.d_beta.size() + ctx.d_gamma.size());
  if (PQ <= S.caps.max_enum_log2) return decompose_full(S, ctx);
  return decompose_candidates(S, ctx);
}

}  // namespace osp
