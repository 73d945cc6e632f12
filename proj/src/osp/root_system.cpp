#include "osp/root_system.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>

namespace osp {

namespace {

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return rat_vec_less(a, b); }
};

}  // namespace

RootSystem::RootSystem(std::string basis_tag, RatMat gram, std::vector<RatVec> simple_roots,
                       RootSystemCaps caps)
    : basis_(std::move(basis_tag)), gram_(std::move(gram)), simple_(std::move(simple_roots)),
      caps_(caps) {
  const int R = (int)simple_.size();
  if (R == 0) throw ValidationError("empty simple system");
  for (const auto& a : simple_)
    if ((int)a.size() != gram_.rows())
      throw ValidationError("simple root dimension does not match the form on '" + basis_ + "'");
  BilinearForm{basis_, gram_}.validate();

  RatMat S(gram_.rows(), R);
  for (int j = 0; j < R; ++j)
    for (int i = 0; i < gram_.rows(); ++i) S.at(i, j) = simple_[j][i];
  if (osp::rank(S) != R) throw ValidationError("simple roots are linearly dependent");

  coroot_.resize(R);
  for (int i = 0; i < R; ++i) {
    Rat n2 = inner(simple_[i], simple_[i]);
    coroot_[i] = scale(simple_[i], Rat(2) / n2);
  }
  cartan_.assign(R, std::vector<long>(R, 0));
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      Rat p = inner(simple_[i], coroot_[j]);
      if (!p.is_integer()) throw ValidationError("non-integral Cartan pairing");
      long v = p.to_int().get_si();
      if (i == j && v != 2) throw ValidationError("Cartan diagonal must be 2");
      if (i != j && (v > 0 || v < -3)) throw ValidationError("Cartan integer out of range");
      cartan_[i][j] = v;
    }
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j)
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw ValidationError("asymmetric Cartan zero pattern");

  // c = E v recovers simple-basis coordinates for v in the root span.
  {
    RatMat St = S.transpose();
    RatMat M = St * gram_ * S;  // Gram of the simple roots
    simple_coord_extractor_ = inverse(M) * St * gram_;
  }

  // Reflection closure of the simple system.
  std::set<RatVec, RatVecLess> seen(simple_.begin(), simple_.end());
  std::deque<RatVec> queue(simple_.begin(), simple_.end());
  while (!queue.empty()) {
    RatVec r = queue.front();
    queue.pop_front();
    for (int i = 0; i < R; ++i) {
      RatVec s = reflect(r, i);
      if (seen.insert(s).second) {
        if ((long)seen.size() > 2 * caps_.positive_root_cap)
          throw CapExceededError("root closure exceeded cap; malformed simple system?");
        queue.push_back(s);
      }
    }
  }
  struct PosRoot { long height; RatVec v; };
  std::vector<PosRoot> pos;
  for (const auto& r : seen) {
    RatVec c = simple_coord_extractor_.apply(r);
    long height = 0;
    int sign = 0;
    for (const auto& ci : c) {
      if (!ci.is_integer())
        throw InternalError("root with non-integral simple coordinates");
      int s = ci.sign();
      if (s != 0 && sign != 0 && s != sign)
        throw InternalError("root with mixed-sign simple coordinates");
      if (s != 0) sign = s;
      height += ci.num().get_si();
    }
    if (sign > 0) pos.push_back({height, r});
  }
  if (2 * pos.size() != seen.size()) throw InternalError("positive/negative root count mismatch");
  std::sort(pos.begin(), pos.end(), [](const PosRoot& a, const PosRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return rat_vec_less(a.v, b.v);
  });
  positive_.reserve(pos.size());
  for (auto& p : pos) positive_.push_back(std::move(p.v));

  delta_.assign(gram_.rows(), Rat());
  for (const auto& r : positive_) delta_ = add(delta_, r);
  delta_ = scale(delta_, Rat(1, 2));

  RatMat A(R, R);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) A.at(i, j) = Rat(cartan_[i][j]);
  cartan_inv_t_ = inverse(A.transpose());
  omega_.resize(R);
  for (int i = 0; i < R; ++i) {
    RatVec w(gram_.rows());
    for (int k = 0; k < R; ++k) {
      const Rat& x = cartan_inv_t_.at(k, i);
      if (!x.is_zero()) w = add(w, scale(simple_[k], x));
    }
    omega_[i] = std::move(w);
  }
  RatVec om_sum(gram_.rows());
  for (const auto& w : omega_) om_sum = add(om_sum, w);
  if (om_sum != delta_)
    throw InternalError("Weyl vector differs from the sum of fundamental weights");
}

Rat RootSystem::pairing(const RatVec& mu, int i) const { return inner(mu, coroot_[i]); }

RatVec RootSystem::pairings(const RatVec& mu) const {
  RatVec p(rank());
  for (int i = 0; i < rank(); ++i) p[i] = pairing(mu, i);
  return p;
}

RatVec RootSystem::reflect(const RatVec& mu, int i) const {
  Rat p = pairing(mu, i);
  if (p.is_zero()) return mu;
  return sub(mu, scale(simple_[i], p));
}

WeightClass RootSystem::classify(const RatVec& mu) const {
  bool dominant = true;
  for (int i = 0; i < rank(); ++i) {
    Rat p = pairing(mu, i);
    if (!p.is_integer()) return WeightClass::NonIntegral;
    if (p.sign() < 0) dominant = false;
  }
  return dominant ? WeightClass::DominantIntegral : WeightClass::IntegralNotDominant;
}

std::pair<RatVec, int> RootSystem::dominant_representative(const RatVec& mu) const {
  if (classify(mu) == WeightClass::NonIntegral)
    throw ValidationError("dominant_representative requires an integral weight");
  RatVec w = mu;
  int count = 0;
  const long guard = 16L * (long)positive_.size() * (long)positive_.size() + 1000;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rank(); ++i)
      if (pairing(w, i).sign() < 0) { neg = i; break; }
    if (neg < 0) return {w, count};
    w = reflect(w, neg);
    if (++count > guard) throw InternalError("dominant_representative failed to terminate");
  }
}

std::vector<RatVec> RootSystem::weyl_orbit(const RatVec& mu) const {
  if (classify(mu) == WeightClass::NonIntegral)
    throw ValidationError("weyl_orbit requires an integral weight");
  std::set<RatVec, RatVecLess> seen{mu};
  std::deque<const RatVec*> queue{&*seen.begin()};
  while (!queue.empty()) {
    RatVec cur = *queue.front();
    queue.pop_front();
    for (int i = 0; i < rank(); ++i) {
      RatVec s = reflect(cur, i);
      auto [it, fresh] = seen.insert(std::move(s));
      if (fresh) {
        if ((long)seen.size() > caps_.orbit_cap)
          throw CapExceededError(
              "weyl orbit exceeds cap; use dominant_representative for membership questions");
        queue.push_back(&*it);
      }
    }
  }
  return std::vector<RatVec>(seen.begin(), seen.end());
}

Int RootSystem::weyl_dim(const RatVec& lambda) const {
  if (classify(lambda) != WeightClass::DominantIntegral)
    throw ValidationError("weyl_dim requires a dominant integral weight");
  RatVec ls = add(lambda, delta_);
  Rat prod(1);
  for (const auto& a : positive_) prod *= inner(ls, a) / inner(delta_, a);
  Int d = prod.to_int();
  if (d <= 0) throw InternalError("weyl_dim produced a non-positive value");
  return d;
}

std::vector<Int> RootSystem::omega_coords(const RatVec& mu) const {
  std::vector<Int> n(rank());
  for (int i = 0; i < rank(); ++i) {
    Rat p = pairing(mu, i);
    if (!p.is_integer())
      throw ValidationError("weight is not integral; cannot take fundamental-weight coordinates");
    n[i] = p.to_int();
  }
  return n;
}

RatVec RootSystem::from_omega(const std::vector<Int>& n) const {
  assert((int)n.size() == rank());
  RatVec w(gram_.rows());
  for (int i = 0; i < rank(); ++i)
    if (n[i] != 0) w = add(w, scale(omega_[i], Rat(n[i])));
  return w;
}

RatVec RootSystem::simple_basis_coords(const RatVec& mu) const {
  RatVec c = simple_coord_extractor_.apply(mu);
  RatVec back(gram_.rows());
  for (int i = 0; i < rank(); ++i)
    if (!c[i].is_zero()) back = add(back, scale(simple_[i], c[i]));
  if (back != mu) throw ValidationError("weight lies outside the root span");
  return c;
}

std::vector<Int> RootSystem::root_lattice_coords(const RatVec& mu) const {
  RatVec c = simple_basis_coords(mu);
  std::vector<Int> out(rank());
  for (int i = 0; i < rank(); ++i) {
    if (!c[i].is_integer()) throw ValidationError("weight is not in the root lattice");
    out[i] = c[i].to_int();
  }
  return out;
}

bool RootSystem::in_root_span(const RatVec& mu) const {
  RatVec c = simple_coord_extractor_.apply(mu);
  RatVec back(gram_.rows());
  for (int i = 0; i < rank(); ++i)
    if (!c[i].is_zero()) back = add(back, scale(simple_[i], c[i]));
  return back == mu;
}

Int RootSystem::weyl_order_bruteforce(long cap) const {
  // delta is regular, so |W . delta| = |W|; 2*delta is integral.
  RatVec start = scale(delta_, Rat(2));
  std::set<RatVec, RatVecLess> seen{start};
  std::deque<RatVec> queue{start};
  while (!queue.empty()) {
    RatVec cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < rank(); ++i) {
      RatVec s = reflect(cur, i);
      if (seen.insert(s).second) {
        if ((long)seen.size() > cap) throw CapExceededError("Weyl group order exceeds cap");
        queue.push_back(std::move(s));
      }
    }
  }
  return Int((unsigned long)seen.size());
}

}  // namespace osp
