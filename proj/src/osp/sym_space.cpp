#include "osp/sym_space.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>

namespace osp {

namespace {

RatVec unit(int i, int n) {
  RatVec v(n);
  v[i] = Rat(1);
  return v;
}

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return rat_vec_less(a, b); }
};

const long kE6Cartan[6][6] = {
    {2, 0, -1, 0, 0, 0},
    {0, 2, 0, -1, 0, 0},
    {-1, 0, 2, -1, 0, 0},
    {0, -1, -1, 2, -1, 0},
    {0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, -1, 2},
};

std::string join(const RatVec& v, const std::vector<int>& order, size_t split, char open, char close) {
  std::ostringstream os;
  os << open;
  for (size_t i = 0; i < order.size(); ++i) {
    if (i == split)
      os << ";";
    else if (i)
      os << ",";
    os << v[order[i]].str();
  }
  os << close;
  return os.str();
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"su2m-so2m", "su2m-sp-m", "so-grassmann", "e6-f4",
                                                 "e6-sp4"};
  return names;
}

SpaceSpec SpaceSpec::make(const std::string& family_name, int m, int p, int q) {
  SpaceSpec s;
  if (family_name == "su2m-so2m")
    s.family = Family::SU2mSO2m;
  else if (family_name == "su2m-sp-m")
    s.family = Family::SU2mSpm;
  else if (family_name == "so-grassmann")
    s.family = Family::SOGrassmann;
  else if (family_name == "e6-f4")
    s.family = Family::E6F4;
  else if (family_name == "e6-sp4")
    s.family = Family::E6Sp4;
  else
    throw ValidationError("unknown space '" + family_name + "'");
  s.m = m;
  s.p = p;
  s.q = q;
  s.validate();
  return s;
}

void SpaceSpec::validate() const {
  switch (family) {
    case Family::SU2mSO2m:
    case Family::SU2mSpm:
      if (m < 2) throw ValidationError(name() + " requires m >= 2");
      break;
    case Family::SOGrassmann:
      if (p < 0 || q < 1 || p > q)
        throw ValidationError("so-grassmann requires 0 <= p <= q and q >= 1");
      break;
    default:
      break;
  }
}

std::string SpaceSpec::name() const {
  switch (family) {
    case Family::SU2mSO2m: return "su2m-so2m";
    case Family::SU2mSpm: return "su2m-sp-m";
    case Family::SOGrassmann: return "so-grassmann";
    case Family::E6F4: return "e6-f4";
    case Family::E6Sp4: return "e6-sp4";
  }
  return "?";
}

std::string SpaceSpec::params_str() const {
  switch (family) {
    case Family::SU2mSO2m:
    case Family::SU2mSpm: return "m=" + std::to_string(m);
    case Family::SOGrassmann: return "p=" + std::to_string(p) + " q=" + std::to_string(q);
    default: return "";
  }
}

bool SymmetricSpace::display_less(const RatVec& a, const RatVec& b) const {
  for (int idx : g_display_order) {
    if (a[idx] < b[idx]) return true;
    if (b[idx] < a[idx]) return false;
  }
  return false;
}

std::string SymmetricSpace::display_g(const RatVec& mu) const {
  switch (spec.family) {
    case Family::SU2mSO2m:
      return join(mu, g_display_order, (size_t)spec.m, '[', ']');
    case Family::SU2mSpm:
      return join(mu, g_display_order, (size_t)-1, '[', ']');
    default:
      return join(mu, g_display_order, (size_t)-1, '(', ')');
  }
}

std::string SymmetricSpace::display_k(const RatVec& lam) const {
  std::vector<int> order(lam.size());
  for (size_t i = 0; i < lam.size(); ++i) order[i] = (int)i;
  return join(lam, order, (size_t)-1, '(', ')');
}

std::shared_ptr<const SymmetricSpace> build_space(const SpaceSpec& spec, const EngineCaps& caps) {
  spec.validate();
  auto sp = std::make_shared<SymmetricSpace>();
  SymmetricSpace& S = *sp;
  S.spec = spec;
  S.caps = caps;

  int dim = 0;
  RatMat gram;
  std::vector<RatVec> simples;
  RatMat sigma;
  // family rule for sigma^*-fixed positive roots: true -> Phi2, false -> Phi1
  std::function<bool(const RatVec&)> fixed_to_phi2;
  bool phi3_pick_lex_min = false;

  const int m = spec.m, p = spec.p, q = spec.q;
  switch (spec.family) {
    case Family::SU2mSO2m: {
      dim = 2 * m;
      gram = RatMat::identity(dim);
      for (int i = 1; i <= m - 1; ++i) {
        RatVec g1(dim), g2(dim);
        g1[2 * i - 2] = Rat(1); g1[2 * i] = Rat(-1); g1[2 * i - 1] = Rat(1); g1[2 * i + 1] = Rat(-1);
        g2[2 * i - 2] = Rat(-1); g2[2 * i] = Rat(1); g2[2 * i - 1] = Rat(1); g2[2 * i + 1] = Rat(-1);
        simples.push_back(g1);
        simples.push_back(g2);
      }
      RatVec beta(dim);
      beta[2 * m - 1] = Rat(2);
      simples.push_back(beta);
      sigma = RatMat(dim, dim);
      for (int i = 0; i < dim; ++i) sigma.at(i, i) = (i % 2 == 0) ? Rat(-1) : Rat(1);
      fixed_to_phi2 = [](const RatVec&) { return true; };  // Phi1 is empty here
      for (int j = 1; j <= m; ++j) S.k_basis_ambient.push_back(unit(2 * j - 1, dim));
      S.dims = {4L * m * m - 1, (long)m * (2 * m - 1), 2L * m * m + m - 1, 2L * m - 1, (long)m,
                (long)m - 1};
      for (int i = 0; i < m; ++i) S.g_display_order.push_back(2 * i);
      for (int i = 0; i < m; ++i) S.g_display_order.push_back(2 * i + 1);
      break;
    }
    case Family::SU2mSpm: {
      dim = 2 * m;
      gram = RatMat::identity(dim);
      for (int k = 1; k <= m - 1; ++k) {
        RatVec g1(dim), g2(dim);
        g1[k - 1] = Rat(1); g1[k] = Rat(-1);
        g2[m + k] = Rat(1); g2[m + k - 1] = Rat(-1);
        simples.push_back(g1);
        simples.push_back(g2);
      }
      RatVec alpha(dim);
      alpha[m - 1] = Rat(1); alpha[2 * m - 1] = Rat(-1);
      simples.push_back(alpha);
      sigma = RatMat(dim, dim);
      for (int i = 0; i < m; ++i) {
        sigma.at(i, m + i) = Rat(-1);
        sigma.at(m + i, i) = Rat(-1);
      }
      fixed_to_phi2 = [](const RatVec&) { return false; };  // Phi2 is empty here
      for (int k = 0; k < m; ++k) {
        RatVec b(dim);
        b[k] = Rat(1, 2);
        b[m + k] = Rat(-1, 2);
        S.k_basis_ambient.push_back(b);
      }
      S.dims = {4L * m * m - 1, (long)m * (2 * m + 1), 2L * m * m - m - 1, 2L * m - 1, (long)m,
                (long)m - 1};
      for (int i = 0; i < dim; ++i) S.g_display_order.push_back(i);
      break;
    }
    case Family::SOGrassmann: {
      int n = p + q;
      dim = n + 1;
      gram = RatMat::identity(dim);
      for (int k = 1; k <= p - 1; ++k) {
        RatVec a(dim);
        a[k - 1] = Rat(1); a[k] = Rat(-1);
        simples.push_back(a);
      }
      if (p >= 1) {
        RatVec b(dim);
        b[p - 1] = Rat(1); b[p] = Rat(-1);
        simples.push_back(b);
      }
      for (int k = p + 1; k <= n - 1; ++k) {
        RatVec a(dim);
        a[k - 1] = Rat(1); a[k] = Rat(-1);
        simples.push_back(a);
      }
      RatVec g1(dim), g2(dim);
      g1[n - 1] = Rat(1); g1[n] = Rat(-1);
      g2[n - 1] = Rat(1); g2[n] = Rat(1);
      simples.push_back(g1);
      simples.push_back(g2);
      sigma = RatMat::identity(dim);
      sigma.at(n, n) = Rat(-1);
      fixed_to_phi2 = [p, n](const RatVec& r) {
        bool in1 = false, in2 = false;
        for (int i = 0; i < n; ++i)
          if (!r[i].is_zero()) (i < p ? in1 : in2) = true;
        return in1 && in2;  // cross-block roots act on p
      };
      phi3_pick_lex_min = true;
      for (int k = 0; k < n; ++k) S.k_basis_ambient.push_back(unit(k, dim));
      S.dims = {(long)(n + 1) * (2 * n + 1), (long)p * (2 * p + 1) + (long)q * (2 * q + 1),
                (long)(2 * p + 1) * (2 * q + 1), (long)n + 1, (long)n, 1};
      for (int i = 0; i < dim; ++i) S.g_display_order.push_back(i);
      break;
    }
    case Family::E6F4:
    case Family::E6Sp4: {
      dim = 6;
      gram = RatMat(6, 6);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) gram.at(i, j) = Rat(kE6Cartan[i][j]);
      for (int i = 0; i < 6; ++i) simples.push_back(unit(i, 6));
      sigma = RatMat(6, 6);
      int perm[6] = {5, 1, 4, 3, 2, 0};  // theta_1<->theta_6, theta_3<->theta_5
      for (int i = 0; i < 6; ++i) sigma.at(perm[i], i) = Rat(1);
      if (spec.family == Family::E6F4) {
        fixed_to_phi2 = [](const RatVec&) { return false; };
        RatVec s1(6), s3(6);
        s1[0] = s1[5] = Rat(1, 2);
        s3[2] = s3[4] = Rat(1, 2);
        S.k_basis_ambient = {s1, unit(1, 6), s3, unit(3, 6)};
        S.dims = {78, 52, 26, 6, 4, 2};
      } else {
        // sigma'_* differs from sigma_* by Ad(exp(pi xi_2)), which scales the
        // root vector of theta by (-1)^(theta_2-coefficient).
        fixed_to_phi2 = [](const RatVec& r) { return r[1].num() % 2 != 0; };
        RatVec a1(6), a2(6), a3(6);
        a1[1] = a1[3] = Rat(1);
        a1[2] = a1[4] = Rat(1, 2);
        a2[0] = a2[5] = Rat(1, 2);
        a3[2] = a3[4] = Rat(1, 2);
        S.k_basis_ambient = {a1, a2, a3, unit(3, 6)};
        S.dims = {78, 36, 42, 6, 4, 2};
      }
      for (int i = 0; i < 6; ++i) S.g_display_order.push_back(i);
      break;
    }
  }

  S.g = std::make_shared<RootSystem>(spec.name() + ":g", gram, simples, caps.root_caps());
  S.sigma.matrix = sigma;

  // Involution type invariants: involutive isometry permuting the positive
  // system and fixing the Weyl vector.
  {
    if (!(sigma * sigma == RatMat::identity(dim)))
      throw InternalError("sigma^* is not an involution");
    if (!(sigma.transpose() * gram * sigma == gram))
      throw InternalError("sigma^* is not an isometry");
    std::set<RatVec, RatVecLess> pos(S.g->positive_roots().begin(), S.g->positive_roots().end());
    for (const auto& r : S.g->positive_roots())
      if (!pos.count(S.sigma_star(r))) throw InternalError("sigma^* does not preserve positivity");
    if (S.sigma_star(S.g->weyl_vector()) != S.g->weyl_vector())
      throw InternalError("sigma^* does not fix the Weyl vector");
  }

  // Root partition.
  for (const auto& r : S.g->positive_roots()) {
    RatVec sr = S.sigma_star(r);
    if (sr == r) {
      (fixed_to_phi2(r) ? S.partition.phi2_plus : S.partition.phi1_plus).push_back(r);
    } else {
      const RatVec& pick = (rat_vec_less(r, sr) == phi3_pick_lex_min) ? r : sr;
      if (pick == r) S.partition.phi3_prime_plus.push_back(r);
    }
  }

  // Restriction map: coordinates of the fixed-space projection in the K basis.
  {
    int tK = (int)S.k_basis_ambient.size();
    RatMat B(dim, tK);
    for (int j = 0; j < tK; ++j)
      for (int i = 0; i < dim; ++i) B.at(i, j) = S.k_basis_ambient[j][i];
    RatMat Bt = B.transpose();
    RatMat proj(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) proj.at(i, j) = (Rat(i == j ? 1 : 0) + sigma.at(i, j)) / Rat(2);
    S.restriction = inverse(Bt * gram * B) * Bt * gram * proj;
  }

  // K root system from the restrictions of Phi1+ and Phi3'+.
  {
    int tK = (int)S.k_basis_ambient.size();
    RatMat kgram(tK, tK);
    for (int i = 0; i < tK; ++i)
      for (int j = 0; j < tK; ++j)
        kgram.at(i, j) = dot_form(S.k_basis_ambient[i], gram, S.k_basis_ambient[j]);
    std::set<RatVec, RatVecLess> kroots;
    for (const auto& r : S.partition.phi1_plus) kroots.insert(S.restrict_weight(r));
    for (const auto& r : S.partition.phi3_prime_plus) kroots.insert(S.restrict_weight(r));
    std::vector<RatVec> ksimple;
    for (const auto& r : kroots) {
      bool decomposable = false;
      for (const auto& u : kroots) {
        RatVec w = sub(r, u);
        if (kroots.count(w)) { decomposable = true; break; }
      }
      if (!decomposable) ksimple.push_back(r);
    }
    S.k = std::make_shared<RootSystem>(spec.name() + ":k", kgram, ksimple, caps.root_caps());
    std::set<RatVec, RatVecLess> closure(S.k->positive_roots().begin(), S.k->positive_roots().end());
    if (closure != kroots)
      throw InternalError("K root closure does not match the restricted root set");
    S.k_type = classify_dynkin(*S.k);
  }

  return sp;
}

std::vector<CheckResult> SymmetricSpace::verify_root_partition() const {
  std::vector<CheckResult> out;
  auto check = [&](const std::string& name, bool pass, std::string detail = "") {
    out.push_back({name, pass, std::move(detail)});
  };

  const auto& G = g->gram();
  const int n = g->ambient_dim();
  check("sigma.involution", sigma.matrix * sigma.matrix == RatMat::identity(n));
  check("sigma.isometry", sigma.matrix.transpose() * G * sigma.matrix == G);
  {
    std::set<RatVec, RatVecLess> pos(g->positive_roots().begin(), g->positive_roots().end());
    bool ok = true;
    for (const auto& r : g->positive_roots())
      if (!pos.count(sigma_star(r))) { ok = false; break; }
    check("sigma.permutes_positive_roots", ok);
  }
  check("sigma.fixes_weyl_vector", sigma_star(g->weyl_vector()) == g->weyl_vector());

  // partition is a disjoint cover of the positive system
  {
    std::set<RatVec, RatVecLess> all;
    size_t total = 0;
    for (const auto* part : {&partition.phi1_plus, &partition.phi2_plus, &partition.phi3_prime_plus})
      for (const auto& r : *part) { all.insert(r); ++total; }
    for (const auto& r : partition.phi3_prime_plus) { all.insert(sigma_star(r)); ++total; }
    check("partition.disjoint_cover",
          total == all.size() && total == g->positive_roots().size() &&
              std::all_of(g->positive_roots().begin(), g->positive_roots().end(),
                          [&](const RatVec& r) { return all.count(r) > 0; }),
          "|Phi1+|=" + std::to_string(partition.phi1_plus.size()) +
              " |Phi2+|=" + std::to_string(partition.phi2_plus.size()) +
              " |Phi3'+|=" + std::to_string(partition.phi3_prime_plus.size()));
  }

  RatVec zero_k((size_t)k->ambient_dim());
  // R1: every Phi3 root has a nonzero restriction
  {
    bool ok = true;
    for (const auto& r : partition.phi3_prime_plus) {
      if (restrict_weight(r) == zero_k || restrict_weight(sigma_star(r)) == zero_k) { ok = false; break; }
    }
    check("R1.phi3_restrictions_nonzero", ok);
  }
  // R2: a positive root is sigma^*-fixed iff it lies in Phi1 u Phi2
  {
    bool ok = true;
    std::set<RatVec, RatVecLess> fixed12;
    for (const auto& r : partition.phi1_plus) fixed12.insert(r);
    for (const auto& r : partition.phi2_plus) fixed12.insert(r);
    for (const auto& r : g->positive_roots())
      if ((sigma_star(r) == r) != (fixed12.count(r) > 0)) { ok = false; break; }
    check("R2.fixed_iff_phi1_phi2", ok);
  }
  // R3: restrictions of Phi1 and Phi3 roots never agree up to sign
  {
    bool ok = true;
    for (const auto& a : partition.phi1_plus) {
      RatVec ra = restrict_weight(a);
      RatVec nra = scale(ra, Rat(-1));
      for (const auto& b : partition.phi3_prime_plus) {
        RatVec rb = restrict_weight(b);
        if (rb == ra || rb == nra) { ok = false; break; }
      }
      if (!ok) break;
    }
    check("R3.phi1_phi3_restrictions_distinct", ok);
  }
  // R4: sigma^* fixes Phi1 u Phi2 pointwise and moves every Phi3 root off +-itself
  {
    bool ok = true;
    for (const auto& r : partition.phi1_plus)
      if (sigma_star(r) != r) ok = false;
    for (const auto& r : partition.phi2_plus)
      if (sigma_star(r) != r) ok = false;
    for (const auto& r : partition.phi3_prime_plus) {
      RatVec sr = sigma_star(r);
      if (sr == r || sr == scale(r, Rat(-1))) ok = false;
    }
    check("R4.fixed_point_structure", ok);
  }
  // R5: restriction is 2-to-1 on Phi3+ exactly along sigma^*-pairs
  {
    bool ok = true;
    std::vector<RatVec> phi3;
    for (const auto& r : partition.phi3_prime_plus) {
      phi3.push_back(r);
      phi3.push_back(sigma_star(r));
    }
    for (size_t i = 0; i < phi3.size() && ok; ++i)
      for (size_t j = 0; j < phi3.size() && ok; ++j) {
        if (i == j) continue;
        bool same_restriction = restrict_weight(phi3[i]) == restrict_weight(phi3[j]);
        bool sigma_pair = sigma_star(phi3[i]) == phi3[j];
        if (same_restriction != sigma_pair) ok = false;
      }
    check("R5.two_to_one_along_pairs", ok);
  }
  // dimension identity and kernel dimension
  check("dims.p_identity",
        dims.p == dims.t0 + 2 * (long)partition.phi2_plus.size() +
                      2 * (long)partition.phi3_prime_plus.size(),
        "dim p = " + std::to_string(dims.p) + " vs t0 + 2|Phi2+| + 2|Phi3'+| = " +
            std::to_string(dims.t0 + 2 * (long)partition.phi2_plus.size() +
                           2 * (long)partition.phi3_prime_plus.size()));
  check("dims.g_split", dims.g == dims.k + dims.p && dims.t == dims.tK + dims.t0);
  check("restriction.rank", rank(restriction) == (int)dims.tK && dims.t - dims.tK == dims.t0);
  check("restriction.sigma_invariant", restriction * sigma.matrix == restriction);
  // K roots are exactly the restrictions of Phi1+ u Phi3'+, no collisions
  {
    std::set<RatVec, RatVecLess> kr;
    for (const auto& r : partition.phi1_plus) kr.insert(restrict_weight(r));
    for (const auto& r : partition.phi3_prime_plus) kr.insert(restrict_weight(r));
    check("k.roots_from_phi1_phi3",
          kr.size() == partition.phi1_plus.size() + partition.phi3_prime_plus.size() &&
              kr.size() == k->positive_roots().size());
  }
  // expected K type per family
  {
    auto canon = [](int r) -> std::string {
      if (r == 1) return "A1";
      if (r == 2) return "B2";
      return "B" + std::to_string(r);
    };
    std::string expect;
    switch (spec.family) {
      case Family::SU2mSO2m:
        expect = spec.m == 2 ? "A1 x A1" : (spec.m == 3 ? "A3" : "D" + std::to_string(spec.m));
        break;
      case Family::SU2mSpm:
        expect = spec.m == 2 ? "B2" : "C" + std::to_string(spec.m);
        break;
      case Family::SOGrassmann: {
        std::vector<std::pair<int, std::string>> parts;
        if (spec.p >= 1) parts.push_back({spec.p, canon(spec.p)});
        parts.push_back({spec.q, canon(spec.q)});
        std::sort(parts.begin(), parts.end());
        expect = parts.front().second;
        for (size_t i = 1; i < parts.size(); ++i) expect += " x " + parts[i].second;
        break;
      }
      case Family::E6F4: expect = "F4"; break;
      case Family::E6Sp4: expect = "C4"; break;
    }
    check("k.type", k_type.label == expect, "recognized " + k_type.label + ", expected " + expect);
  }
  return out;
}

}  // namespace osp
