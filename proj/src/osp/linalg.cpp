#include "osp/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace osp {

RatMat RatMat::identity(int n) {
  RatMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = Rat(1);
  return I;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
  assert(cols_ == o.rows_);
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

RatVec RatMat::apply(const RatVec& v) const {
  assert((int)v.size() == cols_);
  RatVec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const RatVec& a, const Rat& c) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

Rat dot_form(const RatVec& a, const RatMat& gram, const RatVec& b) {
  assert((int)a.size() == gram.rows() && (int)b.size() == gram.cols());
  Rat s;
  for (int i = 0; i < gram.rows(); ++i) {
    if (a[i].is_zero()) continue;
    Rat row;
    for (int j = 0; j < gram.cols(); ++j)
      if (!gram.at(i, j).is_zero() && !b[j].is_zero()) row += gram.at(i, j) * b[j];
    s += a[i] * row;
  }
  return s;
}

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<int> rref(RatMat& M) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
    int p = -1;
    for (int i = r; i < M.rows(); ++i)
      if (!M.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < M.cols(); ++j) std::swap(M.at(p, j), M.at(r, j));
    Rat inv = Rat(1) / M.at(r, c);
    for (int j = 0; j < M.cols(); ++j) M.at(r, j) *= inv;
    for (int i = 0; i < M.rows(); ++i) {
      if (i == r || M.at(i, c).is_zero()) continue;
      Rat f = M.at(i, c);
      for (int j = 0; j < M.cols(); ++j) M.at(i, j) -= f * M.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatVec> solve(const RatMat& A, const RatVec& b) {
  assert((int)b.size() == A.rows());
  RatMat M(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.cols()) = b[i];
  }
  std::vector<int> pivots = rref(M);
  for (size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == A.cols()) return std::nullopt;  // inconsistent row
  RatVec x(A.cols());
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = M.at((int)k, A.cols());
  return x;
}

RatMat inverse(const RatMat& A) {
  assert(A.rows() == A.cols());
  int n = A.rows();
  RatMat M(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, n + i) = Rat(1);
  }
  std::vector<int> pivots = rref(M);
  if ((int)pivots.size() != n || pivots[n - 1] != n - 1)
    throw std::domain_error("matrix not invertible");
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = M.at(i, n + j);
  return inv;
}

int rank(const RatMat& A) {
  RatMat M = A;
  return (int)rref(M).size();
}

bool positive_definite(const RatMat& gram) {
  if (gram.rows() != gram.cols()) return false;
  int n = gram.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (gram.at(i, j) != gram.at(j, i)) return false;
  // Leading principal minors via fraction-free style elimination on a copy.
  RatMat M = gram;
  for (int k = 0; k < n; ++k) {
    if (M.at(k, k).sign() <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rat f = M.at(i, k) / M.at(k, k);
      for (int j = k; j < n; ++j) M.at(i, j) -= f * M.at(k, j);
    }
  }
  return true;
}

void ldlt(const RatMat& A, RatMat& L, RatVec& D) {
  int n = A.rows();
  assert(A.cols() == n);
  L = RatMat::identity(n);
  D.assign(n, Rat());
  for (int j = 0; j < n; ++j) {
    Rat d = A.at(j, j);
    for (int k = 0; k < j; ++k) d -= L.at(j, k) * L.at(j, k) * D[k];
    if (d.sign() <= 0) throw std::domain_error("ldlt: matrix not positive definite");
    D[j] = d;
    for (int i = j + 1; i < n; ++i) {
      Rat v = A.at(i, j);
      for (int k = 0; k < j; ++k) v -= L.at(i, k) * L.at(j, k) * D[k];
      L.at(i, j) = v / d;
    }
  }
}

namespace {

void addmul_row(IntMat& M, int dst, int src, const Int& f) {
  for (size_t j = 0; j < M[dst].size(); ++j) M[dst][j] += f * M[src][j];
}
void addmul_col(IntMat& M, int dst, int src, const Int& f) {
  for (size_t i = 0; i < M.size(); ++i) M[i][dst] += f * M[i][src];
}

}  // namespace

// Unimodular diagonalization U*A*V = D. Divisibility of the diagonal is not
// enforced; any diagonalization suffices for integer affine solving.
void smith_normal_form(IntMat A, IntMat& U, IntMat& V, std::vector<Int>& diag) {
  int r = (int)A.size();
  int c = r ? (int)A[0].size() : 0;
  U.assign(r, std::vector<Int>(r, 0));
  V.assign(c, std::vector<Int>(c, 0));
  for (int i = 0; i < r; ++i) U[i][i] = 1;
  for (int j = 0; j < c; ++j) V[j][j] = 1;
  int t = 0;
  while (t < r && t < c) {
    // find smallest nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (A[i][j] != 0 && (pi < 0 || abs(A[i][j]) < abs(A[pi][pj]))) { pi = i; pj = j; }
    if (pi < 0) break;
    if (pi != t) { std::swap(A[pi], A[t]); std::swap(U[pi], U[t]); }
    if (pj != t) {
      for (int i = 0; i < r; ++i) std::swap(A[i][pj], A[i][t]);
      for (int j = 0; j < c; ++j) std::swap(V[j][pj], V[j][t]);
    }
    bool clean = true;
    for (int i = t + 1; i < r; ++i)
      if (A[i][t] != 0) {
        Int f = -(A[i][t] / A[t][t]);
        addmul_row(A, i, t, f);
        addmul_row(U, i, t, f);
        if (A[i][t] != 0) clean = false;
      }
    for (int j = t + 1; j < c; ++j)
      if (A[t][j] != 0) {
        Int f = -(A[t][j] / A[t][t]);
        addmul_col(A, j, t, f);
        addmul_col(V, j, t, f);
        if (A[t][j] != 0) clean = false;
      }
    if (!clean) continue;  // pivot shrank, repeat with the smaller pivot
    ++t;
  }
  diag.assign(std::min(r, c), 0);
  for (int i = 0; i < (int)diag.size(); ++i) diag[i] = A[i][i];
}

std::optional<IntAffineSolution> solve_integer(const IntMat& A, const std::vector<Int>& b) {
  int r = (int)A.size();
  int c = r ? (int)A[0].size() : 0;
  IntMat U, V;
  std::vector<Int> diag;
  smith_normal_form(A, U, V, diag);
  // y solves D y = U b; n = V y.
  std::vector<Int> ub(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) ub[i] += U[i][j] * b[j];
  std::vector<Int> y(c, 0);
  int rk = 0;
  for (int i = 0; i < (int)diag.size(); ++i)
    if (diag[i] != 0) rk = i + 1;
  for (int i = 0; i < r; ++i) {
    if (i < rk && diag[i] != 0) {
      if (ub[i] % diag[i] != 0) return std::nullopt;
      y[i] = ub[i] / diag[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  IntAffineSolution sol;
  sol.base.assign(c, 0);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) sol.base[i] += V[i][j] * y[j];
  for (int k = rk; k < c; ++k) {
    std::vector<Int> col(c, 0);
    for (int i = 0; i < c; ++i) col[i] = V[i][k];
    sol.kernel.push_back(std::move(col));
  }
  return sol;
}

}  // namespace osp
