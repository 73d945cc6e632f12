#pragma once

#include "osp/rational.hpp"

#include <optional>
#include <vector>

namespace osp {

// Dense rational matrix, row major. Small sizes only (ranks <= ~12).
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RatMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  RatMat transpose() const;
  RatMat operator*(const RatMat& o) const;
  RatVec apply(const RatVec& v) const;  // this * v
  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& a, const Rat& c);
Rat dot_form(const RatVec& a, const RatMat& gram, const RatVec& b);

// Solves A x = b exactly; returns nullopt if inconsistent. A may be any shape;
// if underdetermined, one particular solution is returned.
std::optional<RatVec> solve(const RatMat& A, const RatVec& b);

// Inverse of a square nonsingular matrix; throws on singular input.
RatMat inverse(const RatMat& A);

int rank(const RatMat& A);

// Leading-principal-minor test for symmetric positive definiteness.
bool positive_definite(const RatMat& gram);

// LDL^T factorization of a symmetric positive definite matrix:
// A = L D L^T with L unit lower triangular. Throws if a pivot is <= 0.
void ldlt(const RatMat& A, RatMat& L, RatVec& D);

// Integer matrices for lattice work.
using IntMat = std::vector<std::vector<Int>>;

// Smith normal form: computes U (r x r) and V (c x c) unimodular with
// U*A*V = D diagonal (d_1 | d_2 | ...). Returns D's diagonal (padded with 0).
void smith_normal_form(IntMat A, IntMat& U, IntMat& V, std::vector<Int>& diag);

// Solves A n = b over the integers. Returns a particular solution and a basis
// of the integer kernel; nullopt if no integer solution exists.
struct IntAffineSolution {
  std::vector<Int> base;
  std::vector<std::vector<Int>> kernel;
};
std::optional<IntAffineSolution> solve_integer(const IntMat& A, const std::vector<Int>& b);

}  // namespace osp
