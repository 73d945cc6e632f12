#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace osp {

using Int = mpz_class;

// Exact rational, always canonical (lowest terms, positive denominator).
// All arithmetic in the engine goes through this type or plain integers;
// there is no floating point anywhere on the computation path.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}
  Rat(const Int& n) : q_(n) {}
  Rat(long num, long den) : q_(num, den) { canon(); }
  Rat(const Int& num, const Int& den) : q_(num, den) { canon(); }
  explicit Rat(const mpq_class& q) : q_(q) { canon(); }

  static Rat parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return Rat(q);
  }

  const mpq_class& raw() const { return q_; }
  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Integer value; throws unless is_integer().
  Int to_int() const {
    if (!is_integer()) throw std::domain_error("rational is not an integer: " + str());
    return q_.get_num();
  }

  Int floor() const {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return f;
  }
  Int ceil() const {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return c;
  }
  Int round_nearest() const {  // ties toward +infinity; any fixed rule works for seeding searches
    return (*this + Rat(1, 2)).floor();
  }

  Rat operator-() const { return Rat(mpq_class(-q_), NoCanon{}); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_), NoCanon{}); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_), NoCanon{}); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_), NoCanon{}); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return Rat(mpq_class(q_ / o.q_), NoCanon{});
  }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  bool operator==(const Rat& o) const { return q_ == o.q_; }
  bool operator!=(const Rat& o) const { return q_ != o.q_; }
  bool operator<(const Rat& o) const { return q_ < o.q_; }
  bool operator<=(const Rat& o) const { return q_ <= o.q_; }
  bool operator>(const Rat& o) const { return q_ > o.q_; }
  bool operator>=(const Rat& o) const { return q_ >= o.q_; }

  std::string str() const { return q_.get_str(); }

  // Decimal rendering with the given number of significant digits (presentation only).
  std::string decimal(int sig_digits = 12) const;

 private:
  struct NoCanon {};
  Rat(mpq_class q, NoCanon) : q_(std::move(q)) {}
  void canon() {
    if (q_.get_den() == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
  }
  mpq_class q_;
};

using RatVec = std::vector<Rat>;

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

// Largest integer t with t^2 <= x (x >= 0).
Int floor_sqrt(const Rat& x);

std::string to_string(const RatVec& v);

}  // namespace osp
