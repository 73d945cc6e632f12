#include "osp/rational.hpp"

#include <sstream>

namespace osp {

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int floor_sqrt(const Rat& x) {
  if (x.sign() < 0) throw std::domain_error("floor_sqrt of negative");
  // floor(sqrt(p/q)) = floor(sqrt(p*q)/q) = isqrt(p*q) quotient-adjusted.
  Int s = isqrt(x.num() * x.den());
  Int t = s / x.den();
  for (;;) {
    Int t1 = t + 1;
    if (Rat(t1) * Rat(t1) <= x) t = t1; else break;
  }
  while (t > 0 && Rat(t) * Rat(t) > x) t -= 1;
  return t;
}

std::string Rat::decimal(int sig_digits) const {
  if (is_zero()) return "0";
  mpq_class a = q_;
  bool neg = sgn(a) < 0;
  if (neg) a = -a;
  // Find exponent e with 10^e <= a < 10^(e+1).
  int e = 0;
  mpq_class ten(10), one(1);
  mpq_class t = a;
  while (t >= ten) { t /= 10; ++e; }
  while (t < one) { t *= 10; --e; }
  // digits = round(a * 10^(sig-1-e))
  mpz_class scale;
  int k = sig_digits - 1 - e;
  mpq_class scaled = a;
  if (k >= 0) {
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
    scaled *= scale;
  } else {
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, -k);
    scaled /= scale;
  }
  mpz_class digits;
  mpq_class half(1, 2);
  scaled += half;
  mpz_fdiv_q(digits.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  std::string d = digits.get_str();
  if ((int)d.size() > sig_digits) { d.pop_back(); ++e; }  // rounding carried over
  // Assemble fixed or scientific notation.
  std::ostringstream out;
  if (neg) out << '-';
  if (e >= 0 && e < sig_digits) {
    out << d.substr(0, e + 1);
    std::string frac = d.substr(e + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out << '.' << frac;
  } else if (e < 0 && e > -5) {
    out << "0.";
    for (int i = 1; i < -e; ++i) out << '0';
    while (!d.empty() && d.back() == '0') d.pop_back();
    out << d;
  } else {
    out << d[0];
    std::string frac = d.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out << '.' << frac;
    out << 'e' << e;
  }
  return out.str();
}

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  s += ")";
  return s;
}

}  // namespace osp
