#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "orbipar/error.hpp"

namespace orbipar {

// All integer arithmetic in the library is arbitrary precision: Smith normal
// form minors and cyclotomic coefficients overflow fixed width even on small
// presentations.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Int rat_floor(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline std::string rat_to_string(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

// An element of Q/Z, kept reduced: 0 <= num < den, gcd(num, den) = 1,
// zero stored as 0/1.
class QmodZ {
 public:
  QmodZ() : num_(0), den_(1) {}

  QmodZ(Int num, Int den) {
    check(den != 0, errc::bad_input, "QmodZ zero denominator");
    if (den < 0) { den = -den; num = -num; }
    num = mod_floor(num, den);
    Int g = gcd_int(num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
    num_ = num;
    den_ = den;
  }

  static QmodZ from_rat(const Rat& r) { return QmodZ(rat_num(r), rat_den(r)); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  Rat as_rat() const { return Rat(num_, den_); }

  // additive order in Q/Z
  Int order() const { return den_; }

  QmodZ operator+(const QmodZ& o) const {
    return QmodZ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  QmodZ operator-(const QmodZ& o) const {
    return QmodZ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  QmodZ operator-() const { return QmodZ(-num_, den_); }
  QmodZ operator*(const Int& k) const { return QmodZ(num_ * k, den_); }

  bool operator==(const QmodZ& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QmodZ& o) const { return !(*this == o); }
  bool operator<(const QmodZ& o) const { return num_ * o.den_ < o.num_ * den_; }

  std::string str() const {
    if (num_ == 0) return "0";
    return num_.str() + "/" + den_.str();
  }

 private:
  Int num_;
  Int den_;
};

inline Rat sum_of(const std::vector<QmodZ>& ws) {
  Rat s = 0;
  for (const auto& w : ws) s += w.as_rat();
  return s;
}

}  // namespace orbipar
