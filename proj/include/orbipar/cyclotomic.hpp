#pragma once

// Exact arithmetic in Z[zeta_N], stored as integer coefficient vectors on
// 1, zeta, ..., zeta^{N-1}. Products are cyclic convolutions; equality and
// zero tests reduce modulo the N-th cyclotomic polynomial.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orbipar/error.hpp"
#include "orbipar/rational.hpp"

namespace orbipar {

namespace detail {
// quotient of a by monic b, exact polynomial division over Z
inline std::vector<Int> poly_divide_exact(std::vector<Int> a, const std::vector<Int>& b) {
  check(!b.empty() && b.back() == 1, errc::bad_input, "poly_divide_exact needs monic divisor");
  std::size_t db = b.size() - 1;
  check(a.size() >= b.size(), errc::bad_input, "poly degree");
  std::vector<Int> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Int c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const auto& c : a) internal_check(c == 0, "poly_divide_exact remainder");
  return q;
}
}  // namespace detail

// coefficients of Phi_N, low degree first, via x^N - 1 = prod_{d | N} Phi_d
inline std::vector<Int> cyclotomic_polynomial(std::uint64_t N) {
  check(N >= 1, errc::bad_input, "cyclotomic level");
  std::vector<Int> num(N + 1, 0);
  num[0] = -1;
  num[N] = 1;
  for (std::uint64_t d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    num = detail::poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
  }
  return num;
}

class CycloNumber {
 public:
  CycloNumber() : level_(1), coeffs_(1, 0) {}
  explicit CycloNumber(std::uint64_t level) : level_(level), coeffs_(level, 0) {
    check(level >= 1, errc::bad_input, "cyclotomic level");
  }
  CycloNumber(std::uint64_t level, std::vector<Int> coeffs)
      : level_(level), coeffs_(std::move(coeffs)) {
    check(coeffs_.size() == level_, errc::bad_input, "cyclotomic coefficient count");
  }

  static CycloNumber integer(const Int& n, std::uint64_t level = 1) {
    CycloNumber c(level);
    c.coeffs_[0] = n;
    return c;
  }

  // zeta_N^(t*N) for t in Q/Z with denominator dividing N
  static CycloNumber root_of_unity(const QmodZ& t, std::uint64_t level) {
    CycloNumber c(level);
    const Int& den = t.den();
    check(Int(level) % den == 0, errc::bad_input, "denominator does not divide level");
    Int idx = t.num() * (Int(level) / den);
    c.coeffs_[static_cast<std::size_t>(static_cast<std::uint64_t>(idx))] = 1;
    return c;
  }

  std::uint64_t level() const { return level_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  CycloNumber lifted(std::uint64_t m) const {
    check(m % level_ == 0, errc::bad_input, "lift level must be a multiple");
    CycloNumber out(m);
    std::uint64_t f = m / level_;
    for (std::size_t k = 0; k < level_; ++k) out.coeffs_[k * f] = coeffs_[k];
    return out;
  }

  CycloNumber operator+(const CycloNumber& o) const {
    auto [a, b] = aligned(*this, o);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }
  CycloNumber operator-(const CycloNumber& o) const {
    auto [a, b] = aligned(*this, o);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] -= b.coeffs_[i];
    return a;
  }
  CycloNumber operator-() const {
    CycloNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  CycloNumber operator*(const CycloNumber& o) const {
    auto [a, b] = aligned(*this, o);
    CycloNumber out(a.level_);
    for (std::size_t i = 0; i < a.level_; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < a.level_; ++j) {
        if (b.coeffs_[j] == 0) continue;
        out.coeffs_[(i + j) % a.level_] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return out;
  }
  CycloNumber operator*(const Int& k) const {
    CycloNumber out = *this;
    for (auto& c : out.coeffs_) c *= k;
    return out;
  }

  CycloNumber conj() const {
    CycloNumber out(level_);
    for (std::size_t k = 0; k < level_; ++k) out.coeffs_[(level_ - k) % level_] += coeffs_[k];
    return out;
  }

  // canonical form: remainder modulo Phi_level, degree < phi(level)
  std::vector<Int> reduced() const {
    auto phi = cyclotomic_polynomial(level_);
    std::vector<Int> r = coeffs_;
    std::size_t dp = phi.size() - 1;
    for (std::size_t i = r.size(); i-- > dp;) {
      Int c = r[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dp; ++j) r[i - dp + j] -= c * phi[j];
    }
    r.resize(dp == 0 ? 1 : dp);
    return r;
  }

  bool is_zero() const {
    for (const auto& c : reduced())
      if (c != 0) return false;
    return true;
  }

  bool operator==(const CycloNumber& o) const { return (*this - o).is_zero(); }
  bool operator!=(const CycloNumber& o) const { return !(*this == o); }

  // certifies the value is a rational integer and extracts it
  Int as_integer() const {
    auto r = reduced();
    for (std::size_t i = 1; i < r.size(); ++i)
      check(r[i] == 0, errc::non_integral, "cyclotomic value is not a rational integer");
    return r.empty() ? Int(0) : r[0];
  }

  std::string str() const {
    auto r = reduced();
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      if (!out.empty()) out += " + ";
      out += r[i].str();
      if (i > 0) out += "*z" + std::to_string(level_) + "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static std::pair<CycloNumber, CycloNumber> aligned(const CycloNumber& x, const CycloNumber& y) {
    std::uint64_t m = static_cast<std::uint64_t>(
        lcm_int(Int(x.level_), Int(y.level_)).convert_to<std::uint64_t>());
    return {x.lifted(m), y.lifted(m)};
  }

  std::uint64_t level_;
  std::vector<Int> coeffs_;
};

}  // namespace orbipar
