#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "weilheis/rational.hpp"

namespace weilheis {

/// Exact element of Q(zeta_p), p an odd prime.
///
/// Stored as a common denominator and p-1 integer numerators over the power
/// basis zeta^0 .. zeta^(p-2). The representation is canonical (gcd of the
/// numerators and the denominator is 1, denominator positive), so equality is
/// coefficient comparison.
class CycScalar {
 public:
  CycScalar() : CycScalar(3) {}
  explicit CycScalar(int p);
  CycScalar(int p, const Rational& r);

  static CycScalar zeta_power(int p, std::int64_t k);
  static CycScalar from_rational(int p, const Rational& r) { return {p, r}; }

  int p() const { return p_; }
  std::int64_t den() const { return den_; }
  const std::vector<std::int64_t>& numerators() const { return num_; }
  Rational coeff(std::size_t j) const { return Rational(num_[j], den_); }

  bool is_zero() const;
  bool is_rational() const;
  /// Precondition: is_rational().
  Rational rational_value() const;

  CycScalar zero() const { return CycScalar(p_); }
  CycScalar one() const { return CycScalar(p_, Rational(1)); }

  friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }
  CycScalar operator-() const;
  CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
  CycScalar& operator-=(const CycScalar& o) { return *this = *this - o; }
  CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }

  CycScalar inverse() const;
  /// Complex conjugation zeta -> zeta^(p-1).
  CycScalar conj() const;
  /// Galois automorphism zeta -> zeta^k, k a unit mod p.
  CycScalar galois(int k) const;

  friend bool operator==(const CycScalar&, const CycScalar&) = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const CycScalar& x) { return os << x.str(); }

  std::size_t hash() const;

 private:
  // Consumes coeffs[0..p-1] as scratch.
  static CycScalar from_wide(int p, __int128* coeffs, __int128 den);
  friend CycScalar cyc_reduce(int p, const std::map<std::int64_t, Rational>& raw);

  int p_;
  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;
};

/// Canonical representative of sum raw[k] * zeta^k modulo the p-th cyclotomic
/// polynomial. Rejects p = 2 and composite p.
CycScalar cyc_reduce(int p, const std::map<std::int64_t, Rational>& raw);

}  // namespace weilheis
