#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace weilheis {

/// Raised for p = 2 or composite p. Every construction in this library
/// assumes an odd prime residue characteristic.
class UnsupportedCharacteristic : public std::invalid_argument {
 public:
  explicit UnsupportedCharacteristic(int p)
      : std::invalid_argument("unsupported residue characteristic p=" + std::to_string(p)) {}
};

constexpr bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void require_odd_prime(int p) {
  if (p == 2 || !is_prime(p)) throw UnsupportedCharacteristic(p);
}

/// Canonical residue of a in [0, p).
constexpr int mod(std::int64_t a, int p) {
  std::int64_t r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

constexpr int pow_mod(std::int64_t base, std::int64_t e, int p) {
  std::int64_t r = 1;
  std::int64_t b = mod(base, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

constexpr int inv_mod(std::int64_t a, int p) {
  if (mod(a, p) == 0) throw std::domain_error("inverse of zero in F_p");
  return pow_mod(a, p - 2, p);
}

/// Euler's criterion: a^((p-1)/2) as +1 / -1 (0 for a = 0).
constexpr int legendre(std::int64_t a, int p) {
  int r = pow_mod(a, (p - 1) / 2, p);
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

/// Smallest quadratic non-residue mod p.
constexpr int least_nonsquare(int p) {
  for (int a = 2; a < p; ++a)
    if (legendre(a, p) == -1) return a;
  throw UnsupportedCharacteristic(p);
}

/// Element of the prime field F_p.
class FpScalar {
 public:
  FpScalar() = default;
  FpScalar(int p, std::int64_t v) : p_(p), v_(mod(v, p)) {}

  int p() const { return p_; }
  int value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FpScalar zero() const { return {p_, 0}; }
  FpScalar one() const { return {p_, 1}; }

  friend FpScalar operator+(FpScalar a, FpScalar b) {
    check(a, b);
    return {a.p_, a.v_ + b.v_};
  }
  friend FpScalar operator-(FpScalar a, FpScalar b) {
    check(a, b);
    return {a.p_, a.v_ - b.v_};
  }
  friend FpScalar operator*(FpScalar a, FpScalar b) {
    check(a, b);
    return {a.p_, static_cast<std::int64_t>(a.v_) * b.v_};
  }
  friend FpScalar operator/(FpScalar a, FpScalar b) { return a * b.inverse(); }
  FpScalar operator-() const { return {p_, -v_}; }
  FpScalar& operator+=(FpScalar o) { return *this = *this + o; }
  FpScalar& operator-=(FpScalar o) { return *this = *this - o; }
  FpScalar& operator*=(FpScalar o) { return *this = *this * o; }

  FpScalar inverse() const { return {p_, inv_mod(v_, p_)}; }

  friend bool operator==(const FpScalar&, const FpScalar&) = default;

  std::string str() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const FpScalar& x) { return os << x.v_; }

 private:
  static void check(const FpScalar& a, const FpScalar& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("F_p scalars over different primes");
  }

  int p_ = 3;
  int v_ = 0;
};

}  // namespace weilheis
