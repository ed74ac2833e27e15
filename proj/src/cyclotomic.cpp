#include "weilheis/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "weilheis/fp.hpp"
#include "weilheis/matrix.hpp"

namespace weilheis {

namespace {

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Zero-initialized scratch space of p wide coefficients, on the stack for small p.
class WideBuffer {
 public:
  explicit WideBuffer(std::size_t n) {
    if (n > kInline) heap_.assign(n, 0);
    else std::fill(inline_, inline_ + n, 0);
  }
  __int128* data() { return heap_.empty() ? inline_ : heap_.data(); }
  __int128& operator[](std::size_t i) { return data()[i]; }

 private:
  static constexpr std::size_t kInline = 32;
  __int128 inline_[kInline];
  std::vector<__int128> heap_;
};

void same_field(const CycScalar& a, const CycScalar& b) {
  if (a.p() != b.p()) throw std::invalid_argument("cyclotomic scalars over different fields");
}

}  // namespace

CycScalar::CycScalar(int p) : p_(p), num_(static_cast<std::size_t>(p - 1), 0) {
  require_odd_prime(p);
}

CycScalar::CycScalar(int p, const Rational& r) : CycScalar(p) {
  num_[0] = r.num();
  den_ = r.den();
}

CycScalar CycScalar::zeta_power(int p, std::int64_t k) {
  CycScalar z(p);
  int e = mod(k, p);
  if (e == p - 1) {
    for (auto& c : z.num_) c = -1;
  } else {
    z.num_[static_cast<std::size_t>(e)] = 1;
  }
  return z;
}

CycScalar CycScalar::from_wide(int p, __int128* coeffs, __int128 den) {
  // coeffs has length p (exponents 0..p-1); fold zeta^(p-1) = -(1 + ... + zeta^(p-2)).
  if (den == 0) throw std::domain_error("cyclotomic scalar with zero denominator");
  CycScalar r(p);
  const auto n = static_cast<std::size_t>(p - 1);
  const __int128 top = coeffs[n];
  bool all_zero = true;
  for (std::size_t j = 0; j < n; ++j) {
    coeffs[j] -= top;
    if (coeffs[j] != 0) all_zero = false;
  }
  if (all_zero) return r;
  if (den != 1) {
    __int128 g = den;
    for (std::size_t j = 0; j < n && g != 1; ++j) g = gcd128(g, coeffs[j]);
    if (den < 0) g = -g;
    if (g != 1) {
      for (std::size_t j = 0; j < n; ++j) coeffs[j] /= g;
      den /= g;
    }
  }
  constexpr __int128 lim = INT64_MAX;
  if (den > lim) throw std::overflow_error("cyclotomic overflow");
  for (std::size_t j = 0; j < n; ++j) {
    if (abs128(coeffs[j]) > lim) throw std::overflow_error("cyclotomic overflow");
    r.num_[j] = static_cast<std::int64_t>(coeffs[j]);
  }
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

CycScalar cyc_reduce(int p, const std::map<std::int64_t, Rational>& raw) {
  require_odd_prime(p);
  std::int64_t den = 1;
  for (const auto& [k, c] : raw) den = std::lcm(den, c.den());
  std::vector<__int128> coeffs(static_cast<std::size_t>(p), 0);
  for (const auto& [k, c] : raw)
    coeffs[static_cast<std::size_t>(mod(k, p))] += static_cast<__int128>(c.num()) * (den / c.den());
  return CycScalar::from_wide(p, coeffs.data(), den);
}

bool CycScalar::is_zero() const {
  for (auto c : num_)
    if (c != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (std::size_t j = 1; j < num_.size(); ++j)
    if (num_[j] != 0) return false;
  return true;
}

Rational CycScalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic scalar is not rational: " + str());
  return Rational(num_[0], den_);
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
  same_field(a, b);
  const auto n = static_cast<std::size_t>(a.p_);
  WideBuffer c(n);
  if (a.den_ == b.den_) {
    for (std::size_t j = 0; j + 1 < n; ++j) c[j] = static_cast<__int128>(a.num_[j]) + b.num_[j];
    return CycScalar::from_wide(a.p_, c.data(), a.den_);
  }
  for (std::size_t j = 0; j + 1 < n; ++j)
    c[j] = static_cast<__int128>(a.num_[j]) * b.den_ + static_cast<__int128>(b.num_[j]) * a.den_;
  return CycScalar::from_wide(a.p_, c.data(), static_cast<__int128>(a.den_) * b.den_);
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  same_field(a, b);
  const int p = a.p_;
  if (a.is_zero() || b.is_zero()) return CycScalar(p);
  WideBuffer c(static_cast<std::size_t>(p));
  for (int i = 0; i + 1 < p; ++i) {
    const auto ai = a.num_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j + 1 < p; ++j) {
      const auto bj = b.num_[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      int k = i + j;
      if (k >= p) k -= p;
      c[static_cast<std::size_t>(k)] += static_cast<__int128>(ai) * bj;
    }
  }
  return CycScalar::from_wide(p, c.data(), static_cast<__int128>(a.den_) * b.den_);
}

CycScalar CycScalar::galois(int k) const {
  if (mod(k, p_) == 0) throw std::invalid_argument("galois exponent must be a unit");
  WideBuffer c(static_cast<std::size_t>(p_));
  for (std::size_t j = 0; j < num_.size(); ++j)
    c[static_cast<std::size_t>(mod(static_cast<std::int64_t>(j) * k, p_))] += num_[j];
  return from_wide(p_, c.data(), den_);
}

CycScalar CycScalar::conj() const { return galois(p_ - 1); }

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta_p)");
  if (is_rational()) return CycScalar(p_, rational_value().inverse());
  // Solve x * this = 1 through the Q-linear multiplication map on the power basis.
  const auto n = static_cast<std::size_t>(p_ - 1);
  Matrix<Rational> mult(n, n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    CycScalar col = *this * zeta_power(p_, static_cast<std::int64_t>(j));
    for (std::size_t i = 0; i < n; ++i) mult(i, j) = col.coeff(i);
  }
  Matrix<Rational> rhs(n, 1, Rational(0));
  rhs(0, 0) = Rational(1);
  auto sol = solve_linear(mult, rhs);
  if (!sol.consistent || !sol.kernel.empty()) throw std::logic_error("cyclotomic inverse failed");
  std::map<std::int64_t, Rational> raw;
  for (std::size_t j = 0; j < n; ++j) raw[static_cast<std::int64_t>(j)] = sol.particular(j, 0);
  return cyc_reduce(p_, raw);
}

std::string CycScalar::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    Rational c(num_[j], den_);
    if (!first) os << (c < Rational(0) ? " - " : " + ");
    else if (c < Rational(0)) os << "-";
    Rational a = c < Rational(0) ? -c : c;
    if (j == 0) {
      os << a;
    } else {
      if (a != Rational(1)) os << a << "*";
      os << "z" << p_;
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::size_t CycScalar::hash() const {
  std::size_t h = static_cast<std::size_t>(p_) * 1315423911u + static_cast<std::size_t>(den_);
  for (auto c : num_) h = h * 1099511628211ull ^ static_cast<std::size_t>(c);
  return h;
}

}  // namespace weilheis
