#include <random>

#include "doctest.h"
#include "weilheis/cyclotomic.hpp"
#include "weilheis/fp.hpp"
#include "weilheis/matrix.hpp"
#include "weilheis/rational.hpp"

using namespace weilheis;

namespace {

CycScalar z(int p, int k) { return CycScalar::zeta_power(p, k); }
CycScalar q(int p, std::int64_t n, std::int64_t d = 1) { return CycScalar(p, Rational(n, d)); }

std::vector<CycScalar> sample_closure(int p) {
  std::vector<CycScalar> base{q(p, 0), q(p, 1), q(p, -1), z(p, 1), q(p, 1) + z(p, 1)};
  std::vector<CycScalar> out = base;
  for (const auto& a : base)
    for (const auto& b : base) {
      out.push_back(a + b);
      out.push_back(a * b);
    }
  return out;
}

template <class T>
Matrix<T> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const T& zero,
                        const std::function<T(int)>& make) {
  std::uniform_int_distribution<int> dist(-3, 3);
  Matrix<T> m(r, c, zero);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = make(dist(rng));
  return m;
}

template <class T>
void check_random_systems(const T& zero, const std::function<T(int)>& make) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng), m = dim(rng) % 3 + 1;
    Matrix<T> a = random_matrix(rng, r, c, zero, make);
    // Sparsify some rows so singular systems show up too.
    if (trial % 3 == 0)
      for (std::size_t j = 0; j < c; ++j) a(0, j) = zero;
    Matrix<T> x = random_matrix(rng, c, m, zero, make);
    Matrix<T> b = a * x;
    auto sol = solve_linear(a, b);
    REQUIRE(sol.consistent);
    CHECK(a * sol.particular == b);
    CHECK(sol.kernel.size() == kernel_dimension(a) * m);
    for (const auto& k : sol.kernel) CHECK((a * k).is_zero());
    CHECK(rank(a) + kernel_dimension(a) == c);
  }
}

}  // namespace

TEST_CASE("rational arithmetic is exact and overflow is loud") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK((Rational(3, 7) / Rational(3, 7)) == Rational(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(4), std::overflow_error);
}

TEST_CASE("cyc_reduce normal forms") {
  SUBCASE("zeta_3^2 = -1 - zeta_3") {
    auto x = cyc_reduce(3, {{2, Rational(1)}});
    CHECK(x.coeff(0) == Rational(-1));
    CHECK(x.coeff(1) == Rational(-1));
  }
  SUBCASE("zeta_5^5 = 1") { CHECK(cyc_reduce(5, {{5, Rational(1)}}) == q(5, 1)); }
  SUBCASE("sum of all cube roots of unity vanishes") {
    CHECK(cyc_reduce(3, {{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}}).is_zero());
  }
  SUBCASE("negative exponents") { CHECK(cyc_reduce(7, {{-1, Rational(1)}}) == z(7, 6)); }
  SUBCASE("unsupported characteristic") {
    CHECK_THROWS_AS(cyc_reduce(2, {{0, Rational(1)}}), UnsupportedCharacteristic);
    CHECK_THROWS_AS(cyc_reduce(9, {{0, Rational(1)}}), UnsupportedCharacteristic);
    CHECK_THROWS_AS(CycScalar(1), UnsupportedCharacteristic);
  }
}

TEST_CASE("zeta powers multiply with zeta^p = 1") {
  for (int p : {3, 5, 7, 11})
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) CHECK(z(p, i) * z(p, j) == z(p, i + j));
}

TEST_CASE("field axioms on exhaustive small samples") {
  for (int p : {3, 5}) {
    const auto s = sample_closure(p);
    const CycScalar zero = q(p, 0), one = q(p, 1);
    for (const auto& a : s) {
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK((a + (-a)).is_zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == one);
      for (const auto& b : s) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b).conj() == a.conj() * b.conj());
      }
      CHECK(a.conj().conj() == a);
    }
    // Triple identities on a thinned sample to keep the run short.
    for (std::size_t i = 0; i < s.size(); i += 3)
      for (std::size_t j = 0; j < s.size(); j += 4)
        for (std::size_t k = 0; k < s.size(); k += 5) {
          const auto &a = s[i], &b = s[j], &c = s[k];
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
  }
}

TEST_CASE("conjugation is zeta -> zeta^(p-1)") {
  CHECK(z(5, 1).conj() == z(5, 4));
  CHECK((z(3, 1) + q(3, 2)).conj() == z(3, 2) + q(3, 2));
  // |1 + zeta_3|^2 = 1
  auto w = q(3, 1) + z(3, 1);
  CHECK(w * w.conj() == q(3, 1));
}

TEST_CASE("mixing fields is rejected") {
  CHECK_THROWS(z(3, 1) + z(5, 1));
  Matrix<CycScalar> a(1, 1, q(3, 0)), b(1, 1, q(5, 0));
  CHECK_THROWS_AS(solve_linear(a, b), std::invalid_argument);
}

TEST_CASE("solve_linear examples") {
  const Rational zero(0);
  SUBCASE("identity") {
    auto a = Matrix<Rational>::identity(3, zero);
    Matrix<Rational> b(3, 1, zero);
    b(0, 0) = Rational(4);
    b(1, 0) = Rational(-1, 2);
    b(2, 0) = Rational(7);
    auto sol = solve_linear(a, b);
    CHECK(sol.consistent);
    CHECK(sol.particular == b);
    CHECK(sol.kernel.empty());
  }
  SUBCASE("zero 2x2 with matrix unknowns") {
    Matrix<Rational> a(2, 2, zero), b(2, 2, zero);
    auto sol = solve_linear(a, b);
    CHECK(sol.consistent);
    CHECK(sol.kernel.size() == 4);
  }
  SUBCASE("inconsistent rank-1 system") {
    Matrix<Rational> a(2, 2, zero), b(2, 1, zero);
    a(0, 0) = 1;
    a(0, 1) = 1;
    a(1, 0) = 2;
    a(1, 1) = 2;
    b(0, 0) = 1;
    b(1, 0) = 3;
    CHECK_FALSE(solve_linear(a, b).consistent);
  }
}

TEST_CASE("kernel_dimension examples") {
  const Rational zero(0);
  CHECK(kernel_dimension(Matrix<Rational>::identity(4, zero)) == 0);
  CHECK(kernel_dimension(Matrix<Rational>(3, 5, zero)) == 5);
  // u1 v1^T + u2 v2^T with independent u's and v's has rank 2.
  const int u1[] = {1, 0, 1, 0}, v1[] = {1, 2, 0, 1}, u2[] = {0, 1, 1, 1}, v2[] = {1, 0, 3, 0};
  Matrix<Rational> a(4, 4, zero);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = Rational(u1[i] * v1[j] + u2[i] * v2[j]);
  CHECK(kernel_dimension(a) == 2);
  CHECK(kernel_basis(a).size() == 2);
}

TEST_CASE("random consistent systems over Q, F_p and Q(zeta_p)") {
  check_random_systems<Rational>(Rational(0), [](int v) { return Rational(v); });
  check_random_systems<FpScalar>(FpScalar(5, 0), [](int v) { return FpScalar(5, v); });
  check_random_systems<CycScalar>(q(3, 0), [](int v) { return q(3, v) + (v % 2 ? z(3, 1) : q(3, 0)); });
}

TEST_CASE("F_p helpers") {
  CHECK(legendre(2, 3) == -1);
  CHECK(legendre(4, 5) == 1);
  CHECK(legendre(2, 11) == -1);
  CHECK(least_nonsquare(7) == 3);
  CHECK(FpScalar(7, 3) * FpScalar(7, 3).inverse() == FpScalar(7, 1));
  CHECK(determinant(Matrix<FpScalar>::identity(3, FpScalar(5, 0))) == FpScalar(5, 1));
}
