#include <random>
#include <unordered_map>

#include "doctest.h"
#include "weilheis/code_hash.hpp"
#include "weilheis/symplectic.hpp"

using namespace weilheis;

namespace {

// Brute force: every 2x2 matrix over F_p preserving the standard form.
std::size_t brute_force_sp2(int p) {
  const SympSpace v = make_space(p, 1);
  std::size_t count = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (v.is_symplectic(fp_matrix(p, 2, 2, {a, b, c, d}))) ++count;
  return count;
}

std::vector<FpVec> transform(const FpMatrix& s, const std::vector<FpVec>& vs) {
  std::vector<FpVec> out;
  for (const auto& v : vs) out.push_back(apply(s, v));
  return out;
}

}  // namespace

TEST_CASE("make_space") {
  const SympSpace v = make_space(3, 1);
  CHECK(v.dim() == 2);
  CHECK(v.pair(v.e(1), v.f(1)) == 1);
  CHECK(v.pair(v.f(1), v.e(1)) == 2);
  const SympSpace w = make_space(3, 2);
  CHECK(w.dim() == 4);
  CHECK(w.pair(w.e(2), w.f(2)) == 1);
  CHECK(w.pair(w.e(1), w.f(2)) == 0);
  CHECK_THROWS_AS(make_space(3, 1, FpMatrix(2, 2, FpScalar(3, 0))), std::invalid_argument);
  CHECK_THROWS_AS(make_space(3, 1, fp_matrix(3, 2, 2, {0, 1, 1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(make_space(2, 1), UnsupportedCharacteristic);
}

TEST_CASE("decompose") {
  const SympSpace v2 = make_space(3, 1);
  CHECK(decompose(v2, {v2.e(1)}, {}, {v2.f(1)}).k() == 1);
  const SympSpace v4 = make_space(3, 2);
  auto d = decompose(v4, {v4.e(1)}, {v4.e(2), v4.f(2)}, {v4.f(1)});
  CHECK(d.zero_dim() == 2);
  CHECK(d.zero_space().dim() == 2);
  CHECK_THROWS_WITH_AS(decompose(v2, {v2.e(1), v2.f(1)}, {}, {}), "not totally isotropic", DecompositionError);
  CHECK_THROWS_WITH_AS(decompose(v4, {v4.e(1)}, {v4.e(2), v4.e(1)}, {v4.f(1)}), "not a basis", DecompositionError);
  CHECK_THROWS_WITH_AS(decompose(v4, {v4.e(1)}, {v4.f(1), v4.f(2)}, {v4.e(2)}), "complement condition fails",
                       DecompositionError);
}

TEST_CASE("adapted basis is symplectic with the standard block Gram") {
  const SympSpace v4 = make_space(5, 2);
  // A non-standard splitting: V+ = <e1 + e2>, V- = <f1>, V0 chosen to match.
  FpVec plus = v4.e(1);
  plus[1] = 1;
  auto d = decompose(v4, {plus}, {v4.e(2), [&] {
                                    FpVec x = v4.f(2);
                                    x[v4.dim() - 1] = 4;  // f2 - f1 pairs to zero with e1 + e2
                                    return x;
                                  }()},
                     {v4.f(1)});
  const FpMatrix& q = d.adapted_basis();
  const FpMatrix g = q.transpose() * v4.gram() * q;
  CHECK(g(0, 3).value() == 1);
  CHECK(g(1, 2).value() == 1);
  CHECK(g(0, 1).value() == 0);
  CHECK(g(0, 2).value() == 0);
}

TEST_CASE("enumerate_sp counts") {
  CHECK(brute_force_sp2(3) == 24);
  CHECK(brute_force_sp2(5) == 120);
  const auto sp2_3 = enumerate_sp(make_space(3, 1));
  CHECK(sp2_3.size() == 24);
  CHECK(enumerate_sp(make_space(5, 1)).size() == 120);
  CHECK(sp_order(3, 2) == 81ull * 8 * 80);
  const SympSpace v4 = make_space(3, 2);
  const auto sp4 = enumerate_sp(v4);
  REQUIRE(sp4.size() == 51840);
  for (std::size_t i = 0; i < sp4.size(); i += 7) CHECK(v4.is_symplectic(sp4[i]));
  for (std::size_t i = 1; i < sp4.size(); ++i) REQUIRE(encode(sp4[i - 1]) < encode(sp4[i]));
  CHECK_THROWS_AS(enumerate_sp(make_space(5, 2), 1000), CapExceeded);
  CHECK_THROWS_AS(make_space(2, 1), UnsupportedCharacteristic);
}

TEST_CASE("siegel parabolic and chi") {
  const SympSpace v2 = make_space(3, 1);
  const auto parab = siegel_parabolic(standard_decomposition(v2, 1));
  const FpMatrix id = fp_identity(3, 2);
  CHECK(parab.contains(id));
  CHECK(parab.pr_plus(id) == fp_identity(3, 1));
  CHECK(chi_vplus(parab, id) == 1);
  const FpMatrix m = levi_element(parab.decomp(), fp_matrix(3, 1, 1, {2}));
  CHECK(v2.is_symplectic(m));
  CHECK(parab.contains(m));
  CHECK(parab.pr_plus(m) == fp_matrix(3, 1, 1, {2}));
  CHECK(chi_vplus(parab, m) == -1);
  // Hyperbolic Weyl element e1 -> f1, f1 -> -e1.
  const FpMatrix w = fp_matrix(3, 2, 2, {0, 2, 1, 0});
  CHECK(v2.is_symplectic(w));
  CHECK_FALSE(parab.contains(w));
  CHECK_THROWS(chi_vplus(parab, w));

  SUBCASE("Levi with pr_plus = diag(1, a)") {
    const SympSpace v4 = make_space(5, 2);
    const auto p4 = siegel_parabolic(standard_decomposition(v4, 2));
    const FpMatrix lev = levi_element(p4.decomp(), fp_matrix(5, 2, 2, {1, 0, 0, 2}));
    CHECK(v4.is_symplectic(lev));
    CHECK(chi_vplus(p4, lev) == -1);
  }
}

TEST_CASE("chi is a character of P, trivial on unipotents; projections are homomorphisms") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 1}, {2, 2}}) {
    const SympSpace v = make_space(3, n);
    const auto parab = siegel_parabolic(standard_decomposition(v, k));
    std::vector<FpMatrix> pgrp;
    for (const auto& s : enumerate_sp(v))
      if (parab.contains(s)) pgrp.push_back(s);
    CHECK(pgrp.size() * (n == 1 ? 4 : 40) == sp_order(3, n));
    std::mt19937_64 rng(n * 10 + k);
    std::uniform_int_distribution<std::size_t> pick(0, pgrp.size() - 1);
    const std::size_t trials = n == 1 ? pgrp.size() * pgrp.size() : 3000;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& a = n == 1 ? pgrp[t / pgrp.size()] : pgrp[pick(rng)];
      const auto& b = n == 1 ? pgrp[t % pgrp.size()] : pgrp[pick(rng)];
      const FpMatrix ab = a * b;
      REQUIRE(parab.contains(ab));
      CHECK(chi_vplus(parab, ab) == chi_vplus(parab, a) * chi_vplus(parab, b));
      CHECK(parab.pr_plus(ab) == parab.pr_plus(a) * parab.pr_plus(b));
      if (parab.decomp().zero_dim() > 0) CHECK(parab.pr_zero(ab) == parab.pr_zero(a) * parab.pr_zero(b));
    }
    for (const auto& s : pgrp)
      if (is_unipotent(s)) CHECK(chi_vplus(parab, s) == 1);
  }
}

TEST_CASE("decompositions with the same profile are conjugate") {
  const SympSpace v = make_space(3, 2);
  const auto sp = enumerate_sp(v);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, sp.size() - 1);
  for (std::size_t k : {1, 2}) {
    const auto base = standard_decomposition(v, k);
    for (int t = 0; t < 20; ++t) {
      const FpMatrix g = sp[pick(rng)];
      const auto moved = decompose(v, transform(g, base.plus()), transform(g, base.zero()), transform(g, base.minus()));
      const FpMatrix c = conjugating_element(base, moved);
      CHECK(v.is_symplectic(c));
      for (const auto& x : base.plus()) {
        auto co = moved.coords(apply(c, x));
        for (std::size_t i = k; i < v.dim(); ++i) CHECK(co[i] == 0);
      }
      for (const auto& x : base.minus()) {
        auto co = moved.coords(apply(c, x));
        for (std::size_t i = 0; i < v.dim() - k; ++i) CHECK(co[i] == 0);
      }
    }
  }
}
