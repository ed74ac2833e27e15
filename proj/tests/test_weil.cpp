#include <random>

#include "doctest.h"
#include "weilheis/finrep.hpp"
#include "weilheis/matrix_groups.hpp"
#include "weilheis/weil.hpp"

using namespace weilheis;

namespace {

std::shared_ptr<const WeilLift> lift_for(int p, std::size_t n, int unit = 1) {
  const SympSpace v = make_space(p, n);
  return std::make_shared<const WeilLift>(make_heisenberg(v), standard_decomposition(v, n), CentralCharacter{p, unit});
}

CycMatrix identity_like(const WeilLift& w) { return CycMatrix::identity(w.dim(), CycScalar(w.p())); }

std::int64_t squared_abs_rational(const CycScalar& t) {
  const CycScalar n = t * t.conj();
  REQUIRE(n.is_rational());
  REQUIRE(n.numerators()[0] % n.den() == 0);
  return n.numerators()[0] / n.den();
}

std::size_t fixed_dim(const FpMatrix& s) {
  return kernel_dimension(s - fp_identity(s.zero().p(), s.rows()));
}

}  // namespace

TEST_CASE("intertwiner examples") {
  auto lift = lift_for(3, 1);
  const auto& heis = lift->heisenberg_group();
  const FiniteRep& rho = lift->heisenberg();
  CHECK(intertwiner_for(fp_identity(3, 2), rho, heis) == identity_like(*lift));

  // -1 gives the parity operator delta_z -> delta_{-z}.
  const CycMatrix parity = intertwiner_for(FpScalar(3, -1) * fp_identity(3, 2), rho, heis);
  CycMatrix expected(3, 3, CycScalar(3));
  for (std::size_t z = 0; z < 3; ++z) expected((3 - z) % 3, z) = CycScalar(3, Rational(1));
  CHECK(parity == expected);

  // A Levi element acts by f -> f(m^-1 .), a plain permutation up to scalar.
  for (int a = 1; a < 3; ++a) {
    const FpMatrix m = levi_element(lift->decomposition(), fp_matrix(3, 1, 1, {a}));
    const CycMatrix t = intertwiner_for(m, rho, heis);
    const Monomial want = *lift->levi_monomial(m);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 3; ++i) CHECK(t(i, j).is_zero() == (i != want.perm[j]));
  }

  // Not symplectic.
  CHECK_THROWS_AS(intertwiner_for(fp_matrix(3, 2, 2, {1, 1, 0, 2}), rho, heis), std::invalid_argument);

  // p = 5, n = 2: still a single intertwining line for a random element.
  auto big = lift_for(5, 2);
  const auto gens = sp_generators(big->heisenberg_group()->space());
  const FpMatrix s = gens.front() * gens.back();
  const CycMatrix t = intertwiner_for(s, big->heisenberg(), big->heisenberg_group(), 25);
  CHECK_FALSE(t.is_zero());
}

TEST_CASE("homomorphism on Sp2(F3), exhaustive") {
  auto lift = lift_for(3, 1);
  auto sp = sp_group(lift->heisenberg_group()->space());
  REQUIRE(sp->size() == 24);
  std::vector<CycMatrix> w;
  for (std::size_t i = 0; i < 24; ++i) w.push_back(lift->matrix(sp->element(i)));
  std::size_t bad = 0;
  for (std::size_t i = 0; i < 24; ++i)
    for (std::size_t j = 0; j < 24; ++j)
      if (!(w[*sp->index_of(sp->mul(sp->element(i), sp->element(j)))] == w[i] * w[j])) ++bad;
  CHECK(bad == 0);
  CHECK(trace(lift->matrix(sp->identity())) == CycScalar(3, Rational(3)));
}

TEST_CASE("homomorphism for other primes and decompositions") {
  SUBCASE("p = 5, n = 1, exhaustive") {
    auto lift = lift_for(5, 1, 2);
    auto sp = sp_group(lift->heisenberg_group()->space());
    REQUIRE(sp->size() == 120);
    std::vector<CycMatrix> w;
    for (std::size_t i = 0; i < sp->size(); ++i) w.push_back(lift->matrix(sp->element(i)));
    std::size_t bad = 0;
    for (std::size_t i = 0; i < sp->size(); ++i)
      for (std::size_t j = 0; j < sp->size(); ++j)
        if (!(w[*sp->index_of(sp->mul(sp->element(i), sp->element(j)))] == w[i] * w[j])) ++bad;
    CHECK(bad == 0);
  }
  SUBCASE("skew Lagrangian pair") {
    const SympSpace v = make_space(3, 1);
    auto lift = std::make_shared<const WeilLift>(make_heisenberg(v), decompose(v, {{1, 1}}, {}, {{0, 1}}),
                                                 CentralCharacter{3, 1});
    auto sp = sp_group(v);
    const ActionCheck r =
        semidirect_action_check([lift](const Code& s) { return lift->matrix(s); }, lift->heisenberg(), sp,
                                lift->heisenberg_group(), 0, 1);
    CHECK(r.pass);
    CHECK(r.exhaustive);
  }
}

TEST_CASE("homomorphism on Sp4(F3), generators plus sampled pairs") {
  auto lift = lift_for(3, 2);
  const SympSpace& v = lift->heisenberg_group()->space();
  const auto gens = sp_generators(v);
  for (const auto& a : gens)
    for (const auto& b : gens) CHECK(lift->operator()(a * b) == lift->operator()(a) * lift->operator()(b));
  auto sp = sp_group(v);
  REQUIRE(sp->size() == 51840);
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, sp->size() - 1);
  std::size_t bad = 0;
  for (int t = 0; t < 300; ++t) {
    const Code a = sp->element(pick(rng)), b = sp->element(pick(rng));
    if (!(lift->matrix(sp->mul(a, b)) == lift->matrix(a) * lift->matrix(b))) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("character norms match fixed-space dimensions on Sp2(F3)") {
  auto lift = lift_for(3, 1);
  const SympSpace& v = lift->heisenberg_group()->space();
  for (const auto& s : enumerate_sp(v)) {
    const std::int64_t norm = squared_abs_rational(trace(lift->operator()(s)));
    std::int64_t want = 1;
    for (std::size_t i = 0; i < fixed_dim(s); ++i) want *= 3;
    CHECK(norm == want);
  }
}

TEST_CASE("Levi normalization") {
  for (int p : {3, 5}) {
    auto lift = lift_for(p, 2);
    const Decomposition& d = lift->decomposition();
    for (const auto& a : enumerate_gl(p, 2)) {
      const FpMatrix m = levi_element(d, a);
      const Monomial mono = *lift->levi_monomial(m);
      const int chi = legendre(determinant(a).value(), p);
      // Signed permutation f -> chi f(m^-1 .), matrix-exact.
      CHECK(lift->operator()(m) == mono.dense(p));
      std::int64_t fixed = 1;
      for (std::size_t i = 0; i < fixed_dim(inverse(a).transpose()); ++i) fixed *= p;
      CHECK(trace(lift->operator()(m)) == CycScalar(p, Rational(chi * fixed)));
      if (p == 5) break;
    }
  }
  auto lift = lift_for(3, 1);
  const FpMatrix m = levi_element(lift->decomposition(), fp_matrix(3, 1, 1, {2}));
  CHECK(trace(lift->operator()(m)) == CycScalar(3, Rational(-1)));
}

TEST_CASE("twists by characters of SL2(F3)") {
  auto lift = lift_for(3, 1);
  auto sp = sp_group(lift->heisenberg_group()->space());
  const Code u = encode(fp_matrix(3, 2, 2, {1, 1, 0, 1}));
  REQUIRE(lift->adapted(fp_matrix(3, 2, 2, {1, 1, 0, 1})) == fp_matrix(3, 2, 2, {1, 1, 0, 1}));
  // Abelianization Z/3: Q8 is the set of elements with s^4 = 1.
  auto in_q8 = [&](const Code& s) {
    Code x = s;
    for (int i = 0; i < 3; ++i) x = sp->mul(x, s);
    return x == sp->identity();
  };
  auto level = [&](const Code& s) {
    Code x = s;
    for (int k = 0; k < 3; ++k) {
      if (in_q8(x)) return k;
      x = sp->mul(sp->inv(u), x);
    }
    FAIL("element outside every Q8 coset");
    return 0;
  };
  for (int j = 1; j < 3; ++j) {
    auto twisted = [&](const Code& s) { return CycScalar::zeta_power(3, j * level(s)) * lift->matrix(s); };
    // Still a representation, still on the Levi trace condition.
    for (std::size_t a = 0; a < 24; ++a)
      for (std::size_t b = 0; b < 24; ++b) {
        const Code x = sp->element(a), y = sp->element(b);
        CHECK(twisted(sp->mul(x, y)) == twisted(x) * twisted(y));
      }
    for (int a = 1; a < 3; ++a) {
      const Code m = encode(levi_element(lift->decomposition(), fp_matrix(3, 1, 1, {a})));
      CHECK(trace(twisted(m)) == trace(lift->matrix(m)));
    }
    // The pure-quadratic radical normalization is what separates the lifts.
    CHECK(lift->matrix(u)(0, 0) == CycScalar(3, Rational(1)));
    CHECK_FALSE(twisted(u)(0, 0) == CycScalar(3, Rational(1)));
  }
}

TEST_CASE("determinant coherence") {
  auto lift = lift_for(3, 1);
  auto sp = sp_group(lift->heisenberg_group()->space());
  for (std::size_t i = 0; i < 24; i += 5)
    for (std::size_t j = 0; j < 24; j += 7) {
      const Code a = sp->element(i), b = sp->element(j);
      CHECK(determinant(lift->matrix(sp->mul(a, b))) == determinant(lift->matrix(a)) * determinant(lift->matrix(b)));
    }
}

TEST_CASE("semidirect action check") {
  auto lift = lift_for(3, 1);
  auto sp = sp_group(lift->heisenberg_group()->space());
  auto w = [lift](const Code& s) { return lift->matrix(s); };
  const ActionCheck ok = semidirect_action_check(w, lift->heisenberg(), sp, lift->heisenberg_group(), 0, 7);
  CHECK(ok.pass);
  CHECK(ok.exhaustive);
  CHECK(ok.conjugation_pairs >= 24 * 27);
  CHECK(ok.product_pairs >= 24 * 24);

  // Negate W at one non-central generator.
  Code s0;
  for (const auto& g : sp->generators())
    if (sp->mul(g, g) != sp->identity() && s0.empty()) s0 = g;
  REQUIRE_FALSE(s0.empty());
  auto bad = [lift, s0](const Code& s) {
    CycMatrix m = lift->matrix(s);
    return s == s0 ? CycScalar(3, Rational(-1)) * m : m;
  };
  const ActionCheck fail = semidirect_action_check(bad, lift->heisenberg(), sp, lift->heisenberg_group(), 0, 7);
  CHECK_FALSE(fail.pass);
  REQUIRE(fail.witness.has_value());
  CHECK((fail.witness->first == s0 || fail.witness->second == s0 ||
         sp->mul(fail.witness->first, fail.witness->second) == s0));

  auto lift4 = lift_for(3, 2);
  auto sp4 = sp_group(lift4->heisenberg_group()->space());
  const ActionCheck sampled = semidirect_action_check([lift4](const Code& s) { return lift4->matrix(s); },
                                                      lift4->heisenberg(), sp4, lift4->heisenberg_group(), 200, 11);
  CHECK(sampled.pass);
  CHECK_FALSE(sampled.exhaustive);
}

TEST_CASE("Weil-Heisenberg representation") {
  auto lift = lift_for(3, 1);
  auto sp = sp_group(lift->heisenberg_group()->space());
  auto g = semidirect(sp, lift->heisenberg_group(), symplectic_action(3, 2), "Sp x| V#");
  const FiniteRep r = weil_heisenberg_rep(lift, g);
  CHECK(r.dim() == 3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, g->size() - 1);
  for (int t = 0; t < 400; ++t) {
    const Code a = g->element(pick(rng)), b = g->element(pick(rng));
    CHECK(r.matrix(g->mul(a, b)) == r.matrix(a) * r.matrix(b));
    CHECK(r.character(a) == trace(r.matrix(a)));
  }
  // Irreducible, and extends the Heisenberg representation.
  CHECK(dim_hom(r, r) == 1);
  for (std::size_t i = 0; i < lift->heisenberg_group()->size(); ++i) {
    const Code h = lift->heisenberg_group()->element(i);
    CHECK(r.matrix(g->join(sp->identity(), h)) == lift->heisenberg().matrix(h));
  }
  // Levi-only group: the Weil representation is monomial.
  auto torus = subgroup(sp, [](const Code& c) { return c[1] == 0 && c[2] == 0; }, "T");
  CHECK(weil_rep(lift, torus).is_monomial());
  CHECK_FALSE(weil_rep(lift, sp).is_monomial());
}
