#include <random>

#include "doctest.h"
#include "weilheis/heisenberg.hpp"

using namespace weilheis;

namespace {

HeisElem random_elem(std::mt19937_64& rng, const HeisGroup& g) {
  std::uniform_int_distribution<int> d(0, g.p() - 1);
  HeisElem x;
  x.v.resize(g.space().dim());
  for (auto& c : x.v) c = d(rng);
  x.a = d(rng);
  return x;
}

}  // namespace

TEST_CASE("group law") {
  const SympSpace v = make_space(3, 1);
  const HeisGroup g(v);
  const HeisElem e{{0, 0}, 0}, x{{1, 2}, 1}, y{{2, 2}, 0};
  CHECK(g.mul(e, x) == x);
  CHECK(g.inv(x) == HeisElem{{2, 1}, 2});
  CHECK(g.mul(x, g.inv(x)) == e);
  // [(v,0),(v',0)] = (0, <v,v'>)
  const HeisElem u{{1, 0}, 0}, w{{0, 1}, 0};
  CHECK(g.commutator(u, w) == HeisElem{{0, 0}, v.pair(u.v, w.v)});
  CHECK(g.commutator(u, w).a == 1);
  CHECK_THROWS_AS(g.mul(x, HeisElem{{1, 0, 0, 0}, 0}), std::invalid_argument);
}

TEST_CASE("orders, centre and associativity") {
  SUBCASE("p=3, n=1 exhaustive") {
    auto g = make_heisenberg(make_space(3, 1));
    CHECK(g->size() == 27);
    CHECK(satisfies_group_axioms(*g, 27 * 27 * 27, 0));
    std::size_t central = 0;
    for (std::size_t i = 0; i < g->size(); ++i) {
      const Code x = g->element(i);
      bool commutes = true;
      for (std::size_t j = 0; j < g->size(); ++j)
        if (g->mul(x, g->element(j)) != g->mul(g->element(j), x)) commutes = false;
      if (commutes) {
        ++central;
        CHECK((x[0] == 0 && x[1] == 0));
      }
    }
    CHECK(central == 3);
  }
  for (auto [p, n] : {std::pair{3, 2}, std::pair{5, 1}}) {
    CAPTURE(p);
    const HeisGroup g(make_space(p, static_cast<std::size_t>(n)));
    std::size_t order = 1;
    for (int i = 0; i < 2 * n + 1; ++i) order *= static_cast<std::size_t>(p);
    CHECK(g.size() == order);
    std::mt19937_64 rng(static_cast<std::uint64_t>(p * 100 + n));
    for (int t = 0; t < 100000; ++t) {
      const HeisElem a = random_elem(rng, g), b = random_elem(rng, g), c = random_elem(rng, g);
      REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      // The quotient by the centre is the additive group of V.
      const HeisElem ab = g.mul(a, b);
      for (std::size_t i = 0; i < a.v.size(); ++i) REQUIRE(ab.v[i] == mod(a.v[i] + b.v[i], p));
    }
  }
}

TEST_CASE("Schroedinger model") {
  for (auto [p, n] : {std::pair<int, std::size_t>{3, 1}, {5, 1}, {3, 2}}) {
    CAPTURE(p);
    CAPTURE(n);
    const SympSpace v = make_space(p, n);
    auto g = make_heisenberg(v);
    const CentralCharacter psi{p, 1};
    const FiniteRep rho = schrodinger_rep(g, standard_decomposition(v, n), psi);
    std::size_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) dim *= static_cast<std::size_t>(p);
    CHECK(rho.dim() == dim);
    CHECK(rho.character(g->identity()) == CycScalar(p, Rational(static_cast<std::int64_t>(dim))));

    // Centre acts by psi.
    Code z = g->identity();
    z.back() = 1;
    CHECK(rho.matrix(z) == psi(1) * CycMatrix::identity(dim, CycScalar(p)));

    // Homomorphism: all pairs for p=3, n=1, seeded random pairs otherwise.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, g->size() - 1);
    const bool all = p == 3 && n == 1;
    const std::size_t trials = all ? g->size() * g->size() : 10000;
    for (std::size_t t = 0; t < trials; ++t) {
      const Code a = g->element(all ? t / g->size() : pick(rng));
      const Code b = g->element(all ? t % g->size() : pick(rng));
      const Monomial lhs = rho.monomial(g->mul(a, b)), rhs = rho.monomial(a) * rho.monomial(b);
      REQUIRE(lhs.perm == rhs.perm);
      REQUIRE(lhs.coeff == rhs.coeff);
    }

    // Character vanishes off the centre and equals p^n psi(a) on it.
    for (std::size_t i = 0; i < g->size(); ++i) {
      const Code x = g->element(i);
      const CycScalar tr = rho.monomial(x).trace(p);
      REQUIRE(tr == rho.character(x));
    }
    CHECK(dim_hom(rho, rho) == 1);
  }
}

TEST_CASE("Schroedinger conventions") {
  const SympSpace v = make_space(3, 1);
  auto g = make_heisenberg(v);
  const CentralCharacter psi{3, 1};
  const FiniteRep rho = schrodinger_rep(g, standard_decomposition(v, 1), psi);
  // (f1, 0) translates delta_0 to delta_1.
  const Monomial t = rho.monomial({0, 1, 0});
  CHECK(t.perm == std::vector<std::size_t>{1, 2, 0});
  CHECK(t.coeff[0] == CycScalar(3, Rational(1)));
  // (e1, 0) multiplies delta_x by psi(<e1, x f1>) = psi(x).
  const Monomial m = rho.monomial({1, 0, 0});
  CHECK(m.perm == std::vector<std::size_t>{0, 1, 2});
  for (int x = 0; x < 3; ++x) CHECK(m.coeff[static_cast<std::size_t>(x)] == psi(x));
  CHECK_THROWS_AS(schrodinger_rep(g, standard_decomposition(v, 1), CentralCharacter{3, 0}), std::invalid_argument);
  const SympSpace v4 = make_space(3, 2);
  CHECK_THROWS_AS(schrodinger_rep(make_heisenberg(v4), standard_decomposition(v4, 1), psi), std::invalid_argument);
}

TEST_CASE("Stone-von Neumann at desk scale") {
  for (auto [p, n] : {std::pair<int, std::size_t>{3, 1}, {5, 1}, {3, 2}}) {
    CAPTURE(p);
    const SympSpace v = make_space(p, n);
    auto g = make_heisenberg(v);
    const FiniteRep rho = schrodinger_rep(g, standard_decomposition(v, n), {p, 1});
    CHECK(intertwining_dim(rho, rho) == 1);
    const FiniteRep other = schrodinger_rep(g, standard_decomposition(v, n), {p, 2});
    CHECK(intertwining_dim(rho, other) == 0);
    CHECK(dim_hom(rho, other) == 0);
    const auto sp = enumerate_sp(v);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, sp.size() - 1);
    for (int t = 0; t < 3; ++t) {
      const FiniteRep conj = conjugate_by(rho, g, sp[pick(rng)]);
      CHECK(intertwining_dim(rho, conj) == 1);
      CHECK(dim_hom(rho, conj) == 1);
    }
    // A model built on a different Lagrangian pair.
    const FpMatrix s = sp[pick(rng)];
    const auto base = standard_decomposition(v, n);
    std::vector<FpVec> plus, minus;
    for (const auto& x : base.plus()) plus.push_back(weilheis::apply(s, x));
    for (const auto& x : base.minus()) minus.push_back(weilheis::apply(s, x));
    const FiniteRep moved = schrodinger_rep(g, decompose(v, plus, {}, minus), {p, 1});
    CHECK(intertwining_dim(rho, moved) == 1);
  }
}
