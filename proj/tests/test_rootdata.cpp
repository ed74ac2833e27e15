#include <random>
#include <set>

#include "doctest.h"
#include "weilheis/rootdata.hpp"

using namespace weilheis;

TEST_CASE("valued scalar arithmetic") {
  const ValuedScalar w = ValuedScalar::varpi();
  CHECK(w * w == ValuedScalar::pi());
  CHECK(*w.val() == Rational(1, 2));
  CHECK(*ValuedScalar::pi(-1).val() == Rational(-1));
  CHECK_FALSE(ValuedScalar().val().has_value());
  CHECK(val_string(ValuedScalar()) == "+inf");
  CHECK((w - w).is_zero());
  CHECK((w - w).terms().empty());
  CHECK(ValuedScalar(Rational(2), -1).str() == "2*varpi^-1");
  CHECK((ValuedScalar(Rational(-1)) + ValuedScalar::varpi(2)).str() == "-1 + varpi^2");
  CHECK(ValuedScalar(Rational(-3, 2), 1).str() == "-3/2*varpi");

  // Distinct grades never cancel; equal grades do.
  const ValuedScalar a = ValuedScalar(Rational(1), -1) + ValuedScalar(Rational(1), 1);
  CHECK(a.terms().size() == 2);
  CHECK(*a.val() == Rational(-1, 2));
  CHECK(a.leading_coefficient() == Rational(1));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> exp(-4, 4), coef(-3, 3);
  for (int t = 0; t < 500; ++t) {
    const ValuedScalar x(Rational(coef(rng)), exp(rng)), y(Rational(coef(rng)), exp(rng));
    if (x.is_zero() || y.is_zero()) continue;
    CHECK(*(x * y).val() == *x.val() + *y.val());
    const ValuedScalar s = x + y;
    if (!s.is_zero()) CHECK(*s.val() >= std::min(*x.val(), *y.val()));
    if (*x.val() != *y.val()) CHECK(*s.val() == std::min(*x.val(), *y.val()));
  }
}

TEST_CASE("type C roots") {
  CHECK(c_root_system(1).roots.size() == 2);
  CHECK_THROWS_AS(c_root_system(0), std::invalid_argument);
  for (std::size_t n = 1; n <= 6; ++n) {
    const RootDatumC r = c_root_system(n);
    CHECK(r.roots.size() == 2 * n * n);
    std::set<Weight> distinct(r.roots.begin(), r.roots.end());
    CHECK(distinct.size() == r.roots.size());
    std::size_t longs = 0;
    for (const Weight& a : r.roots) {
      CHECK(pairing(a, RootDatumC::coroot(a)) == 2);
      // Long roots have squared length 4, short ones 2.
      CHECK(pairing(a, a) == (RootDatumC::is_long(a) ? 4 : 2));
      longs += RootDatumC::is_long(a);
      // Closed under negation.
      Weight neg = a;
      for (int& x : neg) x = -x;
      CHECK(distinct.count(neg) == 1);
    }
    CHECK(longs == 2 * n);
  }
}

TEST_CASE("Sp10 complement of U(1) x Sp8") {
  const auto complement = twisted_levi_complement_sp10();
  CHECK(complement.size() == 18);
  CHECK(levi_factor_roots_sp10().size() == 32);
  CHECK(complement.size() + levi_factor_roots_sp10().size() == c_root_system(5).roots.size());

  const ValuedMatrix p = corner_element();
  CHECK(p(0, 9) == ValuedScalar::varpi(1));
  CHECK(p(9, 0) == ValuedScalar::varpi(-1));
  CHECK(diagonal_element(2)(1, 1) == ValuedScalar(Rational(1)));
  CHECK(diagonal_element(2)(8, 8) == ValuedScalar(Rational(-1)));

  std::size_t pure = 0;
  std::set<std::string> shapes;
  for (const ComplementRoot& c : complement) {
    CHECK(in_sp10(c.h));
    CHECK((c.h == p || c.h == ValuedScalar(Rational(-1)) * p) == RootDatumC::is_long(c.root));
    pure += RootDatumC::is_long(c.root);
    // Off-diagonal support is exactly the two corners, carrying +-varpi^{+-1}.
    for (std::size_t i = 0; i < 10; ++i)
      for (std::size_t j = 0; j < 10; ++j) {
        if (i == j) continue;
        const bool corner = (i == 0 && j == 9) || (i == 9 && j == 0);
        CHECK(c.h(i, j).is_zero() != corner);
      }
    CHECK(c.h(0, 0).is_zero());
    CHECK(c.h(9, 9).is_zero());
    shapes.insert(c.h.str());
  }
  CHECK(pure == 2);
  CHECK(shapes.size() == 18);
  // One of the listed sums: P + diag(0,1,0,0,0,0,0,0,-1,0).
  CHECK(shapes.count((p + diagonal_element(2)).str()) == 1);

  ValuedMatrix not_sp = ValuedMatrix::identity(10, ValuedScalar());
  CHECK_FALSE(in_sp10(not_sp));
}

TEST_CASE("generic element") {
  const GenericElement x = corner_generic_element();
  for (const ComplementRoot& c : twisted_levi_complement_sp10()) {
    const ValuedScalar v = x(c.h);
    CHECK(v.terms().size() == 1);
    CHECK(*v.val() == Rational(-1, 2));
    CHECK((v.leading_coefficient() == Rational(2) || v.leading_coefficient() == Rational(-2)));
  }
  // X(A) = pi^-1 A(1,10) + A(10,1) on a generic matrix.
  ValuedMatrix a(10, 10, ValuedScalar());
  a(0, 9) = Rational(3);
  a(9, 0) = Rational(5);
  a(4, 4) = Rational(7);
  CHECK(x(a) == ValuedScalar(Rational(3), -2) + ValuedScalar(Rational(5)));

  CHECK(centralizer_basis().size() == 37);
  for (const auto& y : centralizer_basis()) CHECK(in_sp10(y));
  CHECK(invariance_defects(x) == 0);
  // A functional that does not come from the centralizer is caught.
  GenericElement off{"off", ValuedMatrix(10, 10, ValuedScalar())};
  off.n(1, 2) = Rational(1);
  CHECK(invariance_defects(off) > 0);
}

TEST_CASE("genericity verdicts") {
  const auto complement = twisted_levi_complement_sp10();
  const VerdictReport r = genericity_check(corner_generic_element(), complement, Rational(1, 2));
  CHECK(r.pass);
  CHECK(r.dims["roots"] == 18);
  for (const auto& v : r.dims["values"]) {
    CHECK(v["val"] == "-1/2");
    CHECK((v["value"] == "2*varpi^-1" || v["value"] == "-2*varpi^-1"));
  }

  const VerdictReport scaled = genericity_check(scaled_generic_element(), complement, Rational(1, 2));
  CHECK_FALSE(scaled.pass);
  CHECK(scaled.witnesses.size() == 18);
  CHECK(scaled.witnesses[0]["val"] == "1/2");

  const VerdictReport zero = genericity_check(zero_generic_element(), complement, Rational(1, 2));
  CHECK_FALSE(zero.pass);
  for (const auto& w : zero.witnesses) CHECK(w["val"] == "+inf");

  // Wrong depth fails too.
  CHECK_FALSE(genericity_check(corner_generic_element(), complement, Rational(1)).pass);

  const VerdictReport full = run_genericity({});
  CHECK(full.pass);
  CHECK(full.dims["roots_complement"] == 18);
  CHECK(full.dims["roots_levi_factor"] == 32);
  CHECK(full.dims["h_outside_sp10"] == 0);
  CHECK(full.dims["invariance_defects"] == 0);
  CHECK_FALSE(run_genericity({Rational(1, 2), "scaled"}).pass);
  CHECK_THROWS_AS(run_genericity({Rational(1, 2), "nonsense"}), std::invalid_argument);
}
