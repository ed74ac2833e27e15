#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "weilheis/matrix.hpp"
#include "weilheis/rational.hpp"
#include "weilheis/report.hpp"

namespace weilheis {

/// Finite sum of c_k varpi^k with rational c_k, where varpi^2 = pi has
/// valuation 1/2. Terms of different degree never cancel each other.
class ValuedScalar {
 public:
  ValuedScalar() = default;
  ValuedScalar(Rational c) : ValuedScalar(std::move(c), 0) {}  // NOLINT(implicit)
  ValuedScalar(Rational c, int varpi_exponent);

  static ValuedScalar varpi(int exponent = 1) { return {Rational(1), exponent}; }
  static ValuedScalar pi(int exponent = 1) { return varpi(2 * exponent); }

  /// varpi-exponent -> nonzero coefficient.
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ValuedScalar zero() const { return {}; }
  ValuedScalar one() const { return Rational(1); }

  /// Least exponent over two; nullopt stands for +infinity.
  std::optional<Rational> val() const;
  /// Coefficient of the lowest term (zero for zero).
  Rational leading_coefficient() const;

  friend ValuedScalar operator+(ValuedScalar a, const ValuedScalar& b) { return a += b; }
  friend ValuedScalar operator-(ValuedScalar a, const ValuedScalar& b) { return a -= b; }
  friend ValuedScalar operator*(const ValuedScalar& a, const ValuedScalar& b);
  ValuedScalar operator-() const;
  ValuedScalar& operator+=(const ValuedScalar& o);
  ValuedScalar& operator-=(const ValuedScalar& o);
  ValuedScalar& operator*=(const ValuedScalar& o) { return *this = *this * o; }
  friend bool operator==(const ValuedScalar&, const ValuedScalar&) = default;

  /// Terms by increasing exponent, e.g. "2*varpi^-1" or "-1 + varpi^2";
  /// "0" for zero.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const ValuedScalar& x) { return os << x.str(); }

 private:
  std::map<int, Rational> terms_;
};

using ValuedMatrix = Matrix<ValuedScalar>;

/// "+inf" or the rational valuation.
std::string val_string(const ValuedScalar& x);

/// A character or cocharacter of the diagonal torus of Sp_2n, in the
/// coordinates e_1..e_n.
using Weight = std::vector<int>;

int pairing(const Weight& a, const Weight& b);
std::string weight_string(const Weight& w);

struct RootDatumC {
  std::size_t n = 0;
  /// +-e_i +- e_j (i < j), then +-2e_i.
  std::vector<Weight> roots;

  /// +-e_i +- e_j is its own coroot; +-2e_i has coroot +-e_i.
  static Weight coroot(const Weight& root);
  static bool is_long(const Weight& root);
};

RootDatumC c_root_system(std::size_t n);

/// A root of Sp10 outside the C4 factor of U(1) x Sp8, with
/// H = d(coroot)(1) written in the frame where the U(1) torus is
/// conjugated onto the corner plane (e1, e10).
struct ComplementRoot {
  Weight root;
  Weight coroot;
  ValuedMatrix h;
};

/// P: varpi at (1,10), varpi^-1 at (10,1). D_j (2 <= j <= 5): +1 at (j,j),
/// -1 at (11-j, 11-j). Indices 1-based as in the matrices above.
ValuedMatrix corner_element();
ValuedMatrix diagonal_element(std::size_t j);

/// The 18 complement roots; H = c_1 P + sum_{j>=2} c_j D_j for coroot c.
std::vector<ComplementRoot> twisted_levi_complement_sp10();
/// Roots of C5 with vanishing e1 coordinate (the C4 factor), 32 of them.
std::vector<Weight> levi_factor_roots_sp10();

/// The alternating form [[0, J5], [-J5, 0]] with J5 = antidiag(1,-1,1,-1,1).
ValuedMatrix sp10_form();
bool in_sp10(const ValuedMatrix& h);

/// X(A) = tr(N A) for a fixed matrix N.
struct GenericElement {
  std::string name;
  ValuedMatrix n;
  ValuedScalar operator()(const ValuedMatrix& a) const;
};

/// A -> pi^-1 A(1,10) + A(10,1).
GenericElement corner_generic_element();
/// A -> A(1,10) + pi A(10,1): the above multiplied by pi.
GenericElement scaled_generic_element();
GenericElement zero_generic_element();

/// A basis of the centralizer of P in sp10 (the Lie algebra of U(1) x Sp8 in
/// this frame), built from projections of matrix units.
std::vector<ValuedMatrix> centralizer_basis();

/// Number of pairs (Y, E_kl), Y in centralizer_basis(), with X([Y, E_kl]) != 0.
std::size_t invariance_defects(const GenericElement& x);

struct GenericityConfig {
  Rational depth = Rational(1, 2);
  /// "corner", "scaled" or "zero".
  std::string element = "corner";
};

Json config_json(const GenericityConfig& cfg);
GenericElement generic_element_named(const std::string& name);

/// Passes iff val X(H) = -depth for every H in the complement. Every value is
/// listed; failing roots become witnesses.
VerdictReport genericity_check(const GenericElement& x, const std::vector<ComplementRoot>& complement,
                               const Rational& depth);

/// genericity_check on the fixed Sp10 instance, together with the root
/// count, the sp10 membership of every H and the invariance spot check.
VerdictReport run_genericity(const GenericityConfig& cfg);

}  // namespace weilheis
