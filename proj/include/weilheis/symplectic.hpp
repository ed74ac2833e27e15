#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weilheis/fp.hpp"
#include "weilheis/matrix.hpp"

namespace weilheis {

using FpMatrix = Matrix<FpScalar>;
/// Vector of F_p residues in [0, p).
using FpVec = std::vector<int>;
/// Flat integer encoding of a group element (see FiniteGroup).
using Code = std::vector<int>;

/// Group order refused because it exceeds the configured enumeration cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t order, std::uint64_t cap)
      : std::runtime_error(what + " has order " + std::to_string(order) + ", above the cap " +
                           std::to_string(cap)),
        order_(order) {}
  std::uint64_t order() const { return order_; }

 private:
  std::uint64_t order_;
};

inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;

FpMatrix fp_matrix(int p, std::size_t rows, std::size_t cols, const std::vector<int>& entries);
FpMatrix fp_identity(int p, std::size_t n);
FpVec apply(const FpMatrix& m, const FpVec& v);
Code encode(const FpMatrix& m);
FpMatrix decode_matrix(int p, std::size_t n, const int* first);

/// Symplectic F_p-vector space: an alternating non-degenerate Gram matrix.
class SympSpace {
 public:
  int p() const { return p_; }
  std::size_t dim() const { return gram_.rows(); }
  std::size_t half_dim() const { return gram_.rows() / 2; }
  const FpMatrix& gram() const { return gram_; }

  int pair(const FpVec& u, const FpVec& v) const;
  bool is_symplectic(const FpMatrix& s) const;

  /// Basis vectors e_i, f_i (1-based) of the default hyperbolic basis
  /// e_1 .. e_n, f_n .. f_1.
  FpVec e(std::size_t i) const;
  FpVec f(std::size_t i) const;

  friend SympSpace make_space(int p, std::size_t n, std::optional<FpMatrix> gram);

 private:
  int p_ = 3;
  FpMatrix gram_;
};

/// Validated symplectic space of dimension 2n. Without a Gram matrix the
/// standard hyperbolic form <e_i, f_i> = 1 in the basis e_1..e_n, f_n..f_1 is used.
SympSpace make_space(int p, std::size_t n, std::optional<FpMatrix> gram = std::nullopt);

/// Symplectic basis (e_1..e_m, f_1..f_m), <e_i, f_j> = delta_ij, of the span of
/// `vectors`, which must be non-degenerate.
std::pair<std::vector<FpVec>, std::vector<FpVec>> symplectic_basis(const SympSpace& space,
                                                                    std::vector<FpVec> vectors);

/// A certified splitting V = V+ (+) V0 (+) V-.
class Decomposition {
 public:
  const SympSpace& space() const { return space_; }
  const std::vector<FpVec>& plus() const { return plus_; }
  const std::vector<FpVec>& zero() const { return zero_; }
  const std::vector<FpVec>& minus() const { return minus_; }
  std::size_t k() const { return plus_.size(); }
  std::size_t zero_dim() const { return zero_.size(); }

  /// Coordinates of v in the concatenated basis (plus, zero, minus).
  FpVec coords(const FpVec& v) const;

  /// Symplectic basis adapted to the splitting: columns e_1..e_k (the given
  /// plus basis), a symplectic basis a_1..a_m, b_1..b_m of V0, then
  /// f_1..f_k in V- dual to e. Its Gram matrix depends only on (k, m).
  const FpMatrix& adapted_basis() const { return adapted_; }

  /// The zero part as a symplectic space of its own, in the zero() basis.
  SympSpace zero_space() const;

  friend Decomposition decompose(const SympSpace&, std::vector<FpVec>, std::vector<FpVec>,
                                 std::vector<FpVec>);

 private:
  SympSpace space_;
  std::vector<FpVec> plus_, zero_, minus_;
  FpMatrix basis_inv_;
  FpMatrix adapted_;
};

class DecompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Decomposition decompose(const SympSpace& space, std::vector<FpVec> plus, std::vector<FpVec> zero,
                        std::vector<FpVec> minus);

/// V+ = span(e_1..e_k), V0 = span(e_{k+1}.., f_{k+1}..), V- = span(f_1..f_k)
/// in the default hyperbolic basis.
Decomposition standard_decomposition(const SympSpace& space, std::size_t k);

/// Lagrangian pair (V0 = 0) from a symplectic basis of the whole space.
Decomposition lagrangian_decomposition(const SympSpace& space);

/// Element of Sp(V) mapping the adapted basis of `from` onto that of `to`;
/// requires equal dimension profiles.
FpMatrix conjugating_element(const Decomposition& from, const Decomposition& to);

std::uint64_t sp_order(int p, std::size_t n);
std::uint64_t gl_order(int p, std::size_t n);

/// Sp(V) in lexicographic order of the flattened matrices, generated by
/// closure from Levi, Siegel-radical and Weyl elements.
std::vector<FpMatrix> enumerate_sp(const SympSpace& space, std::uint64_t cap = kDefaultGroupCap);

/// Generators used by enumerate_sp, in the original coordinates.
std::vector<FpMatrix> sp_generators(const SympSpace& space);

/// GL_n(F_p), lexicographically ordered.
std::vector<FpMatrix> enumerate_gl(int p, std::size_t n, std::uint64_t cap = kDefaultGroupCap);

/// Element acting by `a` on V+ (in the plus basis), by the contragredient on
/// V- and trivially on V0.
FpMatrix levi_element(const Decomposition& d, const FpMatrix& a);

bool is_unipotent(const FpMatrix& s);

/// Siegel-type parabolic P = Stab(V+) with its projections.
class ParabolicData {
 public:
  explicit ParabolicData(Decomposition d) : decomp_(std::move(d)) {}

  const Decomposition& decomp() const { return decomp_; }
  bool contains(const FpMatrix& s) const;
  /// s restricted to V+, in the plus basis.
  FpMatrix pr_plus(const FpMatrix& s) const;
  /// s restricted to V+ (+) V0 modulo V+, in the zero basis.
  FpMatrix pr_zero(const FpMatrix& s) const;

 private:
  void require(const FpMatrix& s) const;
  Decomposition decomp_;
};

ParabolicData siegel_parabolic(const Decomposition& d);

/// det(pr_plus(s))^((p-1)/2) as +1 or -1. Throws if s is not in P.
int chi_vplus(const ParabolicData& parab, const FpMatrix& s);

}  // namespace weilheis
