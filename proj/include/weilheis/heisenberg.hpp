#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "weilheis/cyclotomic.hpp"
#include "weilheis/finrep.hpp"
#include "weilheis/symplectic.hpp"

namespace weilheis {

/// Element (v, a) of the Heisenberg group on V x F_p.
struct HeisElem {
  FpVec v;
  int a = 0;
  friend bool operator==(const HeisElem&, const HeisElem&) = default;
};

/// V# with (v,a)(v',a') = (v+v', a+a'+<v,v'>/2). Codes are v followed by a,
/// enumerated in lexicographic order.
class HeisGroup : public FiniteGroup {
 public:
  explicit HeisGroup(SympSpace space);

  const SympSpace& space() const { return space_; }
  int p() const { return space_.p(); }

  HeisElem mul(const HeisElem& g, const HeisElem& h) const;
  HeisElem inv(const HeisElem& g) const;
  HeisElem commutator(const HeisElem& g, const HeisElem& h) const;
  HeisElem decode(const Code& c) const;
  Code encode(const HeisElem& g) const;

  std::size_t size() const override { return order_; }
  Code element(std::size_t i) const override;
  std::optional<std::size_t> index_of(const Code& c) const override;
  Code mul(const Code& a, const Code& b) const override;
  Code inv(const Code& a) const override;
  Code identity() const override { return Code(space_.dim() + 1, 0); }
  /// (e_i, 0), (f_i, 0) for the default basis vectors, then (0, 1).
  std::vector<Code> generators() const override;

 private:
  void check(const HeisElem& g) const;
  int pair(const int* u, const int* v) const;

  SympSpace space_;
  std::size_t order_;
  int half_;
  std::vector<int> gram_;
};

using HeisPtr = std::shared_ptr<const HeisGroup>;
HeisPtr make_heisenberg(const SympSpace& space);

/// a -> zeta_p^(c a).
struct CentralCharacter {
  int p = 3;
  int c = 1;

  bool nontrivial() const { return mod(c, p) != 0; }
  CycScalar operator()(std::int64_t a) const { return CycScalar::zeta_power(p, static_cast<std::int64_t>(c) * a); }
};

/// Schroedinger model of the Heisenberg representation on functions on the
/// Lagrangian V- (coordinates along the dual basis f_1..f_k of the adapted
/// basis). (v-, 0) translates, (v+, 0) multiplies by psi(<v+, x>), the centre
/// acts by psi. Monomial in the delta basis.
FiniteRep schrodinger_rep(const HeisPtr& group, const Decomposition& decomp, const CentralCharacter& psi);

/// Precompose a representation of V# with the symplectic action of s.
FiniteRep conjugate_by(const FiniteRep& rep, const HeisPtr& group, const FpMatrix& s);

/// Dimension of the space of V#-equivariant maps, solved over generators.
std::size_t intertwining_dim(const FiniteRep& a, const FiniteRep& b);

}  // namespace weilheis
