#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "weilheis/heisenberg.hpp"
#include "weilheis/rep.hpp"

namespace weilheis {

/// Intertwiner W with W rho(h) = rho(s.h) W for all h, by averaging
/// sum_h rho(s.h) E rho(h)^-1 over an elementary matrix E. Normalized so the
/// first nonzero entry (row-major) is 1. When the representation dimension
/// is at most `solver_limit`, the solution space is also solved for and must
/// be one-dimensional; std::logic_error otherwise.
CycMatrix intertwiner_for(const FpMatrix& s, const FiniteRep& rho, const HeisPtr& heis,
                          std::size_t solver_limit = 9);

/// The Weil representation of Sp(V) on the Schroedinger model, normalized on
/// the Siegel Levi by W(m) f = chi(det m|V+) f(m^-1 .) and on the Siegel
/// radical by a pure quadratic phase.
class WeilLift {
 public:
  WeilLift(HeisPtr heis, Decomposition decomp, CentralCharacter psi);

  const HeisPtr& heisenberg_group() const { return heis_; }
  const FiniteRep& heisenberg() const { return rho_; }
  const Decomposition& decomposition() const { return decomp_; }
  const CentralCharacter& psi() const { return psi_; }
  std::size_t dim() const { return dim_; }
  int p() const { return psi_.p; }

  /// W(s) for s in Sp(V), in the original coordinates. Cached.
  CycMatrix operator()(const FpMatrix& s) const;
  CycMatrix matrix(const Code& s) const;

  /// W(s) as a monomial matrix when s preserves both V+ and V-.
  std::optional<Monomial> levi_monomial(const FpMatrix& s) const;
  std::optional<Monomial> levi_monomial(const Code& s) const;

  /// Blocks of s in the adapted basis, [[A, B], [C, D]].
  FpMatrix adapted(const FpMatrix& s) const;

  /// Scalar placed in front of the averaged Weyl intertwiner.
  CycScalar weyl_scalar() const;

 private:
  struct Weyl {
    CycMatrix w, w_inv;
    CycScalar scalar;
  };
  const Weyl& weyl() const;
  CycMatrix compute(const FpMatrix& s) const;
  Monomial levi_block(const FpMatrix& a) const;
  std::vector<CycScalar> quadratic_phase(const FpMatrix& b) const;
  std::size_t index(const std::vector<int>& z) const;
  std::vector<int> digits(std::size_t idx) const;

  HeisPtr heis_;
  Decomposition decomp_;
  CentralCharacter psi_;
  FiniteRep rho_;
  std::size_t n_, dim_;
  FpMatrix to_adapted_, from_adapted_;

  mutable std::once_flag weyl_once_;
  mutable std::unique_ptr<Weyl> weyl_;
  mutable std::mutex cache_mu_;
  mutable std::unordered_map<Code, CycMatrix, CodeHash> cache_;
};

/// The Weil representation of a group of symplectic matrices (Sp(V) or a
/// subgroup). Monomial when every generator preserves V+ and V-.
FiniteRep weil_rep(const std::shared_ptr<const WeilLift>& lift, GroupPtr sp);

/// (s, h) -> W(s) rho(h) on a semidirect product of symplectic matrices with V#.
FiniteRep weil_heisenberg_rep(const std::shared_ptr<const WeilLift>& lift, GroupPtr semidirect_group);

struct ActionCheck {
  bool pass = true;
  bool exhaustive = false;
  std::uint64_t conjugation_pairs = 0;
  std::uint64_t product_pairs = 0;
  /// First failing (s, h) or (s1, s2).
  std::optional<std::pair<Code, Code>> witness;
  std::string failure;
};

/// Checks W(s) rho(h) = rho(s.h) W(s) and W(s1 s2) = W(s1) W(s2). Generators
/// against generators always; every pair when |Sp| |V#| <= exhaustive_limit,
/// else `samples` seeded random pairs.
ActionCheck semidirect_action_check(const std::function<CycMatrix(const Code&)>& w, const FiniteRep& rho,
                                    const GroupPtr& sp, const HeisPtr& heis, std::uint64_t samples,
                                    std::uint64_t seed, std::uint64_t exhaustive_limit = 10'000'000);

}  // namespace weilheis
