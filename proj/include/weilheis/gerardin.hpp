#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>

#include "weilheis/finrep.hpp"
#include "weilheis/report.hpp"
#include "weilheis/symplectic.hpp"
#include "weilheis/weil.hpp"

namespace weilheis {

/// dim V = 2n, dim V+ = dim V- = k, dim V0 = 2(n - k).
struct GerardinConfig {
  int p = 3;
  std::size_t n = 1;
  std::size_t k = 1;
  /// Central character a -> zeta^(unit a).
  int unit = 1;
  std::uint64_t max_group_order = kDefaultGroupCap;
};

Json config_json(const GerardinConfig& cfg);
/// Rows of entries in 0..p-1.
Json matrix_json(const FpMatrix& m);

/// Both sides of the restriction formula for the parabolic P = Stab(V+):
///   left   the Weil-Heisenberg representation restricted to P x| V#,
///   right  Ind from P x| (V+ x V0#) of (chi^{V+} x| 1) (x) V0-Weil-Heisenberg,
///   bare   the same induction without the chi^{V+} factor.
/// P acts on the V0 factor through its action on V+perp / V+.
struct GerardinModel {
  GerardinConfig cfg;
  Decomposition decomp;
  std::shared_ptr<const ParabolicData> parabolic;
  GroupPtr p_group;
  std::shared_ptr<const SemidirectGroup> group;     // P x| V#
  std::shared_ptr<const SemidirectGroup> inducing;  // P x| (V+ x V0#)
  std::shared_ptr<const WeilLift> lift;
  /// Weil lift on V0 in its own basis; empty when V0 = 0.
  std::shared_ptr<const WeilLift> lift_zero;
  /// The representation of P x| (V+ x V0#) induced to give `right`.
  FiniteRep sigma;
  FiniteRep left, right, bare;
  /// chi^{V+}(s) and the V0-part of s, by index in p_group.
  std::vector<int> chi;
  std::vector<Code> pr_zero;
};

/// Throws CapExceeded when Sp(V) or P x| V# is above cfg.max_group_order.
GerardinModel build_gerardin_model(const GerardinConfig& cfg);

/// chi^{V+}(s) Tr W0(pr_0 s): the character the P-action on the
/// (1 x| V+)-fixed vectors should have.
CycScalar expected_fixed_character(const GerardinModel& m, std::size_t p_index);

/// A nonzero v in V- pairing trivially with all of V+, if one exists.
std::optional<FpVec> unpaired_minus_vector(const Decomposition& d);

VerdictReport check_gerardin_corrected(const GerardinConfig& cfg);
VerdictReport falsify_misprint(const GerardinConfig& cfg);
VerdictReport check_fixed_point_iso(const GerardinConfig& cfg);

}  // namespace weilheis
