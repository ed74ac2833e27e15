#pragma once

#include <cstdint>
#include <memory>

#include "weilheis/finrep.hpp"
#include "weilheis/report.hpp"
#include "weilheis/symplectic.hpp"
#include "weilheis/weil.hpp"

namespace weilheis {

struct CounterexampleConfig {
  int p = 11;
  /// Central character a -> zeta^(unit a).
  int unit = 1;
  /// Eigenvalue of the sign-argument Levi element on the second basis vector
  /// of V-; 0 picks the least non-square.
  int a = 0;
  std::uint64_t max_group_order = kDefaultGroupCap;
};

Json config_json(const CounterexampleConfig& cfg);

/// Sp10 for the form [[0, J5], [-J5, 0]] with J5 = antidiag(1, -1, 1, -1, 1),
/// i.e. <e_i, e_{11-i}> = (-1)^(i+1) for i <= 5, and the two GL2 blocks
/// sitting in rows/columns {2,3 | 8,9} and {4,5 | 6,7}.
namespace sp10 {
SympSpace space(int p);
/// span(e2, e3, e8, e9) with the restricted form.
SympSpace v_space(int p);
/// A on span(e2, e3), the matching contragredient block on span(e8, e9).
FpMatrix h23(const FpMatrix& a);
/// A on span(e4, e5), the matching contragredient block on span(e6, e7).
FpMatrix h45(const FpMatrix& a);
/// The Weyl element diag(1, J4, -J4, 1) exchanging the two blocks.
FpMatrix swap_element(int p);
/// Action on V = span(e2, e3, e8, e9) (the images of the root spaces
/// t1^-1 t2, t1^-1 t3, t1^-1 t3^-1, t1^-1 t2^-1), in that basis. Throws if h
/// does not preserve V.
FpMatrix action_on_v(const FpMatrix& h);
}  // namespace sp10

/// The four-dimensional V = sp10::v_space with V+ = span(e2, e3) and
/// V- = span(e8, e9), coordinates as in sp10::action_on_v.
struct CounterexampleModel {
  CounterexampleConfig cfg;
  SympSpace space;
  Decomposition decomp;
  /// Image of H23 in Sp(V): the Levi M of the stabilizer of V+.
  GroupPtr levi;
  std::shared_ptr<const WeilLift> lift;
  /// M x| V#, its subgroup M x| (V+ x F_p), and
  /// pi = Ind (chi^{V+} x| psi) built on the transversal (1, (v-, 0)).
  std::shared_ptr<const SemidirectGroup> group;
  std::shared_ptr<const SemidirectGroup> inducing;
  CosetSpace cosets;
  FiniteRep sigma, pi;
  /// Codes (m, 0) of M inside M x| V#.
  std::vector<Code> levi_in_group;
};

CounterexampleModel build_counterexample_model(const CounterexampleConfig& cfg);

/// Index in model.cosets.transversal of (1, (v, 0)) for v in V-.
std::size_t transversal_index(const CounterexampleModel& m, const FpVec& v);

VerdictReport run_counterexample(const CounterexampleConfig& cfg);
VerdictReport sign_argument_witness(const CounterexampleConfig& cfg);

}  // namespace weilheis
