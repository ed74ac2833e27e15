#pragma once

#include <cstdint>

#include "weilheis/report.hpp"
#include "weilheis/symplectic.hpp"

namespace weilheis {

/// Heisenberg and Weil representations on the standard 2n-dimensional space.
struct ModelConfig {
  int p = 3;
  std::size_t n = 1;
  int unit = 1;
  std::uint64_t seed = 0;
  /// Random pairs per identity when exhaustive enumeration is too large.
  std::uint64_t samples = 10'000;
  std::uint64_t max_group_order = kDefaultGroupCap;
  /// Sp(V)-conjugated models compared against the Schroedinger model, on top
  /// of one per generator of Sp(V).
  std::size_t random_conjugates = 5;
};

Json config_json(const ModelConfig& cfg);

/// The Schroedinger model has dimension p^n, is irreducible, and is
/// isomorphic (with one-dimensional intertwiner space) to each of its
/// Sp(V)-conjugates. Hom dimensions come from the character sum and from the
/// equivariance solver, which must agree.
VerdictReport check_stone_von_neumann(const ModelConfig& cfg);

/// W(s) rho(h) W(s)^-1 = rho(s.h) and W(s1 s2) = W(s1) W(s2): on every pair
/// when Sp(V) x V# is small, else on generators plus cfg.samples seeded pairs.
VerdictReport check_weil_lift(const ModelConfig& cfg);

}  // namespace weilheis
