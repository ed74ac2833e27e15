#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "weilheis/group.hpp"
#include "weilheis/rep.hpp"

namespace weilheis {

FiniteRep trivial_rep(GroupPtr g, int p);
/// One-dimensional representation given by a homomorphism to Q(zeta_p)^*.
FiniteRep linear_character(GroupPtr g, int p, std::function<CycScalar(const Code&)> value,
                           std::string name = "");
/// Right regular representation: g sends delta_x to delta_{x g^-1}.
FiniteRep regular_rep(GroupPtr g, int p);

/// Restriction to a subgroup whose codes are elements of rep.group().
FiniteRep restrict(const FiniteRep& rep, GroupPtr sub);
/// Pull back along a homomorphism big -> rep.group().
FiniteRep inflate(const FiniteRep& rep, GroupPtr big, std::function<Code(const Code&)> hom);
/// Precompose with an automorphism (or any homomorphism) of the same group.
FiniteRep precompose(const FiniteRep& rep, std::function<Code(const Code&)> hom);
FiniteRep tensor(const FiniteRep& a, const FiniteRep& b);

/// Right coset data for H in G: representatives t_i and a factorization
/// g = h t_i with h in H.
struct CosetSpace {
  std::vector<Code> transversal;
  std::function<std::pair<std::size_t, Code>(const Code&)> factor;
};

/// First-seen transversal of H\G in the canonical order of G, with a
/// factorization backed by a coset label per element of G.
CosetSpace right_cosets(const GroupPtr& g, const GroupPtr& h);

/// Induced representation on functions f(hx) = sigma(h) f(x), with
/// (g.f)(x) = f(xg). Coordinates are f(t_0), f(t_1), ...
FiniteRep induce(const FiniteRep& sigma, GroupPtr g);
FiniteRep induce(const FiniteRep& sigma, GroupPtr g, CosetSpace cosets);

/// (1/|G|) sum conj(chi_a) chi_b over the group of a, as an exact integer.
std::int64_t dim_hom(const FiniteRep& a, const FiniteRep& b);
/// Same quantity from the kernel of X a(s) = b(s) X over generators s.
std::size_t dim_hom_solver(const FiniteRep& a, const FiniteRep& b);
/// Hom over the listed generators only (the caller vouches that they generate).
std::size_t dim_hom_solver(const FiniteRep& a, const FiniteRep& b, const std::vector<Code>& gens);

/// Image of the averaging projector over `sub`, as echelon row vectors.
std::vector<CycVector> invariants(const FiniteRep& rep, const FiniteGroup& sub);
std::vector<CycVector> invariants(const FiniteRep& rep, const std::vector<Code>& sub);

/// Exact sum over the group of fn(g), split across workers.
CycScalar group_sum(const FiniteGroup& g, int p, const std::function<CycScalar(const Code&)>& fn);

/// Character value at every element, in the group's canonical order.
std::vector<CycScalar> character_values(const FiniteRep& rep);
/// (1/n) sum conj(a_i) b_i for two character tables of one group of order n,
/// as an exact natural number (std::logic_error otherwise).
std::int64_t character_inner(const std::vector<CycScalar>& a, const std::vector<CycScalar>& b);

/// First element where the characters differ, if any.
std::optional<Code> character_mismatch(const FiniteRep& a, const FiniteRep& b);

}  // namespace weilheis
