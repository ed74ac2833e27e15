#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "weilheis/group.hpp"
#include "weilheis/symplectic.hpp"

namespace weilheis {

/// Product and inverse of n x n matrices over F_p in flattened code form.
Code code_mul(int p, std::size_t n, const Code& a, const Code& b);
Code code_inv(int p, std::size_t n, const Code& a);
Code code_apply(int p, std::size_t n, const Code& m, const int* v);

/// A group of n x n matrices listed explicitly.
GroupPtr matrix_group(int p, std::size_t n, const std::vector<FpMatrix>& elements, std::string name,
                      const std::vector<FpMatrix>& gens = {});

/// Sp(V) as a FiniteGroup, with its Levi/radical/Weyl generators.
GroupPtr sp_group(const SympSpace& space, std::uint64_t cap = kDefaultGroupCap);

/// GL_n(F_p) as a FiniteGroup.
GroupPtr gl_group(int p, std::size_t n, std::uint64_t cap = kDefaultGroupCap);

/// s.(v, a) = (s v, a) for matrix codes s acting on Heisenberg codes.
ActionFn symplectic_action(int p, std::size_t dim);

}  // namespace weilheis
