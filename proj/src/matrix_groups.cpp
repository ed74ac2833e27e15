#include "weilheis/matrix_groups.hpp"

#include <stdexcept>

namespace weilheis {

Code code_mul(int p, std::size_t n, const Code& a, const Code& b) {
  Code c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += static_cast<std::int64_t>(a[i * n + k]) * b[k * n + j];
      c[i * n + j] = mod(acc, p);
    }
  return c;
}

Code code_inv(int p, std::size_t n, const Code& a) {
  return encode(inverse(decode_matrix(p, n, a.data())));
}

Code code_apply(int p, std::size_t n, const Code& m, const int* v) {
  Code r(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += static_cast<std::int64_t>(m[i * n + k]) * v[k];
    r[i] = mod(acc, p);
  }
  return r;
}

GroupPtr matrix_group(int p, std::size_t n, const std::vector<FpMatrix>& elements, std::string name,
                      const std::vector<FpMatrix>& gens) {
  std::vector<Code> codes;
  codes.reserve(elements.size());
  for (const auto& m : elements) codes.push_back(encode(m));
  std::vector<Code> gcodes;
  for (const auto& g : gens) gcodes.push_back(encode(g));
  return std::make_shared<ListGroup>(
      std::move(name), std::move(codes), [p, n](const Code& a, const Code& b) { return code_mul(p, n, a, b); },
      [p, n](const Code& a) { return code_inv(p, n, a); }, std::move(gcodes));
}

GroupPtr sp_group(const SympSpace& space, std::uint64_t cap) {
  const std::string name = "Sp(" + std::to_string(space.dim()) + ", F_" + std::to_string(space.p()) + ")";
  return matrix_group(space.p(), space.dim(), enumerate_sp(space, cap), name, sp_generators(space));
}

GroupPtr gl_group(int p, std::size_t n, std::uint64_t cap) {
  const std::string name = "GL(" + std::to_string(n) + ", F_" + std::to_string(p) + ")";
  return matrix_group(p, n, enumerate_gl(p, n, cap), name);
}

ActionFn symplectic_action(int p, std::size_t dim) {
  return [p, dim](const Code& s, const Code& h) {
    Code r = code_apply(p, dim, s, h.data());
    r.push_back(h[dim]);
    return r;
  };
}

}  // namespace weilheis
