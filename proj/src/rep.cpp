#include "weilheis/rep.hpp"

#include <stdexcept>

#include "weilheis/fp.hpp"

namespace weilheis {

CycMatrix Monomial::dense(int p) const {
  CycMatrix m(perm.size(), perm.size(), CycScalar(p));
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = coeff[j];
  return m;
}

CycScalar Monomial::trace(int p) const {
  CycScalar t(p);
  for (std::size_t j = 0; j < perm.size(); ++j)
    if (perm[j] == j) t += coeff[j];
  return t;
}

Monomial Monomial::operator*(const Monomial& o) const {
  // (this * o) e_j = this(o_coeff[j] e_{o.perm[j]})
  Monomial r;
  r.perm.resize(o.perm.size());
  r.coeff.reserve(o.perm.size());
  for (std::size_t j = 0; j < o.perm.size(); ++j) {
    r.perm[j] = perm[o.perm[j]];
    r.coeff.push_back(coeff[o.perm[j]] * o.coeff[j]);
  }
  return r;
}

FiniteRep::FiniteRep(GroupPtr group, std::size_t dim, int p, MatrixFn matrix, std::string name)
    : group_(std::move(group)), dim_(dim), p_(p), matrix_(std::move(matrix)), name_(std::move(name)) {
  require_odd_prime(p);
}

FiniteRep FiniteRep::from_monomial(GroupPtr group, std::size_t dim, int p, MonomialFn mono, std::string name) {
  FiniteRep r(std::move(group), dim, p, nullptr, std::move(name));
  r.mono_ = std::move(mono);
  return r;
}

CycMatrix FiniteRep::matrix(const Code& g) const {
  if (matrix_) return matrix_(g);
  return mono_(g).dense(p_);
}

Monomial FiniteRep::monomial(const Code& g) const {
  if (!mono_) throw std::logic_error("representation " + name_ + " is not monomial");
  return mono_(g);
}

CycScalar FiniteRep::character(const Code& g) const {
  if (chi_) return chi_(g);
  if (mono_) return mono_(g).trace(p_);
  return trace(matrix_(g));
}

}  // namespace weilheis
