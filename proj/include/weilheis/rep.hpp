#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "weilheis/cyclotomic.hpp"
#include "weilheis/group.hpp"
#include "weilheis/matrix.hpp"

namespace weilheis {

using CycMatrix = Matrix<CycScalar>;
using CycVector = std::vector<CycScalar>;

/// Monomial matrix: basis vector j is sent to coeff[j] times basis vector perm[j].
struct Monomial {
  std::vector<std::size_t> perm;
  std::vector<CycScalar> coeff;

  CycMatrix dense(int p) const;
  CycScalar trace(int p) const;
  Monomial operator*(const Monomial& o) const;
};

/// Representation of a finite group on Q(zeta_p)^dim.
///
/// Either a dense matrix function or a monomial function is supplied; the
/// character defaults to the trace and can be replaced by a closed formula.
class FiniteRep {
 public:
  using MatrixFn = std::function<CycMatrix(const Code&)>;
  using MonomialFn = std::function<Monomial(const Code&)>;
  using CharacterFn = std::function<CycScalar(const Code&)>;

  FiniteRep(GroupPtr group, std::size_t dim, int p, MatrixFn matrix, std::string name = "");
  static FiniteRep from_monomial(GroupPtr group, std::size_t dim, int p, MonomialFn mono,
                                 std::string name = "");

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  int p() const { return p_; }
  const std::string& name() const { return name_; }

  CycMatrix matrix(const Code& g) const;
  bool is_monomial() const { return static_cast<bool>(mono_); }
  Monomial monomial(const Code& g) const;
  CycScalar character(const Code& g) const;

  FiniteRep& with_character(CharacterFn chi) {
    chi_ = std::move(chi);
    return *this;
  }
  FiniteRep& renamed(std::string name) {
    name_ = std::move(name);
    return *this;
  }

  CycScalar zero() const { return CycScalar(p_); }

 private:
  GroupPtr group_;
  std::size_t dim_;
  int p_;
  MatrixFn matrix_;
  MonomialFn mono_;
  CharacterFn chi_;
  std::string name_;
};

}  // namespace weilheis
