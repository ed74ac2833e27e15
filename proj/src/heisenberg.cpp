#include "weilheis/heisenberg.hpp"

#include <stdexcept>

namespace weilheis {

HeisGroup::HeisGroup(SympSpace space)
    : FiniteGroup("V#"), space_(std::move(space)), half_(inv_mod(2, space_.p())) {
  const std::size_t d = space_.dim();
  order_ = 1;
  for (std::size_t i = 0; i <= d; ++i) order_ *= static_cast<std::size_t>(space_.p());
  gram_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram_[i * d + j] = space_.gram()(i, j).value();
}

int HeisGroup::pair(const int* u, const int* v) const {
  const std::size_t d = space_.dim();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (u[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < d; ++j) row += static_cast<std::int64_t>(gram_[i * d + j]) * v[j];
    acc += u[i] * (row % p());
  }
  return mod(acc, p());
}

void HeisGroup::check(const HeisElem& g) const {
  if (g.v.size() != space_.dim()) throw std::invalid_argument("Heisenberg element of another group");
}

HeisElem HeisGroup::mul(const HeisElem& g, const HeisElem& h) const {
  check(g);
  check(h);
  HeisElem r;
  r.v.resize(g.v.size());
  for (std::size_t i = 0; i < g.v.size(); ++i) r.v[i] = mod(g.v[i] + h.v[i], p());
  r.a = mod(g.a + h.a + static_cast<std::int64_t>(half_) * pair(g.v.data(), h.v.data()), p());
  return r;
}

HeisElem HeisGroup::inv(const HeisElem& g) const {
  check(g);
  HeisElem r{g.v, mod(-g.a, p())};
  for (auto& x : r.v) x = mod(-x, p());
  return r;
}

HeisElem HeisGroup::commutator(const HeisElem& g, const HeisElem& h) const {
  return mul(mul(g, h), mul(inv(g), inv(h)));
}

HeisElem HeisGroup::decode(const Code& c) const {
  if (c.size() != space_.dim() + 1) throw std::invalid_argument("Heisenberg code of wrong length");
  return {FpVec(c.begin(), c.end() - 1), c.back()};
}

Code HeisGroup::encode(const HeisElem& g) const {
  check(g);
  Code c = g.v;
  c.push_back(g.a);
  return c;
}

Code HeisGroup::element(std::size_t i) const {
  Code c(space_.dim() + 1);
  for (std::size_t k = c.size(); k-- > 0;) {
    c[k] = static_cast<int>(i % static_cast<std::size_t>(p()));
    i /= static_cast<std::size_t>(p());
  }
  return c;
}

std::optional<std::size_t> HeisGroup::index_of(const Code& c) const {
  if (c.size() != space_.dim() + 1) return std::nullopt;
  std::size_t i = 0;
  for (int x : c) {
    if (x < 0 || x >= p()) return std::nullopt;
    i = i * static_cast<std::size_t>(p()) + static_cast<std::size_t>(x);
  }
  return i;
}

Code HeisGroup::mul(const Code& a, const Code& b) const {
  const std::size_t d = space_.dim();
  Code r(d + 1);
  for (std::size_t i = 0; i < d; ++i) r[i] = mod(a[i] + b[i], p());
  r[d] = mod(a[d] + b[d] + static_cast<std::int64_t>(half_) * pair(a.data(), b.data()), p());
  return r;
}

Code HeisGroup::inv(const Code& a) const {
  Code r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod(-a[i], p());
  return r;
}

std::vector<Code> HeisGroup::generators() const {
  std::vector<Code> gens;
  const std::size_t d = space_.dim();
  for (std::size_t i = 0; i < d; ++i) {
    Code c(d + 1, 0);
    c[i] = 1;
    gens.push_back(c);
  }
  Code z(d + 1, 0);
  z[d] = 1;
  gens.push_back(z);
  return gens;
}

HeisPtr make_heisenberg(const SympSpace& space) { return std::make_shared<const HeisGroup>(space); }

FiniteRep schrodinger_rep(const HeisPtr& group, const Decomposition& decomp, const CentralCharacter& psi) {
  if (decomp.zero_dim() != 0)
    throw std::invalid_argument("Schroedinger model needs a Lagrangian pair (V0 must be zero)");
  if (!psi.nontrivial()) throw std::invalid_argument("central character must be nontrivial");
  const int p = group->p();
  if (psi.p != p) throw std::invalid_argument("central character over the wrong prime");
  const std::size_t k = decomp.k();
  std::size_t dim = 1;
  for (std::size_t i = 0; i < k; ++i) dim *= static_cast<std::size_t>(p);
  const int half = inv_mod(2, p);
  // Coordinates in the adapted basis (e_1..e_k, f_1..f_k).
  const FpMatrix to_adapted = inverse(decomp.adapted_basis());
  auto mono = [=](const Code& c) {
    const std::size_t d = 2 * k;
    const FpVec x = weilheis::apply(to_adapted, FpVec(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d)));
    std::int64_t base = c[d];
    for (std::size_t i = 0; i < k; ++i) base += static_cast<std::int64_t>(half) * x[i] * x[k + i];
    Monomial m;
    m.perm.resize(dim);
    m.coeff.reserve(dim);
    std::vector<int> z(k, 0);
    for (std::size_t idx = 0; idx < dim; ++idx) {
      // z is the base-p expansion of idx, most significant first.
      std::size_t rest = idx;
      for (std::size_t i = k; i-- > 0;) {
        z[i] = static_cast<int>(rest % static_cast<std::size_t>(p));
        rest /= static_cast<std::size_t>(p);
      }
      std::int64_t e = base;
      std::size_t target = 0;
      for (std::size_t i = 0; i < k; ++i) {
        e += static_cast<std::int64_t>(x[i]) * z[i];
        target = target * static_cast<std::size_t>(p) + static_cast<std::size_t>(mod(z[i] + x[k + i], p));
      }
      m.perm[idx] = target;
      m.coeff.push_back(psi(mod(e, p)));
    }
    return m;
  };
  FiniteRep r = FiniteRep::from_monomial(group, dim, p, mono, "Heisenberg");
  r.with_character([=](const Code& c) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      if (c[i] != 0) return CycScalar(p);
    return CycScalar(p, Rational(static_cast<std::int64_t>(dim))) * psi(c.back());
  });
  return r;
}

FiniteRep conjugate_by(const FiniteRep& rep, const HeisPtr& group, const FpMatrix& s) {
  if (!group->space().is_symplectic(s)) throw std::invalid_argument("conjugating element is not symplectic");
  const std::size_t d = group->space().dim();
  return precompose(rep, [s, d](const Code& c) {
    Code r = weilheis::apply(s, FpVec(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d)));
    r.push_back(c[d]);
    return r;
  });
}

std::size_t intertwining_dim(const FiniteRep& a, const FiniteRep& b) { return dim_hom_solver(a, b); }

}  // namespace weilheis
