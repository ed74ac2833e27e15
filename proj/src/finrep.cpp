#include "weilheis/finrep.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "weilheis/parallel.hpp"

namespace weilheis {

namespace {

CycScalar one(int p) { return CycScalar(p, Rational(1)); }

void same_group(const FiniteRep& a, const FiniteRep& b) {
  if (a.group() != b.group()) throw std::invalid_argument("representations of different groups");
  if (a.p() != b.p()) throw std::invalid_argument("representations over different fields");
}

}  // namespace

FiniteRep trivial_rep(GroupPtr g, int p) {
  return linear_character(std::move(g), p, [p](const Code&) { return one(p); }, "trivial");
}

FiniteRep linear_character(GroupPtr g, int p, std::function<CycScalar(const Code&)> value, std::string name) {
  auto mono = [value](const Code& c) { return Monomial{{0}, {value(c)}}; };
  FiniteRep r = FiniteRep::from_monomial(std::move(g), 1, p, mono, std::move(name));
  r.with_character(std::move(value));
  return r;
}

FiniteRep regular_rep(GroupPtr g, int p) {
  const std::size_t n = g->size();
  auto mono = [g, p, n](const Code& s) {
    Monomial m;
    m.perm.resize(n);
    m.coeff.assign(n, one(p));
    const Code sinv = g->inv(s);
    for (std::size_t x = 0; x < n; ++x) m.perm[x] = g->index(g->mul(g->element(x), sinv));
    return m;
  };
  const Code e = g->identity();
  FiniteRep r = FiniteRep::from_monomial(g, n, p, mono, "regular");
  r.with_character([e, n, p](const Code& s) {
    return s == e ? CycScalar(p, Rational(static_cast<std::int64_t>(n))) : CycScalar(p);
  });
  return r;
}

namespace {

FiniteRep transport(const FiniteRep& rep, GroupPtr target, std::function<Code(const Code&)> hom,
                    std::string name) {
  if (rep.is_monomial()) {
    FiniteRep r = FiniteRep::from_monomial(std::move(target), rep.dim(), rep.p(),
                                           [rep, hom](const Code& g) { return rep.monomial(hom(g)); }, name);
    r.with_character([rep, hom](const Code& g) { return rep.character(hom(g)); });
    return r;
  }
  FiniteRep r(std::move(target), rep.dim(), rep.p(), [rep, hom](const Code& g) { return rep.matrix(hom(g)); },
              name);
  r.with_character([rep, hom](const Code& g) { return rep.character(hom(g)); });
  return r;
}

}  // namespace

FiniteRep restrict(const FiniteRep& rep, GroupPtr sub) {
  for (const auto& s : sub->generators())
    if (!rep.group()->contains(s)) throw std::invalid_argument("restriction to a non-subgroup");
  return transport(rep, std::move(sub), [](const Code& c) { return c; }, "Res " + rep.name());
}

FiniteRep inflate(const FiniteRep& rep, GroupPtr big, std::function<Code(const Code&)> hom) {
  return transport(rep, std::move(big), std::move(hom), "Inf " + rep.name());
}

FiniteRep precompose(const FiniteRep& rep, std::function<Code(const Code&)> hom) {
  return transport(rep, rep.group(), std::move(hom), rep.name() + " twisted");
}

FiniteRep tensor(const FiniteRep& a, const FiniteRep& b) {
  same_group(a, b);
  const std::size_t db = b.dim();
  const int p = a.p();
  if (a.is_monomial() && b.is_monomial()) {
    FiniteRep r = FiniteRep::from_monomial(
        a.group(), a.dim() * db, p,
        [a, b, db](const Code& g) {
          const Monomial ma = a.monomial(g), mb = b.monomial(g);
          Monomial m;
          for (std::size_t i = 0; i < ma.perm.size(); ++i)
            for (std::size_t j = 0; j < db; ++j) {
              m.perm.push_back(ma.perm[i] * db + mb.perm[j]);
              m.coeff.push_back(ma.coeff[i] * mb.coeff[j]);
            }
          return m;
        },
        a.name() + " (x) " + b.name());
    r.with_character([a, b](const Code& g) { return a.character(g) * b.character(g); });
    return r;
  }
  FiniteRep r(
      a.group(), a.dim() * db, p,
      [a, b, db, p](const Code& g) {
        const CycMatrix ma = a.matrix(g), mb = b.matrix(g);
        CycMatrix m(ma.rows() * db, ma.cols() * db, CycScalar(p));
        for (std::size_t i = 0; i < ma.rows(); ++i)
          for (std::size_t k = 0; k < ma.cols(); ++k) {
            if (ma(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < db; ++j)
              for (std::size_t l = 0; l < db; ++l) m(i * db + j, k * db + l) = ma(i, k) * mb(j, l);
          }
        return m;
      },
      a.name() + " (x) " + b.name());
  r.with_character([a, b](const Code& g) { return a.character(g) * b.character(g); });
  return r;
}

CosetSpace right_cosets(const GroupPtr& g, const GroupPtr& h) {
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  auto labels = std::make_shared<std::vector<std::uint32_t>>(g->size(), unset);
  CosetSpace cs;
  std::vector<Code> hs;
  hs.reserve(h->size());
  for (std::size_t i = 0; i < h->size(); ++i) hs.push_back(h->element(i));
  for (std::size_t x = 0; x < g->size(); ++x) {
    if ((*labels)[x] != unset) continue;
    const auto j = static_cast<std::uint32_t>(cs.transversal.size());
    const Code t = g->element(x);
    cs.transversal.push_back(t);
    for (const auto& hh : hs) {
      auto& slot = (*labels)[g->index(g->mul(hh, t))];
      if (slot != unset) throw std::invalid_argument("subgroup cosets overlap: not a subgroup");
      slot = j;
    }
  }
  auto reps = std::make_shared<std::vector<Code>>(cs.transversal);
  cs.factor = [g, labels, reps](const Code& x) {
    const std::size_t i = (*labels)[g->index(x)];
    return std::pair<std::size_t, Code>{i, g->mul(x, g->inv((*reps)[i]))};
  };
  return cs;
}

FiniteRep induce(const FiniteRep& sigma, GroupPtr g) {
  return induce(sigma, g, right_cosets(g, sigma.group()));
}

FiniteRep induce(const FiniteRep& sigma, GroupPtr g, CosetSpace cosets) {
  auto cs = std::make_shared<const CosetSpace>(std::move(cosets));
  const std::size_t n = cs->transversal.size();
  const std::size_t d = sigma.dim();
  const int p = sigma.p();
  // Where each t_j g lands: t_j g = h_j t_{i(j)}.
  auto moves = [g, cs](const Code& x) {
    std::vector<std::pair<std::size_t, Code>> out;
    out.reserve(cs->transversal.size());
    for (const auto& t : cs->transversal) out.push_back(cs->factor(g->mul(t, x)));
    return out;
  };
  auto chi = [sigma, moves, p](const Code& x) {
    CycScalar s(p);
    const auto mv = moves(x);
    for (std::size_t j = 0; j < mv.size(); ++j)
      if (mv[j].first == j) s += sigma.character(mv[j].second);
    return s;
  };
  const std::string name = "Ind " + sigma.name();
  if (sigma.is_monomial()) {
    FiniteRep r = FiniteRep::from_monomial(
        g, n * d, p,
        [sigma, moves, d](const Code& x) {
          const auto mv = moves(x);
          Monomial m;
          m.perm.resize(mv.size() * d);
          m.coeff.resize(mv.size() * d);
          // Row block j reads column block i(j) through sigma(h_j): e_{i(j),b} -> sum_a sigma(h_j)_{ab} e_{j,a}.
          for (std::size_t j = 0; j < mv.size(); ++j) {
            const Monomial s = sigma.monomial(mv[j].second);
            for (std::size_t b = 0; b < d; ++b) {
              m.perm[mv[j].first * d + b] = j * d + s.perm[b];
              m.coeff[mv[j].first * d + b] = s.coeff[b];
            }
          }
          return m;
        },
        name);
    r.with_character(chi);
    return r;
  }
  FiniteRep r(
      g, n * d, p,
      [sigma, moves, d, p](const Code& x) {
        const auto mv = moves(x);
        CycMatrix m(mv.size() * d, mv.size() * d, CycScalar(p));
        for (std::size_t j = 0; j < mv.size(); ++j) {
          const CycMatrix s = sigma.matrix(mv[j].second);
          for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) m(j * d + a, mv[j].first * d + b) = s(a, b);
        }
        return m;
      },
      name);
  r.with_character(chi);
  return r;
}

CycScalar group_sum(const FiniteGroup& g, int p, const std::function<CycScalar(const Code&)>& fn) {
  auto parts = parallel_chunks<CycScalar>(g.size(), [&](std::size_t lo, std::size_t hi) {
    CycScalar s(p);
    for (std::size_t i = lo; i < hi; ++i) s += fn(g.element(i));
    return s;
  });
  CycScalar total(p);
  for (const auto& s : parts) total += s;
  return total;
}

std::int64_t dim_hom(const FiniteRep& a, const FiniteRep& b) {
  same_group(a, b);
  const CycScalar s =
      group_sum(*a.group(), a.p(), [&](const Code& g) { return a.character(g).conj() * b.character(g); });
  if (!s.is_rational()) throw std::logic_error("character inner product is not rational: " + s.str());
  const Rational q = s.rational_value() / Rational(static_cast<std::int64_t>(a.group()->size()));
  if (q.den() != 1 || q.num() < 0) throw std::logic_error("character inner product is not a natural number");
  return q.num();
}

std::size_t dim_hom_solver(const FiniteRep& a, const FiniteRep& b) {
  same_group(a, b);
  return dim_hom_solver(a, b, a.group()->generators());
}

std::size_t dim_hom_solver(const FiniteRep& a, const FiniteRep& b, const std::vector<Code>& gens) {
  const std::size_t da = a.dim(), db = b.dim();
  const CycScalar zero(a.p());
  RowReducer<CycScalar> rr(da * db, zero);
  // Unknown X is db x da, flattened row-major; equations X a(s) - b(s) X = 0.
  for (const auto& s : gens) {
    const CycMatrix ma = a.matrix(s), mb = b.matrix(s);
    for (std::size_t r = 0; r < db && !rr.full(); ++r)
      for (std::size_t c = 0; c < da && !rr.full(); ++c) {
        CycVector row(da * db, zero);
        for (std::size_t k = 0; k < da; ++k)
          if (!ma(k, c).is_zero()) row[r * da + k] += ma(k, c);
        for (std::size_t k = 0; k < db; ++k)
          if (!mb(r, k).is_zero()) row[k * da + c] -= mb(r, k);
        rr.add_row(std::move(row));
      }
  }
  return da * db - rr.rank();
}

std::vector<CycVector> invariants(const FiniteRep& rep, const FiniteGroup& sub) {
  std::vector<Code> els;
  els.reserve(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) els.push_back(sub.element(i));
  return invariants(rep, els);
}

std::vector<CycVector> invariants(const FiniteRep& rep, const std::vector<Code>& sub) {
  const std::size_t d = rep.dim();
  const int p = rep.p();
  for (const auto& h : sub)
    if (!rep.group()->contains(h)) throw std::invalid_argument("invariants: element outside the group");
  auto parts = parallel_chunks<CycMatrix>(sub.size(), [&](std::size_t lo, std::size_t hi) {
    CycMatrix acc(d, d, CycScalar(p));
    for (std::size_t i = lo; i < hi; ++i) {
      if (rep.is_monomial()) {
        const Monomial m = rep.monomial(sub[i]);
        for (std::size_t j = 0; j < d; ++j) acc(m.perm[j], j) += m.coeff[j];
      } else {
        acc = acc + rep.matrix(sub[i]);
      }
    }
    return acc;
  });
  CycMatrix proj(d, d, CycScalar(p));
  for (const auto& m : parts) proj = proj + m;
  // Column space of the projector.
  RowReducer<CycScalar> rr(d, CycScalar(p));
  for (std::size_t j = 0; j < d; ++j) {
    CycVector col(d, CycScalar(p));
    bool nonzero = false;
    for (std::size_t i = 0; i < d; ++i) {
      col[i] = proj(i, j);
      nonzero = nonzero || !col[i].is_zero();
    }
    if (nonzero) rr.add_row(std::move(col));
  }
  return rr.rows();
}

std::optional<Code> character_mismatch(const FiniteRep& a, const FiniteRep& b) {
  same_group(a, b);
  const FiniteGroup& g = *a.group();
  constexpr auto none = std::numeric_limits<std::size_t>::max();
  auto parts = parallel_chunks<std::size_t>(g.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Code x = g.element(i);
      if (!(a.character(x) == b.character(x))) return i;
    }
    return none;
  });
  for (auto i : parts)
    if (i != none) return g.element(i);
  return std::nullopt;
}

std::vector<CycScalar> character_values(const FiniteRep& rep) {
  const FiniteGroup& g = *rep.group();
  auto parts = parallel_chunks<std::vector<CycScalar>>(g.size(), [&](std::size_t lo, std::size_t hi) {
    std::vector<CycScalar> out;
    out.reserve(hi - lo);
    for (std::size_t i = lo; i < hi; ++i) out.push_back(rep.character(g.element(i)));
    return out;
  });
  std::vector<CycScalar> all;
  all.reserve(g.size());
  for (auto& part : parts)
    for (auto& x : part) all.push_back(std::move(x));
  return all;
}

std::int64_t character_inner(const std::vector<CycScalar>& a, const std::vector<CycScalar>& b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("character tables of different groups");
  const int p = a.front().p();
  auto parts = parallel_chunks<CycScalar>(a.size(), [&](std::size_t lo, std::size_t hi) {
    CycScalar s(p);
    for (std::size_t i = lo; i < hi; ++i) s += a[i].conj() * b[i];
    return s;
  });
  CycScalar s(p);
  for (const auto& x : parts) s += x;
  if (!s.is_rational()) throw std::logic_error("character inner product is not rational: " + s.str());
  const Rational q = s.rational_value() / Rational(static_cast<std::int64_t>(a.size()));
  if (q.den() != 1 || q.num() < 0) throw std::logic_error("character inner product is not a natural number");
  return q.num();
}

}  // namespace weilheis
