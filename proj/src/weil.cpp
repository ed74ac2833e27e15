#include "weilheis/weil.hpp"

#include <random>
#include <stdexcept>

#include "weilheis/matrix_groups.hpp"
#include "weilheis/parallel.hpp"

namespace weilheis {

namespace {

constexpr std::size_t kCacheLimit = 8192;
constexpr std::size_t kTableLimit = 20000;

FpMatrix block(const FpMatrix& m, std::size_t r0, std::size_t c0, std::size_t n) {
  FpMatrix b(n, n, m.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = m(r0 + i, c0 + j);
  return b;
}

bool is_zero_block(const FpMatrix& m) { return m.is_zero(); }

void normalize_first_entry(CycMatrix& m) {
  for (const auto& x : m.data())
    if (!x.is_zero()) {
      m = x.inverse() * m;
      return;
    }
  throw std::logic_error("intertwiner vanished");
}

// rows scaled: diag(d) * m
CycMatrix scale_rows(const std::vector<CycScalar>& d, CycMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) m(i, j) = d[i] * m(i, j);
  return m;
}

// m * mono
CycMatrix times_monomial(const CycMatrix& m, const Monomial& mono) {
  CycMatrix r(m.rows(), m.cols(), m.zero());
  for (std::size_t j = 0; j < mono.perm.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, mono.perm[j]).is_zero()) r(i, j) = m(i, mono.perm[j]) * mono.coeff[j];
  return r;
}

}  // namespace

CycMatrix intertwiner_for(const FpMatrix& s, const FiniteRep& rho, const HeisPtr& heis, std::size_t solver_limit) {
  const SympSpace& space = heis->space();
  if (!space.is_symplectic(s)) throw std::invalid_argument("intertwiner_for: element is not symplectic");
  const std::size_t d = rho.dim(), vd = space.dim();
  const int p = rho.p();
  std::size_t nv = 1;
  for (std::size_t i = 0; i < vd; ++i) nv *= static_cast<std::size_t>(p);
  const Code sc = encode(s);
  CycMatrix t(d, d, CycScalar(p));
  for (std::size_t i = 0; i < d && t.is_zero(); ++i)
    for (std::size_t j = 0; j < d && t.is_zero(); ++j) {
      // sum_v rho(s v) E_ij rho(v)^-1; each term has a single nonzero entry.
      for (std::size_t idx = 0; idx < nv; ++idx) {
        Code h = heis->element(idx * static_cast<std::size_t>(p));
        Code sh = code_apply(p, vd, sc, h.data());
        sh.push_back(0);
        const Monomial a = rho.monomial(sh), b = rho.monomial(heis->inv(h));
        for (std::size_t k = 0; k < d; ++k)
          if (b.perm[k] == j) t(a.perm[i], k) += a.coeff[i] * b.coeff[k];
      }
    }
  normalize_first_entry(t);
  for (const auto& g : heis->generators()) {
    Code sg = code_apply(p, vd, sc, g.data());
    sg.push_back(g[vd]);
    if (!(t * rho.matrix(g) == rho.matrix(sg) * t)) throw std::logic_error("averaged operator does not intertwine");
  }
  if (d <= solver_limit) {
    const FiniteRep moved = precompose(rho, [sc, p, vd](const Code& g) {
      Code r = code_apply(p, vd, sc, g.data());
      r.push_back(g[vd]);
      return r;
    });
    if (dim_hom_solver(rho, moved, heis->generators()) != 1)
      throw std::logic_error("intertwiner space is not one-dimensional");
  }
  return t;
}

WeilLift::WeilLift(HeisPtr heis, Decomposition decomp, CentralCharacter psi)
    : heis_(std::move(heis)),
      decomp_(std::move(decomp)),
      psi_(psi),
      rho_(schrodinger_rep(heis_, decomp_, psi_)),
      n_(decomp_.k()),
      dim_(rho_.dim()) {
  from_adapted_ = decomp_.adapted_basis();
  to_adapted_ = inverse(from_adapted_);
}

FpMatrix WeilLift::adapted(const FpMatrix& s) const { return to_adapted_ * s * from_adapted_; }

std::size_t WeilLift::index(const std::vector<int>& z) const {
  std::size_t i = 0;
  for (int x : z) i = i * static_cast<std::size_t>(p()) + static_cast<std::size_t>(x);
  return i;
}

std::vector<int> WeilLift::digits(std::size_t idx) const {
  std::vector<int> z(n_);
  for (std::size_t i = n_; i-- > 0;) {
    z[i] = static_cast<int>(idx % static_cast<std::size_t>(p()));
    idx /= static_cast<std::size_t>(p());
  }
  return z;
}

Monomial WeilLift::levi_block(const FpMatrix& a) const {
  // W f(y) = chi(det a) f(a^T y), i.e. delta_z -> chi(det a) delta_{a^-T z}.
  const int chi = legendre(determinant(a).value(), p());
  const FpMatrix a_inv_t = inverse(a).transpose();
  Monomial m;
  m.perm.resize(dim_);
  m.coeff.assign(dim_, CycScalar(p(), Rational(chi)));
  for (std::size_t idx = 0; idx < dim_; ++idx) m.perm[idx] = index(weilheis::apply(a_inv_t, digits(idx)));
  return m;
}

std::vector<CycScalar> WeilLift::quadratic_phase(const FpMatrix& b) const {
  // psi(y^T b y / 2)
  const int half = inv_mod(2, p());
  std::vector<CycScalar> d;
  d.reserve(dim_);
  for (std::size_t idx = 0; idx < dim_; ++idx) {
    const auto y = digits(idx);
    const auto by = apply(b, y);
    std::int64_t q = 0;
    for (std::size_t i = 0; i < n_; ++i) q += static_cast<std::int64_t>(y[i]) * by[i];
    d.push_back(psi_(mod(q % p() * half, p())));
  }
  return d;
}

const WeilLift::Weyl& WeilLift::weyl() const {
  std::call_once(weyl_once_, [&] {
    const int p = this->p();
    const std::size_t vd = 2 * n_;
    // w = [[0, I], [-I, 0]] in adapted coordinates.
    FpMatrix wa(vd, vd, FpScalar(p, 0));
    for (std::size_t i = 0; i < n_; ++i) {
      wa(i, n_ + i) = FpScalar(p, 1);
      wa(n_ + i, i) = FpScalar(p, -1);
    }
    const FpMatrix w = from_adapted_ * wa * to_adapted_;
    const CycMatrix t = intertwiner_for(w, rho_, heis_);
    // Fix the scalar from w^2 = -1 and (w n(I))^3 = 1.
    const FpMatrix minus_one = FpScalar(p, -1) * fp_identity(p, n_);
    const CycMatrix w_minus = levi_block(minus_one).dense(p);
    const CycMatrix t2 = t * t;
    CycScalar kappa(p);
    for (std::size_t i = 0; i < dim_ && kappa.is_zero(); ++i)
      for (std::size_t j = 0; j < dim_ && kappa.is_zero(); ++j)
        if (!w_minus(i, j).is_zero()) kappa = t2(i, j) / w_minus(i, j);
    if (!(t2 == kappa * w_minus)) throw std::logic_error("Weyl intertwiner squared is not a multiple of W(-1)");
    const CycMatrix tn = scale_rows(quadratic_phase(fp_identity(p, n_)), CycMatrix::identity(dim_, CycScalar(p)));
    const CycMatrix u = t * tn;
    const CycMatrix u3 = u * u * u;
    const CycScalar mu = u3(0, 0);
    if (!(u3 == mu * CycMatrix::identity(dim_, CycScalar(p))))
      throw std::logic_error("(w n)^3 intertwiner is not scalar");
    const CycScalar lambda = kappa / mu;
    const CycScalar one(p, Rational(1));
    if (!(lambda * lambda * kappa == one) || !(lambda * lambda * lambda * mu == one))
      throw std::logic_error("Weil normalization not satisfiable for the Weyl element");
    auto wl = std::make_unique<Weyl>();
    wl->w = lambda * t;
    // w^-1 = w . (-1)
    wl->w_inv = times_monomial(wl->w, levi_block(minus_one));
    wl->scalar = lambda;
    weyl_ = std::move(wl);
  });
  return *weyl_;
}

CycScalar WeilLift::weyl_scalar() const { return weyl().scalar; }

std::optional<Monomial> WeilLift::levi_monomial(const FpMatrix& s) const {
  const FpMatrix sa = adapted(s);
  if (!is_zero_block(block(sa, 0, n_, n_)) || !is_zero_block(block(sa, n_, 0, n_))) return std::nullopt;
  return levi_block(block(sa, 0, 0, n_));
}

std::optional<Monomial> WeilLift::levi_monomial(const Code& s) const {
  return levi_monomial(decode_matrix(p(), 2 * n_, s.data()));
}

CycMatrix WeilLift::compute(const FpMatrix& s) const {
  const int p = this->p();
  const FpMatrix sa = adapted(s);
  const FpMatrix a = block(sa, 0, 0, n_), b = block(sa, 0, n_, n_), c = block(sa, n_, 0, n_);
  if (c.is_zero()) {
    // Siegel parabolic: s = m(a) n(a^-1 b).
    const Monomial m = levi_block(a);
    const auto phase = quadratic_phase(inverse(a) * b);
    CycMatrix r(dim_, dim_, CycScalar(p));
    for (std::size_t j = 0; j < dim_; ++j) r(m.perm[j], j) = m.coeff[j] * phase[j];
    return r;
  }
  // Find symmetric b0 with a + b0 c invertible, so that n(b0) s has an
  // invertible corner; diagonal 0/1 choices first, then all symmetric ones.
  std::optional<FpMatrix> b0;
  auto try_b0 = [&](const FpMatrix& cand) {
    if (!b0 && !determinant(a + cand * c).is_zero()) b0 = cand;
  };
  for (std::size_t mask = 0; mask < (std::size_t{1} << n_) && !b0; ++mask) {
    FpMatrix cand(n_, n_, FpScalar(p, 0));
    for (std::size_t i = 0; i < n_; ++i)
      if (mask >> i & 1) cand(i, i) = FpScalar(p, 1);
    try_b0(cand);
  }
  if (!b0) {
    const std::size_t free = n_ * (n_ + 1) / 2;
    std::vector<int> e(free, 0);
    for (bool more = true; more && !b0;) {
      FpMatrix cand(n_, n_, FpScalar(p, 0));
      std::size_t k = 0;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j, ++k) cand(i, j) = cand(j, i) = FpScalar(p, e[k]);
      try_b0(cand);
      more = false;
      for (std::size_t q = 0; q < free && !more; ++q) {
        if (++e[q] < p) more = true;
        else e[q] = 0;
      }
    }
  }
  if (!b0) throw std::logic_error("no Bruhat shift found for a symplectic element");
  const FpMatrix a1 = a + *b0 * c, b1 = b + *b0 * block(sa, n_, n_, n_);
  // n(b0) s = n-(x) m(a1) n(y) with x = c a1^-1, y = a1^-1 b1, and n-(x) = w n(-x) w^-1.
  const FpMatrix a1_inv = inverse(a1);
  const FpMatrix x = c * a1_inv, y = a1_inv * b1;
  const Weyl& wl = weyl();
  const Monomial m = levi_block(a1);
  const auto phase_y = quadratic_phase(y);
  // right = w^-1 m(a1) n(y)
  Monomial mn = m;
  for (std::size_t j = 0; j < dim_; ++j) mn.coeff[j] = m.coeff[j] * phase_y[j];
  CycMatrix right = times_monomial(wl.w_inv, mn);
  right = scale_rows(quadratic_phase(FpScalar(p, -1) * x), std::move(right));
  CycMatrix r = wl.w * right;
  // Undo the shift: s = n(-b0) (n(b0) s).
  return scale_rows(quadratic_phase(FpScalar(p, -1) * *b0), std::move(r));
}

CycMatrix WeilLift::operator()(const FpMatrix& s) const {
  const Code key = encode(s);
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  if (!heis_->space().is_symplectic(s)) throw std::invalid_argument("W(s) requested for a non-symplectic s");
  CycMatrix w = compute(s);
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (cache_.size() < kCacheLimit) cache_.emplace(key, w);
  return w;
}

CycMatrix WeilLift::matrix(const Code& s) const { return (*this)(decode_matrix(p(), 2 * n_, s.data())); }

FiniteRep weil_rep(const std::shared_ptr<const WeilLift>& lift, GroupPtr sp) {
  bool levi = true;
  for (const auto& g : sp->generators())
    if (!lift->levi_monomial(g)) levi = false;
  if (levi) {
    return FiniteRep::from_monomial(
        std::move(sp), lift->dim(), lift->p(), [lift](const Code& s) { return *lift->levi_monomial(s); }, "Weil");
  }
  return FiniteRep(std::move(sp), lift->dim(), lift->p(), [lift](const Code& s) { return lift->matrix(s); }, "Weil");
}

FiniteRep weil_heisenberg_rep(const std::shared_ptr<const WeilLift>& lift, GroupPtr semidirect_group) {
  const std::size_t vd = lift->heisenberg_group()->space().dim();
  const std::size_t glen = vd * vd;
  // Small acting groups get every W(s) up front; the character loop then
  // never touches the lift's cache.
  std::shared_ptr<const std::vector<CycMatrix>> table;
  GroupPtr acting;
  if (auto sd = std::dynamic_pointer_cast<const SemidirectGroup>(semidirect_group);
      sd && sd->acting()->size() <= kTableLimit) {
    acting = sd->acting();
    auto parts = parallel_chunks<std::vector<CycMatrix>>(acting->size(), [&](std::size_t lo, std::size_t hi) {
      std::vector<CycMatrix> out;
      for (std::size_t i = lo; i < hi; ++i) out.push_back(lift->matrix(acting->element(i)));
      return out;
    });
    auto all = std::make_shared<std::vector<CycMatrix>>();
    for (auto& part : parts)
      for (auto& m : part) all->push_back(std::move(m));
    table = std::move(all);
  }
  auto weil_of = [lift, table, acting](const Code& s) -> CycMatrix {
    if (table) return (*table)[*acting->index_of(s)];
    return lift->matrix(s);
  };
  auto split = [glen](const Code& c) {
    return std::pair<Code, Code>{Code(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(glen)),
                                 Code(c.begin() + static_cast<std::ptrdiff_t>(glen), c.end())};
  };
  FiniteRep r(
      std::move(semidirect_group), lift->dim(), lift->p(),
      [lift, split, weil_of](const Code& c) {
        const auto [s, h] = split(c);
        return times_monomial(weil_of(s), lift->heisenberg().monomial(h));
      },
      "Weil-Heisenberg");
  r.with_character([lift, split, table, acting](const Code& c) {
    const auto [s, h] = split(c);
    const Monomial m = lift->heisenberg().monomial(h);
    CycScalar t(lift->p());
    // (W rho)_{jj} = W_{j, perm(j)} coeff(j)
    auto accumulate = [&](const CycMatrix& w) {
      for (std::size_t j = 0; j < m.perm.size(); ++j)
        if (!w(j, m.perm[j]).is_zero()) t += w(j, m.perm[j]) * m.coeff[j];
    };
    if (table) accumulate((*table)[*acting->index_of(s)]);
    else accumulate(lift->matrix(s));
    return t;
  });
  return r;
}

ActionCheck semidirect_action_check(const std::function<CycMatrix(const Code&)>& w, const FiniteRep& rho,
                                    const GroupPtr& sp, const HeisPtr& heis, std::uint64_t samples,
                                    std::uint64_t seed, std::uint64_t exhaustive_limit) {
  ActionCheck rep;
  const int p = heis->p();
  const std::size_t vd = heis->space().dim();
  auto act = [p, vd](const Code& s, const Code& h) {
    Code r = code_apply(p, vd, s, h.data());
    r.push_back(h[vd]);
    return r;
  };
  auto conj_ok = [&](const Code& s, const CycMatrix& ws, const Code& h) {
    ++rep.conjugation_pairs;
    if (times_monomial(ws, rho.monomial(h)) == rho.matrix(act(s, h)) * ws) return true;
    rep.pass = false;
    rep.witness = {s, h};
    rep.failure = "W(s) rho(h) != rho(s.h) W(s)";
    return false;
  };
  auto prod_ok = [&](const Code& a, const Code& b) {
    ++rep.product_pairs;
    if (w(sp->mul(a, b)) == w(a) * w(b)) return true;
    rep.pass = false;
    rep.witness = {a, b};
    rep.failure = "W(s1 s2) != W(s1) W(s2)";
    return false;
  };
  const auto sgens = sp->generators();
  const auto hgens = heis->generators();
  for (const auto& s : sgens) {
    const CycMatrix ws = w(s);
    for (const auto& h : hgens)
      if (!conj_ok(s, ws, h)) return rep;
  }
  for (const auto& a : sgens)
    for (const auto& b : sgens)
      if (!prod_ok(a, b)) return rep;
  const std::uint64_t ns = sp->size(), nh = heis->size();
  if (ns * nh <= exhaustive_limit) {
    rep.exhaustive = true;
    for (std::size_t i = 0; i < ns; ++i) {
      const Code s = sp->element(i);
      const CycMatrix ws = w(s);
      for (std::size_t j = 0; j < nh; ++j)
        if (!conj_ok(s, ws, heis->element(j))) return rep;
    }
    for (std::size_t i = 0; i < ns; ++i)
      for (std::size_t j = 0; j < ns; ++j)
        if (!prod_ok(sp->element(i), sp->element(j))) return rep;
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> ps(0, ns - 1), ph(0, nh - 1);
  for (std::uint64_t t = 0; t < samples; ++t) {
    const Code s = sp->element(ps(rng));
    if (!conj_ok(s, w(s), heis->element(ph(rng)))) return rep;
  }
  for (std::uint64_t t = 0; t < samples; ++t)
    if (!prod_ok(sp->element(ps(rng)), sp->element(ps(rng)))) return rep;
  return rep;
}

}  // namespace weilheis
