#include "weilheis/symplectic.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "weilheis/code_hash.hpp"

namespace weilheis {

FpMatrix fp_matrix(int p, std::size_t rows, std::size_t cols, const std::vector<int>& entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("fp_matrix: wrong entry count");
  FpMatrix m(rows, cols, FpScalar(p, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = FpScalar(p, entries[i * cols + j]);
  return m;
}

FpMatrix fp_identity(int p, std::size_t n) { return FpMatrix::identity(n, FpScalar(p, 0)); }

FpVec apply(const FpMatrix& m, const FpVec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
  const int p = m.zero().p();
  FpVec out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += static_cast<std::int64_t>(m(i, j).value()) * v[j];
    out[i] = mod(acc, p);
  }
  return out;
}

Code encode(const FpMatrix& m) {
  Code c;
  c.reserve(m.data().size());
  for (const auto& x : m.data()) c.push_back(x.value());
  return c;
}

FpMatrix decode_matrix(int p, std::size_t n, const int* first) {
  FpMatrix m(n, n, FpScalar(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = FpScalar(p, first[i * n + j]);
  return m;
}

namespace {

FpMatrix columns_to_matrix(int p, const std::vector<FpVec>& cols, std::size_t dim) {
  FpMatrix m(dim, cols.size(), FpScalar(p, 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != dim) throw std::invalid_argument("vector has wrong dimension");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = FpScalar(p, cols[j][i]);
  }
  return m;
}


FpVec axpy(int p, int a, const FpVec& x, const FpVec& y) {
  FpVec r(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) r[i] = mod(static_cast<std::int64_t>(a) * x[i] + y[i], p);
  return r;
}

bool is_zero_vec(const FpVec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

}  // namespace

int SympSpace::pair(const FpVec& u, const FpVec& v) const {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      acc += static_cast<std::int64_t>(u[i]) * gram_(i, j).value() * v[j] % p_;
  }
  return mod(acc, p_);
}

bool SympSpace::is_symplectic(const FpMatrix& s) const {
  return s.rows() == dim() && s.cols() == dim() && s.transpose() * gram_ * s == gram_;
}

FpVec SympSpace::e(std::size_t i) const {
  FpVec v(dim(), 0);
  v.at(i - 1) = 1;
  return v;
}

FpVec SympSpace::f(std::size_t i) const {
  FpVec v(dim(), 0);
  v.at(dim() - i) = 1;
  return v;
}

SympSpace make_space(int p, std::size_t n, std::optional<FpMatrix> gram) {
  require_odd_prime(p);
  if (n == 0) throw std::invalid_argument("symplectic space must have positive dimension");
  const std::size_t d = 2 * n;
  SympSpace s;
  s.p_ = p;
  if (!gram) {
    FpMatrix g(d, d, FpScalar(p, 0));
    for (std::size_t i = 1; i <= n; ++i) {
      g(i - 1, d - i) = FpScalar(p, 1);
      g(d - i, i - 1) = FpScalar(p, -1);
    }
    s.gram_ = g;
    return s;
  }
  const FpMatrix& g = *gram;
  if (g.rows() != d || g.cols() != d) throw std::invalid_argument("Gram matrix has wrong size");
  if (g.zero().p() != p) throw std::invalid_argument("Gram matrix over the wrong field");
  for (std::size_t i = 0; i < d; ++i) {
    if (!g(i, i).is_zero()) throw std::invalid_argument("Gram matrix is not alternating");
    for (std::size_t j = 0; j < d; ++j)
      if (!(g(i, j) == -g(j, i))) throw std::invalid_argument("Gram matrix is not alternating");
  }
  if (determinant(g).is_zero()) throw std::invalid_argument("Gram matrix is degenerate");
  s.gram_ = g;
  return s;
}

std::pair<std::vector<FpVec>, std::vector<FpVec>> symplectic_basis(const SympSpace& space,
                                                                    std::vector<FpVec> vectors) {
  const int p = space.p();
  std::vector<FpVec> es, fs;
  while (!vectors.empty()) {
    FpVec u = vectors.front();
    std::size_t partner = vectors.size();
    for (std::size_t j = 1; j < vectors.size(); ++j)
      if (space.pair(u, vectors[j]) != 0) {
        partner = j;
        break;
      }
    if (partner == vectors.size()) throw std::invalid_argument("span is degenerate");
    FpVec w = vectors[partner];
    const int scale = inv_mod(space.pair(u, w), p);
    for (auto& x : w) x = mod(static_cast<std::int64_t>(x) * scale, p);
    std::vector<FpVec> rest;
    for (std::size_t j = 1; j < vectors.size(); ++j) {
      if (j == partner) continue;
      const FpVec& x = vectors[j];
      // x - <x,w> u + <x,u> w is orthogonal to both u and w.
      FpVec y = axpy(p, -space.pair(x, w), u, x);
      y = axpy(p, space.pair(x, u), w, y);
      if (!is_zero_vec(y)) rest.push_back(std::move(y));
    }
    es.push_back(std::move(u));
    fs.push_back(std::move(w));
    vectors = std::move(rest);
  }
  return {es, fs};
}

Decomposition decompose(const SympSpace& space, std::vector<FpVec> plus, std::vector<FpVec> zero,
                        std::vector<FpVec> minus) {
  const int p = space.p();
  const std::size_t d = space.dim();
  std::vector<FpVec> all;
  for (const auto* part : {&plus, &zero, &minus})
    for (const auto& v : *part) {
      if (v.size() != d) throw DecompositionError("not a basis: vector of wrong dimension");
      FpVec r(d);
      for (std::size_t i = 0; i < d; ++i) r[i] = mod(v[i], p);
      all.push_back(r);
    }
  if (all.size() != d) throw DecompositionError("not a basis");
  FpMatrix basis = columns_to_matrix(p, all, d);
  if (rank(basis) != d) throw DecompositionError("not a basis");

  auto pairs_vanish = [&](const std::vector<FpVec>& a, const std::vector<FpVec>& b) {
    for (const auto& x : a)
      for (const auto& y : b)
        if (space.pair(x, y) != 0) return false;
    return true;
  };
  if (!pairs_vanish(plus, plus) || !pairs_vanish(minus, minus))
    throw DecompositionError("not totally isotropic");
  if (plus.size() != minus.size() || !pairs_vanish(plus, zero) || !pairs_vanish(minus, zero))
    throw DecompositionError("complement condition fails");

  Decomposition dec;
  dec.space_ = space;
  std::size_t idx = 0;
  for (auto* part : {&plus, &zero, &minus})
    for (auto& v : *part) v = all[idx++];
  dec.plus_ = std::move(plus);
  dec.zero_ = std::move(zero);
  dec.minus_ = std::move(minus);
  dec.basis_inv_ = inverse(basis);

  // V0 must be non-degenerate; symplectic_basis throws otherwise.
  std::pair<std::vector<FpVec>, std::vector<FpVec>> zero_sb;
  try {
    zero_sb = symplectic_basis(space, dec.zero_);
  } catch (const std::invalid_argument&) {
    throw DecompositionError("complement condition fails: V0 is degenerate");
  }
  const std::size_t k = dec.plus_.size();
  FpMatrix pm(k, k, FpScalar(p, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) pm(i, l) = FpScalar(p, space.pair(dec.plus_[i], dec.minus_[l]));
  FpMatrix c = inverse(pm);  // f_j = sum_l c(l, j) minus_l
  std::vector<FpVec> adapted = dec.plus_;
  for (const auto& a : zero_sb.first) adapted.push_back(a);
  for (const auto& b : zero_sb.second) adapted.push_back(b);
  for (std::size_t j = 0; j < k; ++j) {
    FpVec fj(d, 0);
    for (std::size_t l = 0; l < k; ++l) fj = axpy(p, c(l, j).value(), dec.minus_[l], fj);
    adapted.push_back(fj);
  }
  dec.adapted_ = columns_to_matrix(p, adapted, d);
  return dec;
}

FpVec Decomposition::coords(const FpVec& v) const { return apply(basis_inv_, v); }

SympSpace Decomposition::zero_space() const {
  const std::size_t m = zero_.size();
  if (m == 0) throw std::invalid_argument("V0 is zero");
  FpMatrix g(m, m, FpScalar(space_.p(), 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i, j) = FpScalar(space_.p(), space_.pair(zero_[i], zero_[j]));
  return make_space(space_.p(), m / 2, g);
}

Decomposition standard_decomposition(const SympSpace& space, std::size_t k) {
  const std::size_t n = space.half_dim();
  if (k > n) throw std::invalid_argument("dim V+ exceeds half the dimension");
  std::vector<FpVec> plus, zero, minus;
  for (std::size_t i = 1; i <= k; ++i) {
    plus.push_back(space.e(i));
    minus.push_back(space.f(i));
  }
  for (std::size_t i = k + 1; i <= n; ++i) zero.push_back(space.e(i));
  for (std::size_t i = k + 1; i <= n; ++i) zero.push_back(space.f(i));
  return decompose(space, plus, zero, minus);
}

Decomposition lagrangian_decomposition(const SympSpace& space) {
  std::vector<FpVec> basis;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    FpVec v(space.dim(), 0);
    v[i] = 1;
    basis.push_back(v);
  }
  auto [es, fs] = symplectic_basis(space, basis);
  return decompose(space, es, {}, fs);
}

FpMatrix conjugating_element(const Decomposition& from, const Decomposition& to) {
  if (from.k() != to.k() || from.zero_dim() != to.zero_dim() ||
      from.space().dim() != to.space().dim() || from.space().p() != to.space().p())
    throw std::invalid_argument("decompositions have different dimension profiles");
  if (!(from.space().gram() == to.space().gram()))
    throw std::invalid_argument("decompositions live in different spaces");
  return to.adapted_basis() * inverse(from.adapted_basis());
}

namespace {

unsigned __int128 ipow(unsigned __int128 b, std::size_t e) {
  unsigned __int128 r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t saturate(unsigned __int128 x) {
  return x > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(x);
}

}  // namespace

std::uint64_t sp_order(int p, std::size_t n) {
  // p^(n^2) * prod_{i=1..n} (p^(2i) - 1), saturating.
  long double approx = 1;
  unsigned __int128 r = ipow(static_cast<unsigned>(p), n * n);
  approx *= static_cast<long double>(r);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto t = ipow(static_cast<unsigned>(p), 2 * i) - 1;
    approx *= static_cast<long double>(t);
    if (approx > 1e30L) return UINT64_MAX;
    r *= t;
  }
  return saturate(r);
}

std::uint64_t gl_order(int p, std::size_t n) {
  unsigned __int128 r = 1;
  const auto q = ipow(static_cast<unsigned>(p), n);
  for (std::size_t i = 0; i < n; ++i) r *= q - ipow(static_cast<unsigned>(p), i);
  return saturate(r);
}

std::vector<FpMatrix> sp_generators(const SympSpace& space) {
  const int p = space.p();
  const std::size_t n = space.half_dim();
  const Decomposition lag = lagrangian_decomposition(space);
  const FpMatrix& q = lag.adapted_basis();
  const FpMatrix qinv = inverse(q);
  auto block = [&](const FpMatrix& a, const FpMatrix& b, const FpMatrix& c, const FpMatrix& d) {
    FpMatrix m(2 * n, 2 * n, FpScalar(p, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = a(i, j);
        m(i, n + j) = b(i, j);
        m(n + i, j) = c(i, j);
        m(n + i, n + j) = d(i, j);
      }
    return q * m * qinv;
  };
  const FpMatrix one = fp_identity(p, n);
  const FpMatrix zero(n, n, FpScalar(p, 0));
  std::vector<FpMatrix> gens;
  auto levi = [&](const FpMatrix& a) { gens.push_back(block(a, zero, zero, inverse(a).transpose())); };
  FpMatrix torus = one;
  torus(0, 0) = FpScalar(p, least_nonsquare(p));
  levi(torus);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        FpMatrix a = one;
        a(i, j) = FpScalar(p, 1);
        levi(a);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      FpMatrix b = zero;
      b(i, j) = FpScalar(p, 1);
      b(j, i) = FpScalar(p, 1);
      gens.push_back(block(one, b, zero, one));
    }
  gens.push_back(block(zero, one, -FpScalar(p, 1) * one, zero));
  return gens;
}

std::vector<FpMatrix> enumerate_sp(const SympSpace& space, std::uint64_t cap) {
  const int p = space.p();
  const std::size_t d = space.dim();
  const std::uint64_t order = sp_order(p, space.half_dim());
  if (order > cap) throw CapExceeded("Sp(" + std::to_string(d) + ", F_" + std::to_string(p) + ")", order, cap);
  const auto gens = sp_generators(space);
  std::unordered_set<Code, CodeHash> seen;
  std::deque<FpMatrix> frontier;
  const FpMatrix id = fp_identity(p, d);
  seen.insert(encode(id));
  frontier.push_back(id);
  while (!frontier.empty()) {
    FpMatrix cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      FpMatrix nxt = cur * g;
      if (seen.insert(encode(nxt)).second) frontier.push_back(std::move(nxt));
    }
  }
  std::vector<Code> codes(seen.begin(), seen.end());
  std::sort(codes.begin(), codes.end());
  std::vector<FpMatrix> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(decode_matrix(p, d, c.data()));
  return out;
}

std::vector<FpMatrix> enumerate_gl(int p, std::size_t n, std::uint64_t cap) {
  require_odd_prime(p);
  const std::uint64_t order = gl_order(p, n);
  if (order > cap) throw CapExceeded("GL(" + std::to_string(n) + ", F_" + std::to_string(p) + ")", order, cap);
  std::vector<FpMatrix> out;
  std::vector<int> entries(n * n, 0);
  // Odometer over all n x n matrices in lexicographic order.
  while (true) {
    FpMatrix m = fp_matrix(p, n, n, entries);
    if (!determinant(m).is_zero()) out.push_back(std::move(m));
    std::size_t pos = entries.size();
    while (pos > 0) {
      --pos;
      if (++entries[pos] < p) break;
      entries[pos] = 0;
      if (pos == 0) return out;
    }
    if (entries.empty()) return out;
  }
}

FpMatrix levi_element(const Decomposition& d, const FpMatrix& a) {
  const std::size_t k = d.k();
  const std::size_t dim = d.space().dim();
  if (a.rows() != k || a.cols() != k) throw std::invalid_argument("Levi block has wrong size");
  const int p = d.space().p();
  FpMatrix blk = fp_identity(p, dim);
  const FpMatrix ait = inverse(a).transpose();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      blk(i, j) = a(i, j);
      blk(dim - k + i, dim - k + j) = ait(i, j);
    }
  return d.adapted_basis() * blk * inverse(d.adapted_basis());
}

bool is_unipotent(const FpMatrix& s) {
  FpMatrix n = s - fp_identity(s.zero().p(), s.rows());
  FpMatrix pw = n;
  for (std::size_t i = 1; i < s.rows(); ++i) pw = pw * n;
  return pw.is_zero();
}

bool ParabolicData::contains(const FpMatrix& s) const {
  const std::size_t k = decomp_.k();
  for (const auto& v : decomp_.plus()) {
    FpVec c = decomp_.coords(apply(s, v));
    for (std::size_t i = k; i < c.size(); ++i)
      if (c[i] != 0) return false;
  }
  return true;
}

void ParabolicData::require(const FpMatrix& s) const {
  if (!contains(s)) throw std::invalid_argument("element does not lie in the parabolic P");
}

FpMatrix ParabolicData::pr_plus(const FpMatrix& s) const {
  require(s);
  const std::size_t k = decomp_.k();
  const int p = decomp_.space().p();
  FpMatrix m(k, k, FpScalar(p, 0));
  for (std::size_t j = 0; j < k; ++j) {
    FpVec c = decomp_.coords(apply(s, decomp_.plus()[j]));
    for (std::size_t i = 0; i < k; ++i) m(i, j) = FpScalar(p, c[i]);
  }
  return m;
}

FpMatrix ParabolicData::pr_zero(const FpMatrix& s) const {
  require(s);
  const std::size_t k = decomp_.k();
  const std::size_t z = decomp_.zero_dim();
  const int p = decomp_.space().p();
  FpMatrix m(z, z, FpScalar(p, 0));
  for (std::size_t j = 0; j < z; ++j) {
    FpVec c = decomp_.coords(apply(s, decomp_.zero()[j]));
    for (std::size_t i = 0; i < z; ++i) m(i, j) = FpScalar(p, c[k + i]);
  }
  return m;
}

ParabolicData siegel_parabolic(const Decomposition& d) { return ParabolicData(d); }

int chi_vplus(const ParabolicData& parab, const FpMatrix& s) {
  const FpMatrix a = parab.pr_plus(s);
  if (a.rows() == 0) return 1;
  return legendre(determinant(a).value(), parab.decomp().space().p());
}

}  // namespace weilheis
