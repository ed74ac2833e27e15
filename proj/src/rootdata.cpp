#include "weilheis/rootdata.hpp"

#include <cstdlib>
#include <utility>
#include <sstream>
#include <stdexcept>

namespace weilheis {

ValuedScalar::ValuedScalar(Rational c, int varpi_exponent) {
  if (!c.is_zero()) terms_.emplace(varpi_exponent, std::move(c));
}

std::optional<Rational> ValuedScalar::val() const {
  if (terms_.empty()) return std::nullopt;
  return Rational(terms_.begin()->first, 2);
}

Rational ValuedScalar::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

ValuedScalar& ValuedScalar::operator+=(const ValuedScalar& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, c);
    if (inserted) continue;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

ValuedScalar& ValuedScalar::operator-=(const ValuedScalar& o) { return *this += -o; }

ValuedScalar ValuedScalar::operator-() const {
  ValuedScalar r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

ValuedScalar operator*(const ValuedScalar& a, const ValuedScalar& b) {
  ValuedScalar r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r += ValuedScalar(ca * cb, ka + kb);
  return r;
}

std::string ValuedScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = c;
    if (first) {
      if (c < Rational(0)) {
        os << "-";
        mag = -c;
      }
    } else {
      os << (c < Rational(0) ? " - " : " + ");
      if (c < Rational(0)) mag = -c;
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << "varpi";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

std::string val_string(const ValuedScalar& x) {
  const auto v = x.val();
  return v ? v->str() : "+inf";
}

int pairing(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("pairing: rank mismatch");
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string weight_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

Weight RootDatumC::coroot(const Weight& root) {
  if (!is_long(root)) return root;
  Weight c = root;
  for (int& x : c) x /= 2;
  return c;
}

bool RootDatumC::is_long(const Weight& root) {
  int nonzero = 0, two = 0;
  for (int x : root) {
    nonzero += x != 0;
    two += std::abs(x) == 2;
  }
  return nonzero == 1 && two == 1;
}

RootDatumC c_root_system(std::size_t n) {
  if (n == 0) throw std::invalid_argument("c_root_system: rank must be at least 1");
  RootDatumC r;
  r.n = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Weight w(n, 0);
          w[i] = si;
          w[j] = sj;
          r.roots.push_back(w);
        }
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {2, -2}) {
      Weight w(n, 0);
      w[i] = s;
      r.roots.push_back(w);
    }
  return r;
}

namespace {

constexpr std::size_t kDim = 10;

ValuedMatrix zero10() { return ValuedMatrix(kDim, kDim, ValuedScalar()); }

ValuedMatrix commutator(const ValuedMatrix& a, const ValuedMatrix& b) { return a * b - b * a; }

}  // namespace

ValuedMatrix corner_element() {
  ValuedMatrix m = zero10();
  m(0, kDim - 1) = ValuedScalar::varpi(1);
  m(kDim - 1, 0) = ValuedScalar::varpi(-1);
  return m;
}

ValuedMatrix diagonal_element(std::size_t j) {
  if (j < 2 || j > 5) throw std::invalid_argument("diagonal_element: j must lie in 2..5");
  ValuedMatrix m = zero10();
  m(j - 1, j - 1) = Rational(1);
  m(kDim - j, kDim - j) = Rational(-1);
  return m;
}

std::vector<Weight> levi_factor_roots_sp10() {
  std::vector<Weight> out;
  for (const Weight& w : c_root_system(5).roots)
    if (w[0] == 0) out.push_back(w);
  return out;
}

std::vector<ComplementRoot> twisted_levi_complement_sp10() {
  const ValuedMatrix p = corner_element();
  std::vector<ComplementRoot> out;
  for (const Weight& w : c_root_system(5).roots) {
    if (w[0] == 0) continue;
    ComplementRoot c{w, RootDatumC::coroot(w), zero10()};
    c.h = ValuedScalar(Rational(c.coroot[0])) * p;
    for (std::size_t j = 2; j <= 5; ++j)
      if (c.coroot[j - 1] != 0) c.h = c.h + ValuedScalar(Rational(c.coroot[j - 1])) * diagonal_element(j);
    out.push_back(std::move(c));
  }
  return out;
}

ValuedMatrix sp10_form() {
  ValuedMatrix g = zero10();
  for (std::size_t i = 0; i < 5; ++i) {
    const int sign = i % 2 == 0 ? 1 : -1;
    g(i, kDim - 1 - i) = Rational(sign);
    g(kDim - 1 - i, i) = Rational(-sign);
  }
  return g;
}

bool in_sp10(const ValuedMatrix& h) {
  if (h.rows() != kDim || h.cols() != kDim) return false;
  const ValuedMatrix g = sp10_form();
  return (h.transpose() * g + g * h).is_zero();
}

ValuedScalar GenericElement::operator()(const ValuedMatrix& a) const {
  if (a.rows() != n.cols() || a.cols() != n.rows()) throw std::invalid_argument("generic element: shape mismatch");
  ValuedScalar s;
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j)
      if (!n(i, j).is_zero() && !a(j, i).is_zero()) s += n(i, j) * a(j, i);
  return s;
}

GenericElement corner_generic_element() {
  ValuedMatrix n = zero10();
  n(kDim - 1, 0) = ValuedScalar::pi(-1);
  n(0, kDim - 1) = Rational(1);
  return {"corner", n};
}

GenericElement scaled_generic_element() {
  ValuedMatrix n = zero10();
  n(kDim - 1, 0) = Rational(1);
  n(0, kDim - 1) = ValuedScalar::pi(1);
  return {"scaled", n};
}

GenericElement zero_generic_element() { return {"zero", zero10()}; }

GenericElement generic_element_named(const std::string& name) {
  if (name == "corner") return corner_generic_element();
  if (name == "scaled") return scaled_generic_element();
  if (name == "zero") return zero_generic_element();
  throw std::invalid_argument("unknown generic element '" + name + "'");
}

std::vector<ValuedMatrix> centralizer_basis() {
  // The symplectic projection E_ij + g E_ji g of each matrix unit (g^2 = -1),
  // kept when it commutes with P. What survives is sp8 on indices 2..9; with
  // P added this spans the centralizer.
  const ValuedMatrix g = sp10_form();
  const ValuedMatrix p = corner_element();
  std::vector<ValuedMatrix> out{p};
  for (std::size_t i = 0; i < kDim; ++i)
    for (std::size_t j = 0; j < kDim; ++j) {
      // (i, j) and (9-j, 9-i) project to the same line.
      if (std::pair(kDim - 1 - j, kDim - 1 - i) < std::pair(i, j)) continue;
      ValuedMatrix e = zero10(), et = zero10();
      e(i, j) = Rational(1);
      et(j, i) = Rational(1);
      const ValuedMatrix y = e + g * et * g;
      if (y.is_zero() || !commutator(y, p).is_zero()) continue;
      out.push_back(y);
    }
  return out;
}

std::size_t invariance_defects(const GenericElement& x) {
  std::size_t bad = 0;
  const auto basis = centralizer_basis();
  for (const ValuedMatrix& y : basis)
    for (std::size_t k = 0; k < kDim; ++k)
      for (std::size_t l = 0; l < kDim; ++l) {
        ValuedMatrix e = zero10();
        e(k, l) = Rational(1);
        bad += !x(commutator(y, e)).is_zero();
      }
  return bad;
}

Json config_json(const GenericityConfig& cfg) {
  return Json{{"element", cfg.element}, {"depth", cfg.depth.str()}};
}

VerdictReport genericity_check(const GenericElement& x, const std::vector<ComplementRoot>& complement,
                               const Rational& depth) {
  Stopwatch clock;
  VerdictReport r;
  r.task = "genericity";
  r.claim = "val X(H_alpha) = -r for every root alpha outside the twisted Levi subgroup";
  r.config = Json{{"element", x.name}, {"depth", depth.str()}};
  r.pass = true;
  Json values = Json::array();
  std::size_t failures = 0;
  for (const ComplementRoot& c : complement) {
    const ValuedScalar v = x(c.h);
    const bool ok = v.val() && *v.val() == -depth;
    Json entry{{"root", weight_string(c.root)}, {"value", v.str()}, {"val", val_string(v)}};
    if (!ok) {
      ++failures;
      r.pass = false;
      r.witnesses.push_back(entry);
    }
    values.push_back(std::move(entry));
  }
  r.dims["roots"] = complement.size();
  r.dims["failures"] = failures;
  r.dims["values"] = std::move(values);
  r.runtime_ms = clock.ms();
  return r;
}

VerdictReport run_genericity(const GenericityConfig& cfg) {
  Stopwatch clock;
  const GenericElement x = generic_element_named(cfg.element);
  const auto complement = twisted_levi_complement_sp10();
  VerdictReport r = genericity_check(x, complement, cfg.depth);
  r.config = config_json(cfg);

  const std::size_t all = c_root_system(5).roots.size();
  const std::size_t factor = levi_factor_roots_sp10().size();
  std::size_t outside_sp10 = 0, pairing_defects = 0;
  for (const ComplementRoot& c : complement) {
    outside_sp10 += !in_sp10(c.h);
    pairing_defects += pairing(c.root, c.coroot) != 2;
  }
  const std::size_t defects = invariance_defects(x);

  Json dims;
  dims["roots_c5"] = all;
  dims["roots_levi_factor"] = factor;
  dims["roots_complement"] = complement.size();
  dims["h_outside_sp10"] = outside_sp10;
  dims["pairing_defects"] = pairing_defects;
  dims["invariance_defects"] = defects;
  for (auto& [k, v] : r.dims.items()) dims[k] = v;
  r.dims = std::move(dims);

  const bool structure = all == 50 && factor == 32 && complement.size() == 18 && outside_sp10 == 0 && pairing_defects == 0;
  if (!structure) {
    r.pass = false;
    r.witnesses.push_back(Json{{"structure", "root counts, sp10 membership or coroot pairing wrong"}});
  }
  if (defects != 0) {
    r.pass = false;
    r.witnesses.push_back(Json{{"invariance", "X([Y, E]) != 0 for some Y centralizing P"}});
  }
  r.notes.push_back("H_alpha are the displayed torus-frame matrices; only the valuation condition is checked");
  r.runtime_ms = clock.ms();
  return r;
}

}  // namespace weilheis
