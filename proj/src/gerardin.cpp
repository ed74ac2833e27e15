#include "weilheis/gerardin.hpp"

#include <stdexcept>

#include "weilheis/heisenberg.hpp"
#include "weilheis/matrix_groups.hpp"

namespace weilheis {

namespace {

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// (s, (v, a)) of P x| V# as JSON.
Json element_json(const GerardinModel& m, const Code& c) {
  const std::size_t d = 2 * m.cfg.n;
  const Code s = m.group->left(c), h = m.group->right(c);
  Json j;
  j["s"] = matrix_json(decode_matrix(m.cfg.p, d, s.data()));
  j["v"] = Code(h.begin(), h.end() - 1);
  j["a"] = h.back();
  return j;
}

struct Sweep {
  std::size_t mismatches = 0;
  std::optional<std::size_t> first;
};

Sweep compare(const std::vector<CycScalar>& a, const std::vector<CycScalar>& b) {
  Sweep s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) {
      ++s.mismatches;
      if (!s.first) s.first = i;
    }
  return s;
}

}  // namespace

Json matrix_json(const FpMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).value());
    rows.push_back(row);
  }
  return rows;
}

Json config_json(const GerardinConfig& cfg) {
  Json j;
  j["p"] = cfg.p;
  j["dim_V"] = 2 * cfg.n;
  j["dim_V_plus"] = cfg.k;
  j["dim_V_zero"] = 2 * (cfg.n - cfg.k);
  j["cc_unit"] = cfg.unit;
  return j;
}

GerardinModel build_gerardin_model(const GerardinConfig& cfg) {
  require_odd_prime(cfg.p);
  if (cfg.n == 0 || cfg.k > cfg.n) throw std::invalid_argument("need 0 <= dim V+ <= dim V / 2 and dim V > 0");
  if (mod(cfg.unit, cfg.p) == 0) throw std::invalid_argument("central character unit must be nonzero mod p");
  const int p = cfg.p;
  const std::size_t n = cfg.n, k = cfg.k, d = 2 * n, z = 2 * (n - k);
  const std::uint64_t sp_size = sp_order(p, n);
  if (sp_size > cfg.max_group_order) throw CapExceeded("Sp(V)", sp_size, cfg.max_group_order);

  const SympSpace space = make_space(p, n);
  Decomposition decomp = standard_decomposition(space, k);
  auto parab = std::make_shared<const ParabolicData>(decomp);
  auto sp = sp_group(space, cfg.max_group_order);
  GroupPtr pg = subgroup(
      sp, [parab, p, d](const Code& c) { return parab->contains(decode_matrix(p, d, c.data())); }, "P");
  const std::uint64_t big = pg->size() * power(static_cast<std::uint64_t>(p), d + 1);
  if (big > cfg.max_group_order) throw CapExceeded("P x| V#", big, cfg.max_group_order);

  auto heis = make_heisenberg(space);
  auto g = semidirect(pg, heis, symplectic_action(p, d), "P x| V#");
  // V+ x V0# is the part of V# with no V- component.
  GroupPtr vplus_zero = subgroup(
      heis,
      [decomp, k, z](const Code& c) {
        const FpVec x = decomp.coords(FpVec(c.begin(), c.end() - 1));
        for (std::size_t i = k + z; i < x.size(); ++i)
          if (x[i] != 0) return false;
        return true;
      },
      "V+ x V0#");
  auto h = semidirect(pg, vplus_zero, symplectic_action(p, d), "P x| (V+ x V0#)");

  const CentralCharacter psi{p, cfg.unit};
  auto lift = std::make_shared<const WeilLift>(heis, standard_decomposition(space, n), psi);

  std::vector<int> chi(pg->size());
  std::vector<Code> prz(pg->size());
  for (std::size_t i = 0; i < pg->size(); ++i) {
    const FpMatrix s = decode_matrix(p, d, pg->element(i).data());
    chi[i] = chi_vplus(*parab, s);
    if (z > 0) prz[i] = encode(parab->pr_zero(s));
  }

  std::shared_ptr<const WeilLift> lift0;
  std::optional<FiniteRep> sigma_bare;
  if (z > 0) {
    const SympSpace v0 = decomp.zero_space();
    auto heis0 = make_heisenberg(v0);
    lift0 = std::make_shared<const WeilLift>(heis0, lagrangian_decomposition(v0), psi);
    auto g0 = semidirect(sp_group(v0, cfg.max_group_order), heis0, symplectic_action(p, z), "Sp(V0) x| V0#");
    const FiniteRep rep0 = weil_heisenberg_rep(lift0, g0);
    sigma_bare = inflate(rep0, h, [pg, g0, h, prz, decomp, k, z](const Code& c) {
      const Code hv = h->right(c);
      const FpVec x = decomp.coords(FpVec(hv.begin(), hv.end() - 1));
      Code n0(x.begin() + static_cast<std::ptrdiff_t>(k), x.begin() + static_cast<std::ptrdiff_t>(k + z));
      n0.push_back(hv.back());
      return g0->join(prz[*pg->index_of(h->left(c))], n0);
    });
  } else {
    sigma_bare = linear_character(h, p, [psi](const Code& c) { return psi(c.back()); }, "psi");
  }
  const FiniteRep chi_rep = linear_character(
      h, p,
      [pg, h, chi, p](const Code& c) { return CycScalar(p, Rational(chi[*pg->index_of(h->left(c))])); },
      "chi^{V+}");
  const FiniteRep sigma = tensor(chi_rep, *sigma_bare);

  const CosetSpace cosets = right_cosets(g, h);
  GerardinModel m{cfg,
                  decomp,
                  parab,
                  pg,
                  g,
                  h,
                  lift,
                  lift0,
                  sigma,
                  weil_heisenberg_rep(lift, g),
                  induce(sigma, g, cosets),
                  induce(*sigma_bare, g, cosets),
                  std::move(chi),
                  std::move(prz)};
  return m;
}

CycScalar expected_fixed_character(const GerardinModel& m, std::size_t i) {
  const CycScalar c(m.cfg.p, Rational(m.chi[i]));
  if (!m.lift_zero) return c;
  return c * trace(m.lift_zero->matrix(m.pr_zero[i]));
}

std::optional<FpVec> unpaired_minus_vector(const Decomposition& d) {
  const SympSpace& v = d.space();
  const int p = v.p();
  const std::size_t km = d.minus().size();
  const std::uint64_t count = power(static_cast<std::uint64_t>(p), km);
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    FpVec w(v.dim(), 0);
    std::uint64_t rest = idx;
    for (std::size_t j = 0; j < km; ++j, rest /= static_cast<std::uint64_t>(p)) {
      const int c = static_cast<int>(rest % static_cast<std::uint64_t>(p));
      for (std::size_t t = 0; t < w.size(); ++t) w[t] = mod(w[t] + c * d.minus()[j][t], p);
    }
    bool paired = false;
    for (const auto& e : d.plus())
      if (v.pair(w, e) != 0) paired = true;
    // Pairing against a basis of V+ is enough: the pairing is linear.
    if (!paired) return w;
  }
  return std::nullopt;
}

VerdictReport check_gerardin_corrected(const GerardinConfig& cfg) {
  const Stopwatch clock;
  VerdictReport r;
  r.task = "gerardin";
  r.claim =
      "Res to P x| V# of the Weil-Heisenberg representation = Ind from P x| (V+ x V0#) of "
      "V_omega^0 (x) (chi^{V+} x| 1), characters compared at every element";
  r.config = config_json(cfg);
  const GerardinModel m = build_gerardin_model(cfg);
  const auto cl = character_values(m.left), cr = character_values(m.right);
  const Sweep sw = compare(cl, cr);
  const auto hom_lr = character_inner(cl, cr), hom_ll = character_inner(cl, cl), hom_rr = character_inner(cr, cr);
  const auto solver = dim_hom_solver(m.left, m.right, m.group->generators());
  r.dims["group_order"] = m.group->size();
  r.dims["dim_left"] = m.left.dim();
  r.dims["dim_right"] = m.right.dim();
  r.dims["elements_compared"] = cl.size();
  r.dims["character_mismatches"] = sw.mismatches;
  r.dims["hom_left_right"] = hom_lr;
  r.dims["hom_left_left"] = hom_ll;
  r.dims["hom_right_right"] = hom_rr;
  r.dims["hom_left_right_solver"] = solver;
  r.pass = sw.mismatches == 0 && m.left.dim() == m.right.dim() && hom_lr == hom_ll && hom_ll == hom_rr &&
           hom_ll == 1 && solver == static_cast<std::size_t>(hom_lr);
  if (sw.first) {
    Json w = element_json(m, m.group->element(*sw.first));
    w["left"] = cl[*sw.first].str();
    w["right"] = cr[*sw.first].str();
    r.witnesses.push_back(w);
  }
  r.runtime_ms = clock.ms();
  return r;
}

VerdictReport falsify_misprint(const GerardinConfig& cfg) {
  const Stopwatch clock;
  VerdictReport r;
  r.task = "misprint";
  r.config = config_json(cfg);
  const GerardinModel m = build_gerardin_model(cfg);
  const auto cl = character_values(m.left), cb = character_values(m.bare), cr = character_values(m.right);
  const Sweep sw = compare(cl, cb);
  r.dims["group_order"] = m.group->size();
  r.dims["character_mismatches"] = sw.mismatches;
  r.dims["hom_left_without_chi"] = character_inner(cl, cb);
  r.dims["hom_left_with_chi"] = character_inner(cl, cr);
  if (sw.first) {
    Json w = element_json(m, m.group->element(*sw.first));
    w["kind"] = "first mismatch in canonical order";
    w["restriction"] = cl[*sw.first].str();
    w["without_chi"] = cb[*sw.first].str();
    r.witnesses.push_back(w);
  }
  if (cfg.k == 0) {
    r.claim = "with V+ = 0 the induction with and without chi^{V+} both reduce to V_omega";
    r.pass = sw.mismatches == 0;
    r.notes.push_back("nothing to falsify: chi^{V+} is trivial when V+ = 0");
  } else {
    r.claim = "the induction without chi^{V+} x| 1 does not give the restriction (character mismatch)";
    // A Levi element with non-square determinant on V+.
    FpMatrix a = fp_identity(cfg.p, cfg.k);
    a(0, 0) = FpScalar(cfg.p, least_nonsquare(cfg.p));
    const Code levi = m.group->join(encode(levi_element(m.decomp, a)), m.group->normal()->identity());
    const CycScalar lv = m.left.character(levi), bv = m.bare.character(levi);
    Json w = element_json(m, levi);
    w["kind"] = "Levi element with non-square determinant";
    w["restriction"] = lv.str();
    w["without_chi"] = bv.str();
    r.witnesses.push_back(w);
    r.pass = sw.mismatches > 0 && !(lv == bv);
  }
  r.runtime_ms = clock.ms();
  return r;
}

VerdictReport check_fixed_point_iso(const GerardinConfig& cfg) {
  const Stopwatch clock;
  VerdictReport r;
  r.task = "fixedpoint";
  r.claim =
      "the (1 x| (V+ x 0))-fixed vectors of the induced representation have dimension p^{n0} and, "
      "as a P-representation, the character of V_omega^0 (x) chi^{V+}";
  r.config = config_json(cfg);
  const GerardinModel m = build_gerardin_model(cfg);
  const int p = cfg.p;
  const std::size_t k = cfg.k, n0 = cfg.n - cfg.k;

  std::vector<Code> translations;
  const auto& heis = m.group->normal();
  for (std::uint64_t idx = 0; idx < power(static_cast<std::uint64_t>(p), k); ++idx) {
    FpVec v(2 * cfg.n, 0);
    std::uint64_t rest = idx;
    for (std::size_t j = 0; j < k; ++j, rest /= static_cast<std::uint64_t>(p)) {
      const int c = static_cast<int>(rest % static_cast<std::uint64_t>(p));
      for (std::size_t t = 0; t < v.size(); ++t) v[t] = mod(v[t] + c * m.decomp.plus()[j][t], p);
    }
    v.push_back(0);
    translations.push_back(m.group->join(m.p_group->identity(), v));
  }
  const auto fixed = invariants(m.right, translations);
  const std::size_t want = static_cast<std::size_t>(power(static_cast<std::uint64_t>(p), n0));

  std::vector<std::size_t> pivots;
  for (const auto& row : fixed) {
    std::size_t j = 0;
    while (row[j].is_zero()) ++j;
    pivots.push_back(j);
  }
  std::size_t mismatches = 0, unstable = 0;
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < m.p_group->size(); ++i) {
    const CycMatrix a = m.right.matrix(m.group->join(m.p_group->element(i), heis->identity()));
    CycScalar t(p);
    for (std::size_t q = 0; q < fixed.size(); ++q) {
      CycVector image(a.rows(), CycScalar(p));
      for (std::size_t row = 0; row < a.rows(); ++row)
        for (std::size_t col = 0; col < a.cols(); ++col)
          if (!a(row, col).is_zero() && !fixed[q][col].is_zero()) image[row] += a(row, col) * fixed[q][col];
      // In echelon coordinates the image is sum_q' image[pivot_q'] fixed[q'].
      CycVector rebuilt(a.rows(), CycScalar(p));
      for (std::size_t q2 = 0; q2 < fixed.size(); ++q2)
        for (std::size_t col = 0; col < a.rows(); ++col)
          if (!fixed[q2][col].is_zero()) rebuilt[col] += image[pivots[q2]] * fixed[q2][col];
      if (!(rebuilt == image)) ++unstable;
      t += image[pivots[q]];
    }
    if (!(t == expected_fixed_character(m, i))) {
      ++mismatches;
      if (!first) first = i;
    }
  }
  const auto unpaired = unpaired_minus_vector(m.decomp);
  r.dims["fixed_dim"] = fixed.size();
  r.dims["expected_fixed_dim"] = want;
  r.dims["P_order"] = m.p_group->size();
  r.dims["P_character_mismatches"] = mismatches;
  r.dims["P_unstable_images"] = unstable;
  r.dims["pairing_lemma_holds"] = !unpaired.has_value();
  r.notes.push_back("pairing lemma: every nonzero v in V- pairs nontrivially with some v+ in V+");
  if (first) {
    Json w;
    w["s"] = matrix_json(decode_matrix(p, 2 * cfg.n, m.p_group->element(*first).data()));
    r.witnesses.push_back(w);
  }
  if (unpaired) r.witnesses.push_back(Json{{"unpaired_minus_vector", *unpaired}});
  r.pass = fixed.size() == want && mismatches == 0 && unstable == 0 && !unpaired;
  r.runtime_ms = clock.ms();
  return r;
}

}  // namespace weilheis
