#include "weilheis/model_checks.hpp"

#include <random>
#include <stdexcept>

#include "weilheis/gerardin.hpp"
#include "weilheis/matrix_groups.hpp"
#include "weilheis/weil.hpp"

namespace weilheis {

namespace {

void validate(const ModelConfig& cfg) {
  if (cfg.n == 0) throw std::invalid_argument("dim V must be positive");
  if (mod(cfg.unit, cfg.p) == 0) throw std::invalid_argument("central character unit must be nonzero mod p");
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Json config_json(const ModelConfig& cfg) {
  Json j;
  j["p"] = cfg.p;
  j["dim_V"] = 2 * cfg.n;
  j["central_character_unit"] = cfg.unit;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["max_group_order"] = cfg.max_group_order;
  return j;
}

VerdictReport check_stone_von_neumann(const ModelConfig& cfg) {
  Stopwatch clock;
  validate(cfg);
  VerdictReport r;
  r.task = "svn";
  r.claim = "the Schroedinger model is irreducible of dimension p^n and every Sp(V)-conjugate of it is isomorphic to it";
  r.config = config_json(cfg);

  const SympSpace v = make_space(cfg.p, cfg.n);
  const HeisPtr heis = make_heisenberg(v);
  const FiniteRep rho = schrodinger_rep(heis, standard_decomposition(v, cfg.n), {cfg.p, cfg.unit});
  const GroupPtr sp = sp_group(v, cfg.max_group_order);

  const std::int64_t self_char = dim_hom(rho, rho);
  const std::size_t self_solver = intertwining_dim(rho, rho);

  std::vector<Code> conjugators = sp->generators();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> pick(0, sp->size() - 1);
  for (std::size_t i = 0; i < cfg.random_conjugates; ++i) conjugators.push_back(sp->element(pick(rng)));

  std::size_t bad = 0;
  for (const Code& s : conjugators) {
    const FpMatrix m = decode_matrix(cfg.p, v.dim(), s.data());
    const FiniteRep twisted = conjugate_by(rho, heis, m);
    const std::int64_t by_char = dim_hom(rho, twisted);
    const std::size_t by_solver = intertwining_dim(rho, twisted);
    if (by_char == 1 && by_solver == 1) continue;
    ++bad;
    r.witnesses.push_back(Json{{"s", matrix_json(m)}, {"hom_character", by_char}, {"hom_solver", by_solver}});
  }

  const std::uint64_t expected = power(static_cast<std::uint64_t>(cfg.p), cfg.n);
  r.dims["dim"] = rho.dim();
  r.dims["expected_dim"] = expected;
  r.dims["hom_self_character"] = self_char;
  r.dims["hom_self_solver"] = self_solver;
  r.dims["conjugated_models"] = conjugators.size();
  r.dims["conjugates_not_isomorphic"] = bad;
  r.pass = rho.dim() == expected && self_char == 1 && self_solver == 1 && bad == 0;
  r.runtime_ms = clock.ms();
  return r;
}

VerdictReport check_weil_lift(const ModelConfig& cfg) {
  Stopwatch clock;
  validate(cfg);
  VerdictReport r;
  r.task = "weil";
  r.claim = "W(s) rho(h) W(s)^-1 = rho(s.h) and W(s1 s2) = W(s1) W(s2) for the normalized Weil lift";
  r.config = config_json(cfg);

  const SympSpace v = make_space(cfg.p, cfg.n);
  const HeisPtr heis = make_heisenberg(v);
  const auto lift = std::make_shared<const WeilLift>(heis, standard_decomposition(v, cfg.n),
                                                     CentralCharacter{cfg.p, cfg.unit});
  const GroupPtr sp = sp_group(v, cfg.max_group_order);
  const ActionCheck check = semidirect_action_check([&](const Code& s) { return lift->matrix(s); },
                                                    lift->heisenberg(), sp, heis, cfg.samples, cfg.seed);

  r.pass = check.pass;
  r.dims["sp_order"] = sp->size();
  r.dims["heisenberg_order"] = heis->size();
  r.dims["weil_dim"] = lift->dim();
  r.dims["exhaustive"] = check.exhaustive;
  r.dims["conjugation_pairs"] = check.conjugation_pairs;
  r.dims["product_pairs"] = check.product_pairs;
  if (check.witness) {
    const auto& [a, b] = *check.witness;
    Json w{{"failure", check.failure}, {"s1", matrix_json(decode_matrix(cfg.p, v.dim(), a.data()))}};
    if (b.size() == v.dim() * v.dim())
      w["s2"] = matrix_json(decode_matrix(cfg.p, v.dim(), b.data()));
    else
      w["h"] = b;
    r.witnesses.push_back(std::move(w));
  }
  r.runtime_ms = clock.ms();
  return r;
}

}  // namespace weilheis
