#include "weilheis/tasks.hpp"

#include <algorithm>
#include <stdexcept>

#include "weilheis/counterexample.hpp"
#include "weilheis/gerardin.hpp"
#include "weilheis/model_checks.hpp"
#include "weilheis/rootdata.hpp"

namespace weilheis {

const std::vector<std::string>& task_names() {
  static const std::vector<std::string> names{"svn",      "weil",           "gerardin", "misprint",
                                              "fixedpoint", "counterexample", "sign",     "genericity"};
  return names;
}

bool is_task(const std::string& name) {
  return std::find(task_names().begin(), task_names().end(), name) != task_names().end();
}

VerdictReport run_task(const TaskRequest& req) {
  if (!is_task(req.task)) throw std::invalid_argument("unknown task '" + req.task + "'");
  if (req.task == "genericity") return run_genericity({Rational(1, 2), req.generic_element});

  if (req.task == "counterexample" || req.task == "sign") {
    CounterexampleConfig cfg{req.p, req.unit};
    cfg.max_group_order = req.max_group_order;
    return req.task == "sign" ? sign_argument_witness(cfg) : run_counterexample(cfg);
  }

  if (req.dim == 0 || req.dim % 2 != 0) throw std::invalid_argument("dim V must be a positive even number");
  const std::size_t n = req.dim / 2;
  if (req.task == "svn" || req.task == "weil") {
    ModelConfig cfg{req.p, n, req.unit, req.seed};
    cfg.max_group_order = req.max_group_order;
    return req.task == "svn" ? check_stone_von_neumann(cfg) : check_weil_lift(cfg);
  }

  const GerardinConfig cfg{req.p, n, req.vplus, req.unit, req.max_group_order};
  if (req.task == "gerardin") return check_gerardin_corrected(cfg);
  if (req.task == "misprint") return falsify_misprint(cfg);
  return check_fixed_point_iso(cfg);
}

std::vector<TaskRequest> acceptance_requests(std::uint64_t seed, int unit, std::uint64_t max_group_order) {
  std::vector<TaskRequest> out;
  auto add = [&](std::string task, int p, std::size_t dim, std::size_t vplus) {
    out.push_back({std::move(task), p, dim, vplus, unit, seed, max_group_order, "corner"});
  };
  for (auto [p, dim] : {std::pair{3, 2}, {5, 2}, {3, 4}}) add("svn", p, dim, 0);
  add("weil", 3, 2, 0);
  add("weil", 3, 4, 0);
  for (auto [p, dim, k] : {std::tuple{3, 2, 1}, {3, 4, 1}, {3, 4, 2}, {5, 2, 1}}) add("gerardin", p, dim, k);
  for (auto [p, dim, k] : {std::tuple{3, 2, 1}, {3, 4, 2}}) add("misprint", p, dim, k);
  for (auto [p, dim, k] : {std::tuple{3, 4, 1}, {3, 2, 1}}) add("fixedpoint", p, dim, k);
  for (int p : {11, 3, 5}) add("counterexample", p, 4, 2);
  for (int p : {3, 11}) add("sign", p, 4, 2);
  add("genericity", 3, 10, 0);
  return out;
}

}  // namespace weilheis
