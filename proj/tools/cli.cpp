#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "weilheis/fp.hpp"
#include "weilheis/tasks.hpp"

namespace weilheis::cli {

Json bundle_json(const std::vector<VerdictReport>& reports) {
  Json j;
  j["schema"] = kReportSchema;
  bool pass = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    list.push_back(to_json(r));
  }
  j["pass"] = pass;
  j["reports"] = std::move(list);
  return j;
}

std::string render_text(const std::vector<VerdictReport>& reports) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    os << weilheis::render_text(r) << "\n";
    passed += r.pass;
  }
  os << passed << "/" << reports.size() << " passed\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact finite-group checks for Heisenberg and Weil representations"};
  app.name("verify");
  TaskRequest req;
  std::string task = "all", format = "text", out_path;
  bool timing = false;
  app.add_option("--task", task, "svn | weil | gerardin | misprint | fixedpoint | counterexample | sign | genericity | all")
      ->capture_default_str();
  app.add_option("--p", req.p, "odd prime")->capture_default_str();
  app.add_option("--dim", req.dim, "dim V (even)")->capture_default_str();
  app.add_option("--vplus", req.vplus, "dim V+ for gerardin, misprint, fixedpoint")->capture_default_str();
  app.add_option("--cc-unit", req.unit, "central character a -> zeta_p^(unit a)")->capture_default_str();
  app.add_option("--seed", req.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--format", format, "json | text")->capture_default_str();
  app.add_option("--out", out_path, "write the reports here instead of stdout");
  app.add_option("--max-group-order", req.max_group_order, "refuse to enumerate larger groups")->capture_default_str();
  app.add_option("--generic-element", req.generic_element, "genericity functional: corner | scaled | zero")
      ->capture_default_str();
  app.add_flag("--timing", timing, "record wall-clock time in the reports (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "verify: " << e.what() << "\n";
    return kUsage;
  }

  if (task != "all" && !is_task(task)) {
    err << "verify: unknown task '" << task << "'\n";
    return kUsage;
  }
  if (format != "json" && format != "text") {
    err << "verify: unknown format '" << format << "', expected json or text\n";
    return kUsage;
  }
  if (req.p == 2 || !is_prime(req.p)) {
    err << "verify: p must be an odd prime, got " << req.p << "\n";
    return kUsage;
  }

  std::vector<TaskRequest> requests;
  if (task == "all") {
    requests = acceptance_requests(req.seed, req.unit, req.max_group_order);
  } else {
    req.task = task;
    requests.push_back(req);
  }

  std::vector<VerdictReport> reports;
  try {
    for (const auto& r : requests) {
      reports.push_back(run_task(r));
      if (!timing) reports.back().runtime_ms = 0;
    }
  } catch (const CapExceeded& e) {
    err << "verify: group too large: " << e.what() << " (raise --max-group-order)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "verify: invalid configuration: " << e.what() << "\n";
    return kUsage;
  }

  const std::string body = format == "json" ? bundle_json(reports).dump(2) + "\n" : render_text(reports);
  if (out_path.empty()) {
    out << body;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!(f << body)) {
      err << "verify: cannot write " << out_path << "\n";
      return kUsage;
    }
  }
  for (const auto& r : reports)
    if (!r.pass) return kMathFailure;
  return kPass;
}

}  // namespace weilheis::cli
