#include "weilheis/report.hpp"

#include <sstream>

namespace weilheis {

Json to_json(const VerdictReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["task"] = r.task;
  j["claim"] = r.claim;
  if (!r.regime.empty()) j["regime"] = r.regime;
  j["config"] = r.config;
  j["pass"] = r.pass;
  j["dims"] = r.dims;
  j["witnesses"] = r.witnesses;
  j["notes"] = r.notes;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

VerdictReport from_json(const Json& j) {
  if (j.at("schema").get<int>() != kReportSchema) throw std::invalid_argument("unsupported report schema");
  VerdictReport r;
  r.task = j.at("task").get<std::string>();
  r.claim = j.at("claim").get<std::string>();
  r.regime = j.value("regime", std::string());
  r.config = j.at("config");
  r.pass = j.at("pass").get<bool>();
  r.dims = j.at("dims");
  r.witnesses = j.at("witnesses");
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.runtime_ms = j.at("runtime_ms").get<double>();
  return r;
}

std::string render_text(const VerdictReport& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << "  " << r.task;
  if (!r.regime.empty()) out << " [" << r.regime << "]";
  out << "\n  checked: " << r.claim << "\n  config:  " << r.config.dump() << "\n";
  for (const auto& [k, v] : r.dims.items()) out << "  " << k << " = " << v.dump() << "\n";
  for (const auto& w : r.witnesses) out << "  witness: " << w.dump() << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  if (r.runtime_ms > 0) out << "  time: " << static_cast<long long>(r.runtime_ms) << " ms\n";
  return out.str();
}

}  // namespace weilheis
