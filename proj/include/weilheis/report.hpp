#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace weilheis {

using Json = nlohmann::ordered_json;

/// Outcome of one verification task. Field order in the JSON form is fixed,
/// so equal reports serialize to equal bytes.
struct VerdictReport {
  std::string task;
  /// The identity or statement that was checked, in words.
  std::string claim;
  /// "paper regime" or "finite-level analogue" where that distinction applies.
  std::string regime;
  Json config = Json::object();
  bool pass = false;
  Json dims = Json::object();
  Json witnesses = Json::array();
  std::vector<std::string> notes;
  double runtime_ms = 0;
};

inline constexpr int kReportSchema = 1;

Json to_json(const VerdictReport& r);
VerdictReport from_json(const Json& j);
std::string render_text(const VerdictReport& r);

/// Wall-clock helper for runtime_ms.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace weilheis
