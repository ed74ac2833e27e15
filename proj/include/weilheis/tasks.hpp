#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weilheis/report.hpp"
#include "weilheis/symplectic.hpp"

namespace weilheis {

/// One verification task with its parameters. Fields a task does not use are
/// ignored (genericity is a fixed instance, counterexample and sign only read
/// p and the unit).
struct TaskRequest {
  std::string task = "svn";
  int p = 3;
  /// dim V, even.
  std::size_t dim = 2;
  std::size_t vplus = 1;
  int unit = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_group_order = kDefaultGroupCap;
  std::string generic_element = "corner";
};

/// svn, weil, gerardin, misprint, fixedpoint, counterexample, sign, genericity.
const std::vector<std::string>& task_names();
bool is_task(const std::string& name);

/// Throws std::invalid_argument for an unknown task or bad parameters and
/// CapExceeded when a group is above the cap.
VerdictReport run_task(const TaskRequest& req);

/// The configurations behind every acceptance check, in a fixed order.
std::vector<TaskRequest> acceptance_requests(std::uint64_t seed = 0, int unit = 1,
                                             std::uint64_t max_group_order = kDefaultGroupCap);

}  // namespace weilheis
