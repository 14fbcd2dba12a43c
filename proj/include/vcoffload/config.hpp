#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcoffload/architecture.hpp"
#include "vcoffload/catalog.hpp"
#include "vcoffload/milp.hpp"
#include "vcoffload/strategies.hpp"
#include "vcoffload/workload.hpp"

namespace vcoffload {

/// One scenario document: device catalog (builtin plus overrides),
/// architecture shape, workload distribution, solver tolerances, and harness
/// settings.
struct RunConfig {
  std::vector<DeviceProfile> catalog = builtin_catalog();
  ArchitectureConfig architecture;
  DemandSpec workload;  // its seed field is ignored; the master seed below rules
  SolverOptions solver;
  int replications = 5;
  std::uint64_t seed = 1;
  std::vector<Strategy> strategies = all_strategies();
};

/// Parse the JSON scenario document. Unknown keys are rejected so typos
/// surface instead of silently reverting to defaults.
RunConfig parse_config_text(const std::string& json_text);

RunConfig load_config(const std::string& path);

/// Canonical JSON rendering of every effective field, keys sorted; two
/// configs agree iff their canonical texts agree.
std::string canonical_config_json(const RunConfig& config);

/// FNV-1a 64 hash of the canonical JSON, as 16 hex digits.
std::string config_fingerprint(const RunConfig& config);

Architecture architecture_from(const RunConfig& config);

}  // namespace vcoffload
