#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vcoffload/catalog.hpp"
#include "vcoffload/workload.hpp"

namespace vcoffload {

enum class Tier { Cloud, Fog, Vc };

const char* tier_name(Tier tier);

/// One hop of a network path: a device and how many times traffic crosses it.
struct PathHop {
  DeviceProfile device;
  int multiplicity = 1;
};

/// Ordered chain of network devices a task's traffic traverses to reach a
/// processing node. Shared devices (RSU by default) are never part of a
/// chain; their cost is a scenario-level constant.
struct NetworkPath {
  std::vector<PathHop> hops;
};

struct ProcessingNode {
  std::string id;
  Tier tier = Tier::Cloud;
  double proc_capacity = 0.0;   // GHz; kUnbounded for the cloud
  double proc_intensity = 0.0;  // W/GHz
  NetworkPath path;
  double link_capacity = 0.0;   // Mb/s; kUnbounded for wired tiers
};

struct Architecture {
  std::vector<ProcessingNode> nodes;  // vc first, then fog, then cloud
  std::vector<DeviceProfile> shared_devices;
  double vc_aggregate_link = 0.0;     // Mb/s across all vc nodes; kUnbounded when off
  double shared_constant_watts = 0.0; // strategy-independent adder (e.g. RSU control compute)
  std::string fingerprint;            // hash of every effective input
};

/// A path as device-id references, resolved against the catalog at build
/// time. Empty means "use the tier default".
struct PathSpec {
  std::vector<std::pair<std::string, int>> hops;  // (device id, multiplicity)
};

struct ArchitectureConfig {
  int vehicles = 20;
  int fog_servers = 15;
  int core_hops = 2;  // multiplicity of [core router, transponder, optical switch] on the cloud path

  // Capacities; <= 0 means "take the tier default".
  double vc_proc_capacity = -1.0;     // default: OBU profile capacity (1 GHz)
  double vc_link_capacity = -1.0;     // default: vehicle Wi-Fi rate (54 Mb/s)
  double fog_proc_capacity = -1.0;    // default: fog server profile capacity (2.66 GHz)
  double cloud_proc_capacity = -1.0;  // default: unbounded

  // Shared wireless backhaul across the whole vc tier (the access point's
  // aggregate rate). Off by default: per-vehicle links bind first at the
  // default scale. <= 0 disables.
  double vc_aggregate_link = -1.0;

  // Constant watts added to the shared overhead regardless of assignment,
  // e.g. a control computer at the roadside unit.
  double shared_constant_watts = 0.0;

  std::vector<std::string> shared_devices = {"RSU"};
  PathSpec vc_path, fog_path, cloud_path;
};

Architecture build_architecture(const ArchitectureConfig& config,
                                const std::vector<DeviceProfile>& catalog = builtin_catalog());

/// Total network energy intensity of the node's chain, W per Mb/s.
double path_intensity(const ProcessingNode& node);

/// Combined energy intensity of the shared devices, W per Mb/s.
double shared_intensity(const Architecture& arch);

/// Power of the shared devices: intensity × total task traffic, identical
/// for every assignment strategy.
double shared_overhead(const Architecture& arch, const std::vector<Task>& tasks);

}  // namespace vcoffload
