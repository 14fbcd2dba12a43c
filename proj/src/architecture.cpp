#include "vcoffload/architecture.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vcoffload/util.hpp"

namespace vcoffload {

const char* tier_name(Tier tier) {
  switch (tier) {
    case Tier::Cloud: return "cloud";
    case Tier::Fog: return "fog";
    case Tier::Vc: return "vc";
  }
  throw std::logic_error("unknown tier");
}

namespace {

PathSpec default_path(Tier tier, int core_hops) {
  PathSpec p;
  switch (tier) {
    case Tier::Vc:
      p.hops = {{"access point", 1}, {"vehicle Wi-Fi", 1}};
      break;
    case Tier::Fog:
      p.hops = {{"ONU", 1}, {"OLT", 1}, {"aggregation switch", 1}};
      break;
    case Tier::Cloud:
      // Access/metro segment as for fog, then edge, metro-core transit, and
      // the cloud's own gateway devices.
      p.hops = {{"ONU", 1},         {"OLT", 1},          {"aggregation switch", 1},
                {"edge router", 1}, {"core router", core_hops}, {"transponder", core_hops},
                {"optical switch", core_hops}, {"cloud router", 1}, {"cloud switch", 1}};
      break;
  }
  return p;
}

NetworkPath resolve_path(const PathSpec& spec, Tier tier, int core_hops,
                         const std::vector<DeviceProfile>& catalog,
                         const std::vector<std::string>& shared) {
  const PathSpec& chosen = spec.hops.empty() ? default_path(tier, core_hops) : spec;
  NetworkPath path;
  for (const auto& [id, mult] : chosen.hops) {
    if (mult < 1)
      throw std::invalid_argument("path hop '" + id + "': multiplicity must be >= 1");
    if (std::find(shared.begin(), shared.end(), id) != shared.end())
      throw std::invalid_argument("device '" + id + "' is shared and cannot also sit on a path");
    const DeviceProfile& dev = require_profile(catalog, id);
    if (dev.kind != DeviceKind::Network)
      throw std::invalid_argument("path device '" + id + "' is not a network device");
    path.hops.push_back({dev, mult});
  }
  return path;
}

double capacity_or(double override_value, double fallback) {
  return override_value > 0.0 ? override_value : fallback;
}

void append_path_bytes(std::string& buf, const NetworkPath& path) {
  for (const auto& hop : path.hops) {
    buf += hop.device.id;
    buf += ':';
    buf += std::to_string(hop.multiplicity);
    buf += ':';
    buf += format_double(hop.device.capacity);
    buf += ':';
    buf += format_double(hop.device.max_power);
    buf += ';';
  }
}

}  // namespace

Architecture build_architecture(const ArchitectureConfig& config,
                                const std::vector<DeviceProfile>& catalog) {
  if (config.vehicles < 0) throw std::invalid_argument("vehicle count must be non-negative");
  if (config.fog_servers < 0) throw std::invalid_argument("fog server count must be non-negative");
  if (config.core_hops < 0) throw std::invalid_argument("core hop count must be non-negative");

  const DeviceProfile& obu = require_profile(catalog, "OBU processor");
  const DeviceProfile& fog = require_profile(catalog, "fog server");
  const DeviceProfile& server = require_profile(catalog, "conventional server");
  const DeviceProfile& wifi = require_profile(catalog, "vehicle Wi-Fi");

  Architecture arch;
  for (const std::string& id : config.shared_devices) {
    const DeviceProfile& dev = require_profile(catalog, id);
    if (dev.kind != DeviceKind::Network)
      throw std::invalid_argument("shared device '" + id +
                                  "' is not a network device; constant compute overhead goes in "
                                  "shared_constant_watts");
    arch.shared_devices.push_back(dev);
  }
  if (config.shared_constant_watts < 0.0)
    throw std::invalid_argument("shared_constant_watts must be non-negative");
  arch.shared_constant_watts = config.shared_constant_watts;

  NetworkPath vc_path =
      resolve_path(config.vc_path, Tier::Vc, config.core_hops, catalog, config.shared_devices);
  NetworkPath fog_path =
      resolve_path(config.fog_path, Tier::Fog, config.core_hops, catalog, config.shared_devices);
  NetworkPath cloud_path =
      resolve_path(config.cloud_path, Tier::Cloud, config.core_hops, catalog, config.shared_devices);

  const double vc_proc = capacity_or(config.vc_proc_capacity, obu.capacity);
  const double vc_link = capacity_or(config.vc_link_capacity, wifi.capacity);
  const double fog_proc = capacity_or(config.fog_proc_capacity, fog.capacity);
  const double cloud_proc = capacity_or(config.cloud_proc_capacity, kUnbounded);
  arch.vc_aggregate_link = capacity_or(config.vc_aggregate_link, kUnbounded);

  // Node order fixes variable order everywhere downstream: vehicles first,
  // then fog servers, then the single aggregate cloud. Lowest index wins
  // ties, which realizes the vc > fog > cloud placement priority.
  arch.nodes.reserve(static_cast<std::size_t>(config.vehicles + config.fog_servers + 1));
  for (int v = 0; v < config.vehicles; ++v) {
    ProcessingNode n;
    n.id = "vc" + std::to_string(v);
    n.tier = Tier::Vc;
    n.proc_capacity = vc_proc;
    n.proc_intensity = energy_intensity(obu).value;
    n.path = vc_path;
    n.link_capacity = vc_link;
    arch.nodes.push_back(std::move(n));
  }
  for (int f = 0; f < config.fog_servers; ++f) {
    ProcessingNode n;
    n.id = "fog" + std::to_string(f);
    n.tier = Tier::Fog;
    n.proc_capacity = fog_proc;
    n.proc_intensity = energy_intensity(fog).value;
    n.path = fog_path;
    n.link_capacity = kUnbounded;
    arch.nodes.push_back(std::move(n));
  }
  {
    ProcessingNode n;
    n.id = "cloud";
    n.tier = Tier::Cloud;
    n.proc_capacity = cloud_proc;
    n.proc_intensity = energy_intensity(server).value;
    n.path = cloud_path;
    n.link_capacity = kUnbounded;
    arch.nodes.push_back(std::move(n));
  }

  std::set<std::string> ids;
  for (const ProcessingNode& n : arch.nodes)
    if (!ids.insert(n.id).second)
      throw std::invalid_argument("duplicate node id '" + n.id + "'");

  bool has_unbounded = std::any_of(arch.nodes.begin(), arch.nodes.end(), [](const ProcessingNode& n) {
    return n.proc_capacity == kUnbounded;
  });
  if (!has_unbounded)
    throw std::invalid_argument("architecture needs one node with unbounded processing capacity");

  // Fingerprint covers every effective input, so identical configs collide
  // and any change to counts, capacities, paths, or shared devices shows up.
  std::string buf;
  for (const ProcessingNode& n : arch.nodes) {
    buf += n.id;
    buf += '|';
    buf += tier_name(n.tier);
    buf += '|';
    buf += format_double(n.proc_capacity);
    buf += '|';
    buf += format_double(n.proc_intensity);
    buf += '|';
    buf += format_double(n.link_capacity);
    buf += '|';
    append_path_bytes(buf, n.path);
    buf += '\n';
  }
  buf += "shared:";
  for (const DeviceProfile& d : arch.shared_devices) {
    buf += d.id;
    buf += ':';
    buf += format_double(d.capacity);
    buf += ':';
    buf += format_double(d.max_power);
    buf += ';';
  }
  buf += "vc_aggregate:";
  buf += format_double(arch.vc_aggregate_link);
  buf += "|shared_constant:";
  buf += format_double(arch.shared_constant_watts);
  arch.fingerprint = hex64(fnv1a64(buf));
  return arch;
}

double path_intensity(const ProcessingNode& node) {
  double sum = 0.0;
  for (const PathHop& hop : node.path.hops)
    sum += hop.multiplicity * energy_intensity(hop.device).value;
  return sum;
}

double shared_intensity(const Architecture& arch) {
  double sum = 0.0;
  for (const DeviceProfile& d : arch.shared_devices) sum += energy_intensity(d).value;
  return sum;
}

double shared_overhead(const Architecture& arch, const std::vector<Task>& tasks) {
  double traffic = 0.0;
  for (const Task& t : tasks) traffic += t.traffic_demand;
  return shared_intensity(arch) * traffic + arch.shared_constant_watts;
}

}  // namespace vcoffload
