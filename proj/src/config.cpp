#include "vcoffload/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "vcoffload/util.hpp"

namespace vcoffload {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("config: " + where + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& known) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!known.count(it.key())) fail(where, "unknown key '" + it.key() + "'");
}

double get_number(const json& obj, const std::string& where, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) fail(where, std::string("'") + key + "' must be a number");
  return v.get<double>();
}

int get_int(const json& obj, const std::string& where, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail(where, std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

PathSpec parse_path(const json& arr, const std::string& where) {
  PathSpec spec;
  if (!arr.is_array()) fail(where, "must be an array of device ids or [id, multiplicity] pairs");
  for (const json& entry : arr) {
    if (entry.is_string()) {
      spec.hops.push_back({entry.get<std::string>(), 1});
    } else if (entry.is_array() && entry.size() == 2 && entry[0].is_string() &&
               entry[1].is_number_integer()) {
      spec.hops.push_back({entry[0].get<std::string>(), entry[1].get<int>()});
    } else {
      fail(where, "each entry must be \"device id\" or [\"device id\", multiplicity]");
    }
  }
  return spec;
}

void apply_catalog_overrides(std::vector<DeviceProfile>& catalog, const json& arr) {
  if (!arr.is_array()) fail("catalog-overrides", "must be an array");
  for (const json& entry : arr) {
    if (!entry.is_object()) fail("catalog-overrides", "each entry must be an object");
    reject_unknown_keys(entry, "catalog-overrides", {"id", "kind", "capacity", "max_power"});
    if (!entry.contains("id") || !entry.at("id").is_string())
      fail("catalog-overrides", "each entry needs a string 'id'");
    const std::string id = entry.at("id").get<std::string>();
    DeviceProfile* existing = nullptr;
    for (DeviceProfile& d : catalog)
      if (d.id == id) existing = &d;

    DeviceKind kind = existing ? existing->kind : DeviceKind::Network;
    if (entry.contains("kind")) {
      const std::string k = entry.at("kind").get<std::string>();
      if (k == "processing") kind = DeviceKind::Processing;
      else if (k == "network") kind = DeviceKind::Network;
      else fail("catalog-overrides", "kind must be 'processing' or 'network'");
    } else if (!existing) {
      fail("catalog-overrides", "new device '" + id + "' needs a 'kind'");
    }
    if (!existing && (!entry.contains("capacity") || !entry.contains("max_power")))
      fail("catalog-overrides", "new device '" + id + "' needs 'capacity' and 'max_power'");
    const double capacity =
        get_number(entry, "catalog-overrides", "capacity", existing ? existing->capacity : 0.0);
    const double max_power =
        get_number(entry, "catalog-overrides", "max_power", existing ? existing->max_power : 0.0);
    DeviceProfile replacement(id, kind, capacity, max_power);
    if (existing)
      *existing = replacement;
    else
      catalog.push_back(replacement);
  }
}

}  // namespace

RunConfig parse_config_text(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config: top level must be a JSON object");
  reject_unknown_keys(doc, "top level",
                      {"catalog-overrides", "architecture", "workload", "solver", "harness"});

  RunConfig cfg;
  if (doc.contains("catalog-overrides"))
    apply_catalog_overrides(cfg.catalog, doc.at("catalog-overrides"));

  if (doc.contains("architecture")) {
    const json& a = doc.at("architecture");
    if (!a.is_object()) fail("architecture", "must be an object");
    reject_unknown_keys(a, "architecture",
                        {"vehicles", "fog_servers", "core_hops", "vc_proc_capacity",
                         "vc_link_capacity", "fog_proc_capacity", "cloud_proc_capacity",
                         "vc_aggregate_link", "shared_constant_watts", "shared_devices",
                         "vc_path", "fog_path", "cloud_path"});
    ArchitectureConfig& arch = cfg.architecture;
    arch.vehicles = get_int(a, "architecture", "vehicles", arch.vehicles);
    arch.fog_servers = get_int(a, "architecture", "fog_servers", arch.fog_servers);
    arch.core_hops = get_int(a, "architecture", "core_hops", arch.core_hops);
    arch.vc_proc_capacity = get_number(a, "architecture", "vc_proc_capacity", arch.vc_proc_capacity);
    arch.vc_link_capacity = get_number(a, "architecture", "vc_link_capacity", arch.vc_link_capacity);
    arch.fog_proc_capacity =
        get_number(a, "architecture", "fog_proc_capacity", arch.fog_proc_capacity);
    arch.cloud_proc_capacity =
        get_number(a, "architecture", "cloud_proc_capacity", arch.cloud_proc_capacity);
    arch.vc_aggregate_link =
        get_number(a, "architecture", "vc_aggregate_link", arch.vc_aggregate_link);
    arch.shared_constant_watts =
        get_number(a, "architecture", "shared_constant_watts", arch.shared_constant_watts);
    if (a.contains("shared_devices")) {
      if (!a.at("shared_devices").is_array()) fail("architecture", "shared_devices must be an array");
      arch.shared_devices.clear();
      for (const json& v : a.at("shared_devices")) {
        if (!v.is_string()) fail("architecture", "shared_devices entries must be strings");
        arch.shared_devices.push_back(v.get<std::string>());
      }
    }
    if (a.contains("vc_path")) arch.vc_path = parse_path(a.at("vc_path"), "architecture.vc_path");
    if (a.contains("fog_path")) arch.fog_path = parse_path(a.at("fog_path"), "architecture.fog_path");
    if (a.contains("cloud_path"))
      arch.cloud_path = parse_path(a.at("cloud_path"), "architecture.cloud_path");
  }

  if (doc.contains("workload")) {
    const json& w = doc.at("workload");
    if (!w.is_object()) fail("workload", "must be an object");
    reject_unknown_keys(w, "workload",
                        {"count", "proc_mean", "proc_sd", "traffic_mean", "traffic_sd"});
    cfg.workload.count = get_int(w, "workload", "count", cfg.workload.count);
    cfg.workload.proc_mean = get_number(w, "workload", "proc_mean", cfg.workload.proc_mean);
    cfg.workload.proc_sd = get_number(w, "workload", "proc_sd", cfg.workload.proc_sd);
    cfg.workload.traffic_mean = get_number(w, "workload", "traffic_mean", cfg.workload.traffic_mean);
    cfg.workload.traffic_sd = get_number(w, "workload", "traffic_sd", cfg.workload.traffic_sd);
  }

  if (doc.contains("solver")) {
    const json& s = doc.at("solver");
    if (!s.is_object()) fail("solver", "must be an object");
    reject_unknown_keys(s, "solver",
                        {"feasibility_tol", "integrality_tol", "gap_tol", "max_iterations",
                         "max_nodes"});
    cfg.solver.feasibility_tol =
        get_number(s, "solver", "feasibility_tol", cfg.solver.feasibility_tol);
    cfg.solver.integrality_tol =
        get_number(s, "solver", "integrality_tol", cfg.solver.integrality_tol);
    cfg.solver.gap_tol = get_number(s, "solver", "gap_tol", cfg.solver.gap_tol);
    cfg.solver.max_iterations = static_cast<long>(
        get_number(s, "solver", "max_iterations", static_cast<double>(cfg.solver.max_iterations)));
    cfg.solver.max_nodes = static_cast<long>(
        get_number(s, "solver", "max_nodes", static_cast<double>(cfg.solver.max_nodes)));
  }

  if (doc.contains("harness")) {
    const json& h = doc.at("harness");
    if (!h.is_object()) fail("harness", "must be an object");
    reject_unknown_keys(h, "harness", {"replications", "seed", "strategies"});
    cfg.replications = get_int(h, "harness", "replications", cfg.replications);
    if (h.contains("seed")) {
      if (!h.at("seed").is_number_integer()) fail("harness", "'seed' must be an integer");
      cfg.seed = h.at("seed").get<std::uint64_t>();
    }
    if (h.contains("strategies")) {
      if (!h.at("strategies").is_array()) fail("harness", "strategies must be an array");
      cfg.strategies.clear();
      for (const json& v : h.at("strategies")) {
        if (!v.is_string()) fail("harness", "strategies entries must be strings");
        cfg.strategies.push_back(parse_strategy(v.get<std::string>()));
      }
      if (cfg.strategies.empty()) fail("harness", "strategies must not be empty");
    }
  }
  if (cfg.replications < 1) fail("harness", "replications must be >= 1");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string canonical_config_json(const RunConfig& config) {
  json doc;
  json catalog = json::array();
  for (const DeviceProfile& d : config.catalog)
    catalog.push_back({{"id", d.id},
                       {"kind", device_kind_name(d.kind)},
                       {"capacity", d.capacity},
                       {"max_power", d.max_power}});
  doc["catalog"] = catalog;

  const ArchitectureConfig& a = config.architecture;
  auto path_json = [](const PathSpec& p) {
    json arr = json::array();
    for (const auto& [id, mult] : p.hops) arr.push_back({id, mult});
    return arr;
  };
  doc["architecture"] = {{"vehicles", a.vehicles},
                         {"fog_servers", a.fog_servers},
                         {"core_hops", a.core_hops},
                         {"vc_proc_capacity", a.vc_proc_capacity},
                         {"vc_link_capacity", a.vc_link_capacity},
                         {"fog_proc_capacity", a.fog_proc_capacity},
                         {"cloud_proc_capacity", a.cloud_proc_capacity},
                         {"vc_aggregate_link", a.vc_aggregate_link},
                         {"shared_constant_watts", a.shared_constant_watts},
                         {"shared_devices", a.shared_devices},
                         {"vc_path", path_json(a.vc_path)},
                         {"fog_path", path_json(a.fog_path)},
                         {"cloud_path", path_json(a.cloud_path)}};
  doc["workload"] = {{"count", config.workload.count},
                     {"proc_mean", config.workload.proc_mean},
                     {"proc_sd", config.workload.proc_sd},
                     {"traffic_mean", config.workload.traffic_mean},
                     {"traffic_sd", config.workload.traffic_sd}};
  doc["solver"] = {{"feasibility_tol", config.solver.feasibility_tol},
                   {"integrality_tol", config.solver.integrality_tol},
                   {"gap_tol", config.solver.gap_tol},
                   {"max_iterations", config.solver.max_iterations},
                   {"max_nodes", config.solver.max_nodes}};
  json strategies = json::array();
  for (Strategy s : config.strategies) strategies.push_back(strategy_name(s));
  doc["harness"] = {{"replications", config.replications},
                    {"seed", config.seed},
                    {"strategies", strategies}};
  return doc.dump(2);
}

std::string config_fingerprint(const RunConfig& config) {
  return hex64(fnv1a64(canonical_config_json(config)));
}

Architecture architecture_from(const RunConfig& config) {
  return build_architecture(config.architecture, config.catalog);
}

}  // namespace vcoffload
