#include "vcoffload/catalog.hpp"

#include <stdexcept>

namespace vcoffload {

const char* device_kind_name(DeviceKind kind) {
  return kind == DeviceKind::Processing ? "processing" : "network";
}

DeviceProfile::DeviceProfile(std::string id_, DeviceKind kind_, double capacity_, double max_power_)
    : id(std::move(id_)), kind(kind_), capacity(capacity_), max_power(max_power_) {
  if (id.empty()) {
    throw std::invalid_argument("device profile: empty id");
  }
  if (!(capacity > 0.0)) {
    throw std::invalid_argument("device profile '" + id + "': capacity must be > 0");
  }
  if (!(max_power >= 0.0)) {
    throw std::invalid_argument("device profile '" + id + "': max_power must be >= 0");
  }
}

std::vector<DeviceProfile> builtin_catalog() {
  using K = DeviceKind;
  // Capacities in GHz (processing) or Mb/s (network).
  return {
      {"conventional server", K::Processing, 4.0, 300.0},     // HP ProLiant class
      {"cloud switch", K::Network, 320000.0, 3800.0},         // Cisco 6509
      {"cloud router", K::Network, 660000.0, 5100.0},         // Juniper MX-960
      {"core router", K::Network, 12800000.0, 13900.0},       // Cisco CRS 16-slot
      {"optical switch", K::Network, 100000.0, 63.2},         // Cisco SG220-50P; see builtin_catalog() note
      {"transponder", K::Network, 10000.0, 50.0},             // Cisco ONS 15454
      {"edge router", K::Network, 200000.0, 4200.0},          // Cisco 12816
      {"aggregation switch", K::Network, 160000.0, 3800.0},   // Cisco 6880
      {"OLT", K::Network, 320000.0, 400.0},                   // Tellabs 1134
      {"ONU", K::Network, 2488.0, 5.0},                       // Tellabs ONT140C
      {"access point", K::Network, 1750.0, 7.42},             // Extreme 3825i/e
      {"RSU", K::Network, 27.0, 7.0},                         // Savari SW-1000
      {"low-end computer", K::Processing, 1.6, 18.0},         // Intel Atom; unused by default
      {"OBU processor", K::Processing, 1.0, 7.0},             // AMOS-825
      {"vehicle Wi-Fi", K::Network, 54.0, 0.207},             // TI CC3000
      {"fog server", K::Processing, 2.66, 95.0},              // Intel Core2-Q9400
  };
}

const DeviceProfile* find_profile(const std::vector<DeviceProfile>& catalog, std::string_view id) {
  for (const auto& profile : catalog) {
    if (profile.id == id) {
      return &profile;
    }
  }
  return nullptr;
}

const DeviceProfile& require_profile(const std::vector<DeviceProfile>& catalog, std::string_view id) {
  const DeviceProfile* profile = find_profile(catalog, id);
  if (profile == nullptr) {
    throw std::invalid_argument("unknown device id '" + std::string(id) + "'");
  }
  return *profile;
}

EnergyIntensity energy_intensity(const DeviceProfile& profile) {
  return EnergyIntensity{profile.max_power / profile.capacity, profile.kind};
}

double efficiency_gain(const EnergyIntensity& candidate, const EnergyIntensity& baseline) {
  if (!(baseline.value > 0.0)) {
    throw std::invalid_argument("efficiency_gain: baseline intensity must be > 0");
  }
  return 1.0 - candidate.value / baseline.value;
}

}  // namespace vcoffload
