#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vcoffload {

enum class DeviceKind { Processing, Network };

const char* device_kind_name(DeviceKind kind);

/// One hardware element of the modeled network. The capacity unit follows the
/// kind: GHz for processing devices, Mb/s for network devices.
struct DeviceProfile {
  std::string id;
  DeviceKind kind = DeviceKind::Processing;
  double capacity = 0.0;   // GHz (processing) or Mb/s (network)
  double max_power = 0.0;  // watts at full load

  DeviceProfile() = default;
  DeviceProfile(std::string id, DeviceKind kind, double capacity, double max_power);
};

/// Slope of the load-proportional power model P = (P_max / C) * load.
/// Watts per GHz for processing devices, watts per Mb/s for network devices.
struct EnergyIntensity {
  double value = 0.0;
  DeviceKind kind = DeviceKind::Processing;
};

/// The 16-row builtin device catalog. The optical switch defaults to 63.2 W;
/// its datasheet is a small access switch, so the printed 63.2 kW is treated
/// as a typo (the raw value can be restored via a catalog override).
std::vector<DeviceProfile> builtin_catalog();

/// nullptr when no profile has the given id.
const DeviceProfile* find_profile(const std::vector<DeviceProfile>& catalog, std::string_view id);

/// Throwing variant of find_profile.
const DeviceProfile& require_profile(const std::vector<DeviceProfile>& catalog, std::string_view id);

EnergyIntensity energy_intensity(const DeviceProfile& profile);

/// 1 - candidate/baseline. Positive when the candidate is the more efficient
/// device, negative when it is worse. Throws if baseline is not positive.
double efficiency_gain(const EnergyIntensity& candidate, const EnergyIntensity& baseline);

}  // namespace vcoffload
