#include "bkit/sim/defaults.hpp"

#include <cmath>

namespace bkit::sim {

namespace {

struct ScalarKey {
  std::string_view name;
  double Defaults::*field;
};

struct TickKey {
  std::string_view name;
  int Defaults::*field;
};

constexpr ScalarKey kScalarKeys[] = {
    {"dt", &Defaults::dt},
    {"v_max", &Defaults::v_max},
    {"omega_max", &Defaults::omega_max},
    {"field_half_length", &Defaults::field_half_length},
    {"field_half_width", &Defaults::field_half_width},
    {"goal_half_width", &Defaults::goal_half_width},
    {"reposition_threshold", &Defaults::reposition_threshold},
    {"dive_trigger_dist", &Defaults::dive_trigger_dist},
    {"arrive_dist_tol", &Defaults::arrive_dist_tol},
    {"arrive_angle_tol", &Defaults::arrive_angle_tol},
    {"obstacle_clearance", &Defaults::obstacle_clearance},
    {"obstacle_detour_offset", &Defaults::obstacle_detour_offset},
    {"at_foot_dist", &Defaults::at_foot_dist},
    {"at_foot_angle", &Defaults::at_foot_angle},
    {"approach_offset", &Defaults::approach_offset},
    {"kick_distance", &Defaults::kick_distance},
    {"head_scan_amplitude", &Defaults::head_scan_amplitude},
    {"head_scan_period", &Defaults::head_scan_period},
};

constexpr TickKey kTickKeys[] = {
    {"windup_ticks", &Defaults::windup_ticks},
    {"strike_ticks", &Defaults::strike_ticks},
    {"follow_ticks", &Defaults::follow_ticks},
};

struct PoseKey {
  std::string_view prefix;
  Pose2D Defaults::*field;
};

constexpr PoseKey kPoseKeys[] = {
    {"goalie_start", &Defaults::goalie_start},
    {"goalie_home", &Defaults::goalie_home},
    {"striker_start", &Defaults::striker_start},
};

} // namespace

bool apply_override(Defaults& defaults, std::string_view key, double value) {
  for (const auto& k : kScalarKeys)
    if (key == k.name) {
      defaults.*(k.field) = value;
      return true;
    }
  for (const auto& k : kTickKeys)
    if (key == k.name) {
      defaults.*(k.field) = static_cast<int>(std::llround(value));
      return true;
    }
  for (const auto& k : kPoseKeys) {
    if (key.size() > k.prefix.size() && key.substr(0, k.prefix.size()) == k.prefix) {
      const std::string_view suffix = key.substr(k.prefix.size());
      Pose2D& pose = defaults.*(k.field);
      if (suffix == "_x") { pose.x = value; return true; }
      if (suffix == "_y") { pose.y = value; return true; }
      if (suffix == "_theta") { pose.theta = value; return true; }
    }
  }
  return false;
}

const std::vector<std::string_view>& override_keys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> out;
    for (const auto& k : kScalarKeys) out.push_back(k.name);
    for (const auto& k : kTickKeys) out.push_back(k.name);
    static const std::vector<std::string> pose_names = [] {
      std::vector<std::string> names;
      for (const auto& k : kPoseKeys)
        for (const char* suffix : {"_x", "_y", "_theta"})
          names.push_back(std::string(k.prefix) + suffix);
      return names;
    }();
    for (const auto& n : pose_names) out.push_back(n);
    return out;
  }();
  return keys;
}

} // namespace bkit::sim
