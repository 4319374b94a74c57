#pragma once

#include <string_view>
#include <vector>

#include "bkit/geometry.hpp"

namespace bkit::sim {

/// Tunable constants of the toy soccer world and of the two demo scenarios.
///
/// None of these are intrinsic to the control engines; they exist so the
/// scripted scenarios exercise every transition, and every scalar can be
/// overridden per scenario (key = value header lines) or globally through the
/// BEHAVIOR_KIT_DEFAULTS file. Keys are listed by override_keys().
struct Defaults {
  double dt = 0.1;          // seconds per tick
  double v_max = 2.0;       // walk speed, m/s
  double omega_max = 3.15;  // turn rate, rad/s

  double field_half_length = 4.5;
  double field_half_width = 3.0;
  double goal_half_width = 1.3;

  // goalie scenario
  Pose2D goalie_start{-3.0, -1.5, 0.0};
  Pose2D goalie_home{-4.0, 0.0, 0.0};
  double reposition_threshold = 0.8;  // |ball_y - robot_y| that warrants repositioning
  double dive_trigger_dist = 1.0;     // ball closer than this means the goal is threatened
  double arrive_dist_tol = 0.05;
  double arrive_angle_tol = 0.1;
  double obstacle_clearance = 0.5;      // path blocked when an obstacle is this close
  double obstacle_detour_offset = 1.0;  // sideways offset of the inserted waypoint

  // walk-and-kick scenario
  Pose2D striker_start{0.0, 0.0, 0.0};
  double at_foot_dist = 0.25;   // ball directly in front of a foot: distance bound
  double at_foot_angle = 0.6;   // and bearing bound, rad
  double approach_offset = 0.2; // stand this far behind the ball
  double kick_distance = 2.0;   // ball displacement per kick, m
  int windup_ticks = 2;
  int strike_ticks = 1;
  int follow_ticks = 2;
  double head_scan_amplitude = 1.0; // rad
  double head_scan_period = 20.0;   // ticks per sweep
};

/// Sets the named constant; returns false when the key is unknown.
bool apply_override(Defaults& defaults, std::string_view key, double value);

/// All recognized override keys, in documentation order.
const std::vector<std::string_view>& override_keys();

} // namespace bkit::sim
