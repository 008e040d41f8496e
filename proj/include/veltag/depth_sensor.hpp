#pragma once

#include <array>
#include <map>
#include <vector>

#include "veltag/rng.hpp"
#include "veltag/scenario.hpp"

namespace veltag {

struct Body {
  int skeleton_id = 0;
  double x = 0.0, y = 0.0, z = 0.0;  // head joint, camera space
};

struct SkeletonFrame {
  double t = 0.0;
  std::vector<Body> bodies;  // at most 6
};

struct DepthNoise {
  double head_sigma = 0.05;  // per-axis Gaussian on the head joint, m
};

inline constexpr int kMaxBodies = 6;
inline constexpr double kMinRange = 0.5;   // m
inline constexpr double kMaxRange = 4.5;   // m
inline constexpr double kFovHalfDeg = 35;  // horizontal half-angle

// Camera-space head coordinates for a head at the given floor position.
// Constructed as the inverse of the floor-plane projection, so projecting
// a noiseless sample recovers the floor position exactly.
std::array<double, 3> camera_coords(const KinectPose& k, const Vec2& floor_pos,
                                    double head_height);

// Range window plus horizontal FOV cone test.
bool visible(const KinectPose& k, const Vec2& floor_pos, double head_height);

// Streams SkeletonFrames at 30 Hz from ground truth. Skeleton IDs persist
// while a person stays continuously visible; a re-entering person gets a
// fresh ID. At most six bodies per frame (nearest ranges win).
class DepthSensorSim {
 public:
  DepthSensorSim(const Scenario& s, const DepthNoise& noise, std::uint64_t seed);

  // Frame at t = index / 30. Frames must be requested in order.
  SkeletonFrame frame_at(long index);

  long frame_count() const { return frame_count_; }

  // skeleton_id -> person_id, for metrics only (not visible to the trackers).
  const std::map<int, int>& skeleton_truth() const { return truth_; }

 private:
  const Scenario& scenario_;
  DepthNoise noise_;
  RandomStream rng_;
  long frame_count_ = 0;
  int next_skeleton_id_ = 1;
  std::map<int, int> active_;  // person_id -> skeleton_id while visible
  std::map<int, int> truth_;
};

}  // namespace veltag
