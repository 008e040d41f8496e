#pragma once

#include <span>
#include <vector>

#include "veltag/depth_sensor.hpp"
#include "veltag/scenario.hpp"

namespace veltag {

struct FloorPosition {
  int skeleton_id = 0;
  double t = 0.0;
  Vec2 pos;  // world floor coordinates
};

struct PersonVelocitySample {
  int skeleton_id = 0;
  long bin = 0;
  int antenna_id = 0;
  double v = 0.0;  // signed m/s, positive toward the antenna
};

// Tilt-rotation projection of a camera-space head joint onto the floor plane:
// x' = x, z' = -y sin(theta) + z cos(theta).
Vec2 project_head(double x, double y, double z, double tilt_deg);

// First-vs-last range rate over a bin: (D_first - D_last) / (t_last - t_first).
// Requires >= 2 positions; throws on coincident timestamps.
double radial_velocity(std::span<const FloorPosition> track, const Vec2& antenna_pos);

struct TrackResult {
  std::vector<FloorPosition> positions;        // every projected head, in time order
  std::vector<PersonVelocitySample> samples;   // one per (skeleton, antenna, bin)
};

// Projects every frame to floor coordinates and emits per-antenna radial
// velocities on the shared 400 ms grid. Skeletons with fewer than two frames
// in a bin yield no sample for that bin.
TrackResult bin_person_velocities(const std::vector<SkeletonFrame>& frames,
                                  const KinectPose& kinect,
                                  const std::vector<Antenna>& antennas);

}  // namespace veltag
