#include "veltag/depth_sensor.hpp"

#include <algorithm>
#include <cmath>

namespace veltag {

std::array<double, 3> camera_coords(const KinectPose& k, const Vec2& floor_pos,
                                    double head_height) {
  const double th = deg_to_rad(k.tilt_deg);
  const double dx = floor_pos.x - k.floor.x;
  const double dz = floor_pos.z - k.floor.z;
  const double yw = head_height - k.height;  // head relative to camera, untilted frame
  // Inverse of the tilt rotation: projecting (x, y, z) back yields (dx, dz).
  return {dx, yw * std::cos(th) - dz * std::sin(th), yw * std::sin(th) + dz * std::cos(th)};
}

bool visible(const KinectPose& k, const Vec2& floor_pos, double head_height) {
  const auto [cx, cy, cz] = camera_coords(k, floor_pos, head_height);
  const double range = std::sqrt(cx * cx + cy * cy + cz * cz);
  if (range < kMinRange || range > kMaxRange) return false;
  if (cz <= 0.0) return false;
  return std::atan2(std::abs(cx), cz) <= deg_to_rad(kFovHalfDeg);
}

DepthSensorSim::DepthSensorSim(const Scenario& s, const DepthNoise& noise, std::uint64_t seed)
    : scenario_(s), noise_(noise), rng_(substream_seed(seed, "depth")),
      frame_count_(static_cast<long>(std::floor(s.duration * kFrameHz)) + 1) {}

SkeletonFrame DepthSensorSim::frame_at(long index) {
  SkeletonFrame frame;
  frame.t = static_cast<double>(index) / kFrameHz;
  const WorldState world = world_state_at(scenario_, std::min(frame.t, scenario_.duration));

  struct Candidate {
    int person_id;
    double range;
    std::array<double, 3> cam;
  };
  std::vector<Candidate> seen;
  for (const auto& p : scenario_.persons) {
    const auto& st = world.persons.at(p.id);
    if (!visible(scenario_.kinect, st.pos, p.head_height)) continue;
    auto cam = camera_coords(scenario_.kinect, st.pos, p.head_height);
    const double range = std::sqrt(cam[0] * cam[0] + cam[1] * cam[1] + cam[2] * cam[2]);
    seen.push_back({p.id, range, cam});
  }
  // six-body cap: nearest ranges win, then lowest person id
  std::sort(seen.begin(), seen.end(), [](const Candidate& a, const Candidate& b) {
    if (a.range != b.range) return a.range < b.range;
    return a.person_id < b.person_id;
  });
  if (seen.size() > kMaxBodies) seen.resize(kMaxBodies);

  std::map<int, int> now;
  for (const auto& c : seen) {
    auto it = active_.find(c.person_id);
    int sid;
    if (it != active_.end()) {
      sid = it->second;  // continuously visible: keep the id
    } else {
      sid = next_skeleton_id_++;
      truth_[sid] = c.person_id;
    }
    now[c.person_id] = sid;
    Body b;
    b.skeleton_id = sid;
    b.x = c.cam[0] + (noise_.head_sigma > 0 ? rng_.gaussian(0.0, noise_.head_sigma) : 0.0);
    b.y = c.cam[1] + (noise_.head_sigma > 0 ? rng_.gaussian(0.0, noise_.head_sigma) : 0.0);
    b.z = c.cam[2] + (noise_.head_sigma > 0 ? rng_.gaussian(0.0, noise_.head_sigma) : 0.0);
    frame.bodies.push_back(b);
  }
  active_ = std::move(now);
  return frame;
}

}  // namespace veltag
