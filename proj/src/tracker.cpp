#include "veltag/tracker.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace veltag {

Vec2 project_head(double x, double y, double z, double tilt_deg) {
  const double th = deg_to_rad(tilt_deg);
  return {x, -y * std::sin(th) + z * std::cos(th)};
}

double radial_velocity(std::span<const FloorPosition> track, const Vec2& antenna_pos) {
  if (track.size() < 2)
    throw std::invalid_argument("radial_velocity: need at least 2 positions");
  const auto& first = track.front();
  const auto& last = track.back();
  const double dt = last.t - first.t;
  if (dt <= 0.0) throw std::invalid_argument("radial_velocity: coincident timestamps");
  const double d_first = (first.pos - antenna_pos).norm();
  const double d_last = (last.pos - antenna_pos).norm();
  return (d_first - d_last) / dt;  // positive when the range shrinks
}

TrackResult bin_person_velocities(const std::vector<SkeletonFrame>& frames,
                                  const KinectPose& kinect,
                                  const std::vector<Antenna>& antennas) {
  TrackResult out;
  // bin -> skeleton -> positions within that bin, in frame order
  std::map<long, std::map<int, std::vector<FloorPosition>>> bins;
  for (std::size_t fi = 0; fi < frames.size(); ++fi) {
    const auto& f = frames[fi];
    // frame index is exact; derive the bin from it to avoid boundary jitter
    const long bin = static_cast<long>(fi) / kFramesPerBin;
    for (const auto& b : f.bodies) {
      const Vec2 rel = project_head(b.x, b.y, b.z, kinect.tilt_deg);
      FloorPosition fp{b.skeleton_id, f.t, {rel.x + kinect.floor.x, rel.z + kinect.floor.z}};
      out.positions.push_back(fp);
      bins[bin][b.skeleton_id].push_back(fp);
    }
  }
  for (const auto& [bin, per_skel] : bins) {
    for (const auto& [sid, track] : per_skel) {
      if (track.size() < 2) continue;  // no sample for this (person, bin)
      for (const auto& ant : antennas) {
        out.samples.push_back({sid, bin, ant.id, radial_velocity(track, ant.pos)});
      }
    }
  }
  return out;
}

}  // namespace veltag
