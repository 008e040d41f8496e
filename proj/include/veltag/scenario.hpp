#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "veltag/geometry.hpp"

namespace veltag {

// Thrown by scenario loading/validation; `field` names the offending entry.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string& msg)
      : std::runtime_error(field + ": " + msg), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct RoomExtent {
  double x_min = -2.0, x_max = 2.0;
  double z_min = 0.0, z_max = 4.0;
  bool contains(const Vec2& p) const {
    return p.x >= x_min && p.x <= x_max && p.z >= z_min && p.z <= z_max;
  }
};

struct KinectPose {
  Vec2 floor{0.0, 0.0};     // (x, z) of the camera on the floor plane
  double height = 2.0;      // mounting height, m
  double tilt_deg = 10.0;   // downward tilt, [0, 90)
};

struct Antenna {
  int id = 0;
  Vec2 pos;  // (x, z) in the tag-height plane
};

struct Waypoint {
  double t = 0.0;
  Vec2 pos;
};

struct Person {
  int id = 0;
  double head_height = 1.7;  // m
  std::vector<Waypoint> path;
};

struct Tag {
  int id = 0;
  std::optional<int> person_id;   // worn by this person, or ...
  std::optional<Vec2> fixed_pos;  // ... placed at a fixed spot
};

// Interval during which a tag returns no reads (RF outage).
struct TagOutage {
  int tag_id = 0;
  double from = 0.0;
  double to = 0.0;
};

struct Scenario {
  RoomExtent room;
  KinectPose kinect;
  std::vector<Antenna> antennas;
  std::vector<Person> persons;
  std::vector<Tag> tags;
  std::vector<TagOutage> outages;
  double duration = 60.0;
  std::uint64_t rng_seed = 1;
  std::optional<int> target_tag;

  const Person* find_person(int id) const;
  const Tag* find_tag(int id) const;
};

struct PersonState {
  Vec2 pos;
  Vec2 vel;
};

struct WorldState {
  double t = 0.0;
  std::map<int, PersonState> persons;  // person_id -> state
};

Scenario load_scenario(const std::string& path);
Scenario scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const Scenario& s);
void validate_scenario(const Scenario& s);

// Ground-truth positions/velocities at time t (piecewise-linear waypoints;
// stationary before the first and after the last waypoint).
WorldState world_state_at(const Scenario& s, double t);
PersonState person_state_at(const Person& p, double t);

// Signed range rate toward a reference point: positive when closing.
double true_radial_velocity(const Vec2& pos, const Vec2& vel, const Vec2& antenna_pos);

// Where the tag sits at the given world state (wearer position or fixed spot).
Vec2 tag_position_at(const Scenario& s, const Tag& tag, const WorldState& world);

}  // namespace veltag
