#include "veltag/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace veltag {

using nlohmann::json;

const Person* Scenario::find_person(int id) const {
  for (const auto& p : persons)
    if (p.id == id) return &p;
  return nullptr;
}

const Tag* Scenario::find_tag(int id) const {
  for (const auto& t : tags)
    if (t.id == id) return &t;
  return nullptr;
}

namespace {

Vec2 vec2_from(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2)
    throw ScenarioError(field, "expected [x, z]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Scenario scenario_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioError("document", std::string("parse error: ") + e.what());
  }

  Scenario s;
  try {
    if (j.contains("room")) {
      const auto& r = j.at("room");
      s.room.x_min = r.at("x_min").get<double>();
      s.room.x_max = r.at("x_max").get<double>();
      s.room.z_min = r.at("z_min").get<double>();
      s.room.z_max = r.at("z_max").get<double>();
    }
    if (j.contains("kinect")) {
      const auto& k = j.at("kinect");
      if (k.contains("position")) {
        const auto& p = k.at("position");
        if (!p.is_array() || p.size() != 3)
          throw ScenarioError("kinect.position", "expected [x, y, z]");
        s.kinect.floor = {p[0].get<double>(), p[2].get<double>()};
        s.kinect.height = p[1].get<double>();
      }
      s.kinect.tilt_deg = k.value("tilt_deg", 10.0);
    }
    for (const auto& a : j.value("antennas", json::array())) {
      Antenna ant;
      ant.id = a.at("id").get<int>();
      ant.pos = vec2_from(a.at("position"), "antennas.position");
      s.antennas.push_back(ant);
    }
    for (const auto& p : j.value("persons", json::array())) {
      Person per;
      per.id = p.at("id").get<int>();
      per.head_height = p.value("head_height", 1.7);
      for (const auto& w : p.at("waypoints")) {
        if (!w.is_array() || w.size() != 3)
          throw ScenarioError("persons.waypoints", "expected [t, x, z]");
        per.path.push_back({w[0].get<double>(), {w[1].get<double>(), w[2].get<double>()}});
      }
      s.persons.push_back(per);
    }
    for (const auto& t : j.value("tags", json::array())) {
      Tag tag;
      tag.id = t.at("id").get<int>();
      if (t.contains("person")) tag.person_id = t.at("person").get<int>();
      if (t.contains("position")) tag.fixed_pos = vec2_from(t.at("position"), "tags.position");
      s.tags.push_back(tag);
    }
    for (const auto& o : j.value("tag_outages", json::array())) {
      s.outages.push_back({o.at("tag").get<int>(), o.at("from").get<double>(),
                           o.at("to").get<double>()});
    }
    s.duration = j.value("duration", 60.0);
    s.rng_seed = j.value("seed", std::uint64_t{1});
    if (j.contains("target_tag")) s.target_tag = j.at("target_tag").get<int>();
  } catch (const json::exception& e) {
    throw ScenarioError("document", std::string("bad field: ") + e.what());
  }

  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("path", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return scenario_from_json_text(ss.str());
}

std::string scenario_to_json_text(const Scenario& s) {
  json j;
  j["room"] = {{"x_min", s.room.x_min}, {"x_max", s.room.x_max},
               {"z_min", s.room.z_min}, {"z_max", s.room.z_max}};
  j["kinect"] = {{"position", {s.kinect.floor.x, s.kinect.height, s.kinect.floor.z}},
                 {"tilt_deg", s.kinect.tilt_deg}};
  j["antennas"] = json::array();
  for (const auto& a : s.antennas)
    j["antennas"].push_back({{"id", a.id}, {"position", {a.pos.x, a.pos.z}}});
  j["persons"] = json::array();
  for (const auto& p : s.persons) {
    json wp = json::array();
    for (const auto& w : p.path) wp.push_back({w.t, w.pos.x, w.pos.z});
    j["persons"].push_back({{"id", p.id}, {"head_height", p.head_height}, {"waypoints", wp}});
  }
  j["tags"] = json::array();
  for (const auto& t : s.tags) {
    json jt = {{"id", t.id}};
    if (t.person_id) jt["person"] = *t.person_id;
    if (t.fixed_pos) jt["position"] = {t.fixed_pos->x, t.fixed_pos->z};
    j["tags"].push_back(jt);
  }
  if (!s.outages.empty()) {
    j["tag_outages"] = json::array();
    for (const auto& o : s.outages)
      j["tag_outages"].push_back({{"tag", o.tag_id}, {"from", o.from}, {"to", o.to}});
  }
  j["duration"] = s.duration;
  j["seed"] = s.rng_seed;
  if (s.target_tag) j["target_tag"] = *s.target_tag;
  return j.dump(2) + "\n";
}

void validate_scenario(const Scenario& s) {
  if (s.room.x_min >= s.room.x_max || s.room.z_min >= s.room.z_max)
    throw ScenarioError("room", "empty extent");
  if (s.kinect.tilt_deg < 0.0 || s.kinect.tilt_deg >= 90.0)
    throw ScenarioError("kinect.tilt_deg", "must be in [0, 90)");
  if (s.antennas.empty()) throw ScenarioError("antennas", "at least one antenna required");
  {
    std::vector<int> ids;
    for (const auto& a : s.antennas) ids.push_back(a.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
      throw ScenarioError("antennas.id", "duplicate antenna id");
  }
  if (s.duration <= 0.0) throw ScenarioError("duration", "must be positive");

  std::vector<int> pids;
  for (const auto& p : s.persons) {
    const std::string where = "persons[" + std::to_string(p.id) + "]";
    pids.push_back(p.id);
    if (p.path.empty()) throw ScenarioError(where + ".waypoints", "empty path");
    for (std::size_t i = 0; i < p.path.size(); ++i) {
      if (i > 0 && p.path[i].t <= p.path[i - 1].t)
        throw ScenarioError(where + ".waypoints", "times must be strictly increasing");
      if (!s.room.contains(p.path[i].pos))
        throw ScenarioError(where + ".waypoints", "waypoint outside room extent");
    }
    if (p.head_height <= 0.0) throw ScenarioError(where + ".head_height", "must be positive");
  }
  std::sort(pids.begin(), pids.end());
  if (std::adjacent_find(pids.begin(), pids.end()) != pids.end())
    throw ScenarioError("persons.id", "duplicate person id");

  std::vector<int> tids;
  std::vector<int> worn;
  for (const auto& t : s.tags) {
    const std::string where = "tags[" + std::to_string(t.id) + "]";
    tids.push_back(t.id);
    if (t.person_id) {
      if (!s.find_person(*t.person_id))
        throw ScenarioError(where + ".person", "no such person");
      worn.push_back(*t.person_id);
    } else if (!t.fixed_pos) {
      throw ScenarioError(where, "tag needs either person or position");
    }
  }
  std::sort(tids.begin(), tids.end());
  if (std::adjacent_find(tids.begin(), tids.end()) != tids.end())
    throw ScenarioError("tags.id", "duplicate tag id");
  std::sort(worn.begin(), worn.end());
  if (std::adjacent_find(worn.begin(), worn.end()) != worn.end())
    throw ScenarioError("tags.person", "at most one tag per person");

  for (const auto& o : s.outages) {
    if (!s.find_tag(o.tag_id)) throw ScenarioError("tag_outages.tag", "no such tag");
    if (o.to <= o.from) throw ScenarioError("tag_outages", "empty interval");
  }
  if (s.target_tag && !s.find_tag(*s.target_tag))
    throw ScenarioError("target_tag", "no such tag");
}

PersonState person_state_at(const Person& p, double t) {
  const auto& path = p.path;
  if (t <= path.front().t) return {path.front().pos, {0.0, 0.0}};
  if (t >= path.back().t) return {path.back().pos, {0.0, 0.0}};
  std::size_t i = 1;
  while (path[i].t < t) ++i;
  const auto& a = path[i - 1];
  const auto& b = path[i];
  const double dt = b.t - a.t;
  const double u = (t - a.t) / dt;
  const Vec2 vel = (b.pos - a.pos) * (1.0 / dt);
  return {a.pos + vel * (u * dt), vel};
}

WorldState world_state_at(const Scenario& s, double t) {
  if (t < 0.0 || t > s.duration)
    throw std::out_of_range("world_state_at: t outside [0, duration]");
  WorldState w;
  w.t = t;
  for (const auto& p : s.persons) w.persons[p.id] = person_state_at(p, t);
  return w;
}

double true_radial_velocity(const Vec2& pos, const Vec2& vel, const Vec2& antenna_pos) {
  const Vec2 r = pos - antenna_pos;
  const double d = r.norm();
  if (d == 0.0)
    throw std::invalid_argument("true_radial_velocity: position coincides with antenna");
  // -d/dt ||pos - antenna||: positive when closing on the reference point
  return -r.dot(vel) / d;
}

Vec2 tag_position_at(const Scenario& s, const Tag& tag, const WorldState& world) {
  if (tag.person_id) {
    auto it = world.persons.find(*tag.person_id);
    if (it == world.persons.end())
      throw std::invalid_argument("tag_position_at: wearer not in world state");
    return it->second.pos;
  }
  return *tag.fixed_pos;
}

}  // namespace veltag
