#pragma once

#include <cmath>
#include <numbers>

namespace veltag {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kBinSeconds = 0.4;            // shared velocity bin width
inline constexpr int kFrameHz = 30;                   // depth frames per second
inline constexpr int kFramesPerBin = 12;              // 0.4 s * 30 Hz
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Floor-plane point or vector (x, z), meters.
struct Vec2 {
  double x = 0.0;
  double z = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, z + o.z}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, z - o.z}; }
  Vec2 operator*(double s) const { return {x * s, z * s}; }
  double dot(const Vec2& o) const { return x * o.x + z * o.z; }
  double norm() const { return std::hypot(x, z); }
  bool operator==(const Vec2&) const = default;
};

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

// Reduce an angle to [0, 2*pi).
inline double wrap_two_pi(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

// Reduce an angle difference to (-pi, pi].
inline double wrap_pi(double dphi) {
  double w = std::fmod(dphi, kTwoPi);
  if (w <= -std::numbers::pi) w += kTwoPi;
  if (w > std::numbers::pi) w -= kTwoPi;
  return w;
}

// Index of the 400 ms bin containing time t; bin k covers [0.4k, 0.4(k+1)).
inline long bin_index_of(double t) { return static_cast<long>(std::floor(t / kBinSeconds)); }

}  // namespace veltag
