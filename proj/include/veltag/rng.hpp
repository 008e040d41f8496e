#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace veltag {

// splitmix64: used to derive independent substream seeds from a master seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t substream_seed(std::uint64_t master, std::string_view name,
                                    std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t h = mix64(master);
  for (char c : name) h = mix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  h = mix64(h ^ a);
  h = mix64(h ^ (b + 0x517cc1b727220a95ULL));
  return h;
}

// mt19937_64 wrapped with explicit uniform/gaussian draws (Box-Muller, no
// cached state) so streams stay reproducible regardless of call interleaving.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return (engine_() >> 11) * (1.0 / 9007199254740992.0);
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian(double mean = 0.0, double sigma = 1.0) {
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(6.283185307179586 * u2);
  }

  std::uint64_t next_u64() { return engine_(); }

  // integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace veltag
