#pragma once
// Counter-based random streams: identical (seed, index) gives identical draws,
// distinct indices give independent streams. Output function is a SplitMix64
// style mixer over key + counter * golden ratio; distributions are hand-rolled
// so sequences are identical across platforms and standard library versions.

#include <cmath>
#include <cstdint>

namespace glc {

class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t stream_index = 0)
      : key_(mix(seed ^ mix(stream_index + 0x6a09e667f3bcc909ULL))) {}

  uint64_t next_u64() { return mix(key_ + (++ctr_) * 0x9e3779b97f4a7c15ULL); }

  double uniform() {  // (0,1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double c = std::cos(6.283185307179586476925286766559 * u2);
    double s = std::sin(6.283185307179586476925286766559 * u2);
    spare_ = r * s;
    have_spare_ = true;
    return r * c;
  }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  // Marsaglia-Tsang for k >= 1, boosted for k < 1.
  double gamma(double k) {
    if (k < 1.0) return gamma(k + 1.0) * std::pow(uniform(), 1.0 / k);
    double d = k - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0) continue;
      v = v * v * v;
      double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

 private:
  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t key_;
  uint64_t ctr_ = 0;
  bool have_spare_ = false;
  double spare_ = 0;
};

}  // namespace glc
