#pragma once

#include <cstdint>

namespace dirne {

// Counter-based generator: every (seed, index) pair opens an independent
// stream, so parallel consumers stay reproducible and order-independent.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t index)
      : state_(mix(seed ^ mix(index + 0x9E3779B97F4A7C15ull))) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix_out(state_);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  static uint64_t mix(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    return mix_out(z);
  }
  static uint64_t mix_out(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  uint64_t state_;
};

}  // namespace dirne
