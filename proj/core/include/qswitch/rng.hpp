#pragma once

#include <cstdint>
#include <random>

namespace qswitch {

// Seeded pseudo-random source with explicit bit-to-double conversion so a
// given seed reproduces the same stream on every platform and standard
// library. All randomized sweeps and optimizer restarts draw from this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(gen_() % span);
  }

  // Standard normal via Box-Muller (explicit, not std::normal_distribution,
  // which is implementation-defined).
  double gaussian();

  // Independent substream: deterministic function of (seed, index).
  static Rng substream(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qswitch
