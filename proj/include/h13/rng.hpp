#pragma once

#include <cstdint>
#include <random>

namespace h13 {

// Deterministic uniform source. mt19937_64's output stream is pinned by the
// C++ standard; the [0,1) mapping below avoids std::uniform_real_distribution,
// whose sequence is implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform on [0,1) with 53-bit resolution.
  double unit() { return double(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Uniform integer in [0, n). Modulo bias is negligible for the small n used here.
  std::int64_t below(std::int64_t n) { return std::int64_t(gen_() % std::uint64_t(n)); }

private:
  std::mt19937_64 gen_;
};

}  // namespace h13
