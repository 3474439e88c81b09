#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace monodeg {

// Deterministic RNG wrapper. Draws go through the raw mt19937_64 stream so
// identical seeds give identical sequences on every platform, which the
// seeded generators and search heuristics rely on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return state_(); }

  int below(int n) {  // uniform-ish in [0, n); n >= 1
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(below(static_cast<int>(i)))]);
  }

 private:
  std::mt19937_64 state_;
};

}  // namespace monodeg
