// Copyright 2026 The mblkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mbl::synth {

/// mt19937_64 with draws built from its raw output only, so a seed gives the
/// same stream under every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n); n > 0.
  std::size_t below(std::size_t n) {
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t v = 0;
    do {
      v = engine_();
    } while (v >= limit);
    return static_cast<std::size_t>(v % n);
  }

  /// Uniform integer in [lo, hi].
  long long range(long long lo, long long hi) { return lo + static_cast<long long>(below(static_cast<std::size_t>(hi - lo + 1))); }

  /// Uniform multiple of `step` in [lo, hi].
  double snapped(double lo, double hi, double step) {
    const auto a = static_cast<long long>(lo / step + 0.999999);
    const auto b = static_cast<long long>(hi / step + 1e-9);
    if (b < a) return lo;
    return static_cast<double>(range(a, b)) * step;
  }

  double unit() { return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0); }
  bool chance(double p) { return unit() < p; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  /// Index drawn with the given non-negative weights.
  std::size_t weighted(const std::vector<double>& w) {
    double total = 0.0;
    for (double x : w) total += x;
    double r = unit() * total;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (r < w[k]) return k;
      r -= w[k];
    }
    return w.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream for item `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace mbl::synth
