#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace br {

// Seeded pseudo-random stream.  All randomness in a run flows from one root
// seed; independent modules fork their own stream with a tag so that adding
// draws in one place does not perturb another.  Uniform sampling is done by
// rejection on the raw 64-bit output (std::uniform_int_distribution is not
// stable across standard libraries, and reproducibility of seeded runs is a
// contract here).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform in [0, n).  n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double real01() {
    // 53 uniform bits -> [0,1).
    return static_cast<double>(eng_() >> 11) * (1.0 / 9007199254740992.0);
  }

  // Standard normal via Box-Muller (deterministic given the stream).
  double gauss() {
    double u1 = 0.0;
    while (u1 == 0.0) u1 = real01();
    const double u2 = real01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // Derive an independent stream.  splitmix-style hash of (state draw, tag).
  Rng fork(std::uint64_t tag) {
    std::uint64_t z = eng_() + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  Rng fork(std::string_view tag) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : tag) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ULL;
    }
    return fork(h);
  }

private:
  std::mt19937_64 eng_;
};

} // namespace br
