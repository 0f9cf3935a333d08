// tests/support/rng.h
//
// Deterministic random helpers for tests. std::mt19937_64 is fully
// specified by the standard; the distributions are hand-rolled here
// because the standard library ones are implementation-defined.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fonorico::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // [0, n); modulo bias is irrelevant at fixture scale.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  // [lo, hi] inclusive.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

  // (0, 1]
  double uniform() {
    return (double(engine_() >> 11) + 1.0) / 9007199254740992.0;
  }

  // Box-Muller; standard normal.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 6.283185307179586 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace fonorico::testing
