#pragma once

#include <cstdint>
#include <random>

namespace lagten {

// Seeded generator with a portable bounded draw. The standard distributions
// are implementation-defined, so they are avoided to keep runs bit-identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Independent child stream, stable under changes elsewhere in the caller.
  Rng fork(std::uint64_t salt) {
    return Rng(next() ^ (salt * 0x9E3779B97F4A7C15ULL));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lagten
