#ifndef SPINFER_RNG_HPP
#define SPINFER_RNG_HPP

#include <cstdint>
#include <random>

namespace spinfer {

/// Seeded random stream used by every stochastic routine in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard, so a given seed reproduces the same stream on any platform.
/// The standard *distributions* carry no such guarantee, hence the small
/// hand-rolled helpers below.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be nonzero.
  /// Masked rejection: unbiased and portable.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t mask = mask_for(bound);
    std::uint64_t v;
    do {
      v = engine_() & mask;
    } while (v >= bound);
    return v;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool next_bool() { return (engine_() & 1u) != 0; }

 private:
  static std::uint64_t mask_for(std::uint64_t bound) {
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    return mask;
  }

  std::mt19937_64 engine_;
};

}  // namespace spinfer

#endif  // SPINFER_RNG_HPP
