#ifndef SPINFER_FIXED_POINT_HPP
#define SPINFER_FIXED_POINT_HPP

#include <cmath>
#include <cstdint>

namespace spinfer {
namespace fixedpoint {

/// 128-bit fixed-point accumulator for sums of log-probabilities.
///
/// Incremental likelihood maintenance adds and removes per-cell terms as the
/// sampler flips bits. Plain double accumulators are not exactly invertible
/// ((a + x) - x can differ from a after rounding), which would let cached
/// totals drift away from a from-scratch rebuild. Integer fixed-point adds
/// are exact and exactly invertible, so a flip followed by its inverse
/// restores the accumulator bit-for-bit and the cached total never drifts.
///
/// Resolution is 2^-60 nats; term magnitudes below that quantize to zero and
/// are treated as no influence. With the supported alpha grid and hop counts
/// this floor is many orders of magnitude below any contributing term.
using Acc = __int128;

inline constexpr int kFracBits = 60;

/// Nearest fixed-point value for a finite double. Split into integer and
/// fractional parts so the scaled fraction stays inside long long range
/// regardless of magnitude.
inline Acc quantize(double x) {
  double ipart = 0.0;
  const double fpart = std::modf(x, &ipart);
  return (static_cast<Acc>(static_cast<long long>(ipart)) << kFracBits) +
         static_cast<Acc>(std::llround(std::ldexp(fpart, kFracBits)));
}

inline double to_double(Acc a) { return std::ldexp(static_cast<double>(a), -kFracBits); }

}  // namespace fixedpoint

/// log(1 - e^x) for x < 0 without evaluating log(0); the two branches keep
/// full precision for x near 0 and for large negative x.
inline double log1mexp(double x) {
  constexpr double kLn2 = 0.6931471805599453;
  return x > -kLn2 ? std::log(-std::expm1(x)) : std::log1p(-std::exp(x));
}

}  // namespace spinfer

#endif  // SPINFER_FIXED_POINT_HPP
