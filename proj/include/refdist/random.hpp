#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace refdist {

/// SplitMix64 finalizer. Used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded generator with splittable streams.
///
/// `Rng(seed).split(k)` yields a generator whose sequence depends only on
/// (seed, k), so work items can be drawn in any order or on any thread and
/// still reproduce. Normal deviates use Box-Muller on the 64-bit Mersenne
/// Twister, whose output sequence is fixed by the standard.
class Rng
{
public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
    : key_(mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL)))
    , engine_(key_)
  {}

  Rng split(std::uint64_t stream) const { return Rng(key_, stream); }

  /// Uniform on the open interval (0, 1).
  double uniform()
  {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal()
  {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

} // namespace refdist
