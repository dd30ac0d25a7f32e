#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "extdep/errors.hpp"

namespace extdep {

// Counter-based stream built on the splitmix64 finalizer. Output k of stream s
// depends only on (seed, s, k), so any chunking or thread assignment reproduces
// the same values. splitmix64 passes BigCrush and is more than adequate for
// Monte Carlo use.
class SplitMix64Stream {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    const std::uint64_t h = finalize(seed + kGamma);
    return finalize(h ^ finalize(stream * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL));
  }

  SplitMix64Stream(std::uint64_t seed, std::uint64_t stream) : base_(derive(seed, stream)) {}

  std::uint64_t next_u64() { return finalize(base_ + (++counter_) * kGamma); }

  // Uniform strictly inside (0,1).
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }

  double next_exponential() { return -std::log(next_uniform()); }

  // Unit Frechet, P(V <= v) = exp(-1/v).
  double next_unit_frechet() { return 1.0 / next_exponential(); }

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

// One positive stable draw S with Laplace transform E exp(-s S) = exp(-s^theta),
// theta in (0,1]. Uses the Chambers-Mallows-Stuck / Kanter representation
// (Kanter 1975; Chambers, Mallows and Stuck 1976): with U ~ Uniform(0,pi) and
// W ~ Exp(1),
//
//   S = [sin((1-theta) U)]^{(1-theta)/theta} * sin(theta U)
//       / ( sin(U)^{1/theta} * W^{(1-theta)/theta} ).
//
// theta = 1 is the degenerate point mass at 1. Evaluated in log space; the
// construction is exact and rejection-free.
inline double positive_stable_draw(double theta, SplitMix64Stream& rng) {
  if (theta == 1.0) return 1.0;
  const double u = std::numbers::pi * rng.next_uniform();
  const double w = rng.next_exponential();
  const double r = (1.0 - theta) / theta;
  const double log_s = r * (std::log(std::sin((1.0 - theta) * u)) - std::log(w)) +
                       std::log(std::sin(theta * u)) - std::log(std::sin(u)) / theta;
  return std::exp(log_s);
}

inline std::vector<double> sample_positive_stable(double theta, std::size_t n,
                                                  std::uint64_t seed) {
  if (!(theta > 0.0) || theta > 1.0 || !std::isfinite(theta))
    throw DomainError("positive stable exponent theta must lie in (0,1]");
  std::vector<double> out(n);
  for (std::size_t l = 0; l < n; ++l) {
    SplitMix64Stream rng(seed, l);
    out[l] = positive_stable_draw(theta, rng);
  }
  return out;
}

}  // namespace extdep
