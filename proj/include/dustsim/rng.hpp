#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

// Deterministic random number generation. The generators here are fixed by
// contract: per-trial streams are xoshiro256** instances whose state is
// expanded with SplitMix64 from (master_seed, stream_index), so a (seed,
// trial) pair always yields the same sequence regardless of platform,
// thread count or trial execution order.

namespace dustsim {

// SplitMix64 (Steele, Lea, Flood 2014). Used to expand seed material.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256** 1.0 (Blackman & Vigna 2018).
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed, std::uint64_t stream = 0) {
    SplitMix64 mix(seed);
    const std::uint64_t base = mix.next();
    SplitMix64 expand(base ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    for (auto& word : state_) {
      word = expand.next();
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

namespace detail {

// Knuth's multiplicative method; cost grows linearly with the mean.
template <class Rng>
std::int64_t poisson_small(Rng& rng, double mean) {
  const double limit = std::exp(-mean);
  std::int64_t k = 0;
  double product = 1.0;
  do {
    ++k;
    product *= rng.next_double();
  } while (product > limit);
  return k - 1;
}

// PTRS transformed rejection with squeeze (Hormann 1993); valid for
// mean >= 10.
template <class Rng>
std::int64_t poisson_ptrs(Rng& rng, double mean) {
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.next_double() - 0.5;
    const double v = rng.next_double();
    const double us = 0.5 - std::fabs(u);
    const double k = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) {
      return static_cast<std::int64_t>(k);
    }
    if (k < 0.0 || (us < 0.013 && v > us)) {
      continue;
    }
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        k * log_mean - mean - std::lgamma(k + 1.0)) {
      return static_cast<std::int64_t>(k);
    }
  }
}

}  // namespace detail

// Sample a Poisson-distributed count with the given mean.
template <class Rng>
std::int64_t poisson(Rng& rng, double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw std::invalid_argument("poisson mean must be finite and >= 0");
  }
  if (mean == 0.0) {
    return 0;
  }
  if (mean < 10.0) {
    return detail::poisson_small(rng, mean);
  }
  return detail::poisson_ptrs(rng, mean);
}

}  // namespace dustsim
