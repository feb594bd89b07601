#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "dustsim/rng.hpp"

using namespace dustsim;

namespace {

struct Moments {
  double mean;
  double variance;
};

Moments sample_poisson_moments(double lambda, int n, std::uint64_t seed) {
  Xoshiro256StarStar rng(seed);
  std::vector<double> xs(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    xs[i] = static_cast<double>(poisson(rng, lambda));
    sum += xs[i];
  }
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : xs) {
    ss += (x - mean) * (x - mean);
  }
  return {mean, ss / (n - 1)};
}

// Checks mean and variance against the Poisson law within 5 standard errors.
void check_poisson_law(double lambda, std::uint64_t seed) {
  const int n = 20000;
  const Moments m = sample_poisson_moments(lambda, n, seed);
  const double se_mean = std::sqrt(lambda / n);
  // Var of the sample variance for Poisson: (lambda + 2*lambda^2) / n.
  const double se_var = std::sqrt((lambda + 2.0 * lambda * lambda) / n);
  CHECK(std::fabs(m.mean - lambda) <= 5.0 * se_mean);
  CHECK(std::fabs(m.variance - lambda) <= 5.0 * se_var);
}

}  // namespace

TEST_CASE("streams are reproducible and independent") {
  Xoshiro256StarStar a(42, 0);
  Xoshiro256StarStar b(42, 0);
  Xoshiro256StarStar c(42, 1);
  Xoshiro256StarStar d(43, 0);
  bool differs_c = false;
  bool differs_d = false;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t va = a.next();
    CHECK(va == b.next());
    differs_c |= (va != c.next());
    differs_d |= (va != d.next());
  }
  CHECK(differs_c);
  CHECK(differs_d);
}

TEST_CASE("uniform doubles live in [0, 1) and average to 1/2") {
  Xoshiro256StarStar rng(1234);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.next_double();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  // SE of the mean is 1/sqrt(12 n) ~ 0.0009.
  CHECK(std::fabs(sum / n - 0.5) < 5.0 * 0.00091);
}

TEST_CASE("poisson sampler matches the Poisson law") {
  SUBCASE("zero mean is identically zero") {
    Xoshiro256StarStar rng(9);
    for (int i = 0; i < 100; ++i) {
      CHECK(poisson(rng, 0.0) == 0);
    }
  }
  SUBCASE("small mean (direct method)") { check_poisson_law(4.2, 2024); }
  SUBCASE("moderate mean (transformed rejection)") {
    check_poisson_law(37.5, 2025);
  }
  SUBCASE("large mean (transformed rejection)") {
    check_poisson_law(10000.0, 2026);
  }
  SUBCASE("boundary between methods") {
    check_poisson_law(9.9, 31);
    check_poisson_law(10.1, 32);
  }
}

TEST_CASE("poisson sampler rejects invalid means") {
  Xoshiro256StarStar rng(1);
  CHECK_THROWS_AS(poisson(rng, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(poisson(rng, std::nan("")), std::invalid_argument);
}
