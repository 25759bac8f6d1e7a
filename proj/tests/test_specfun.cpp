#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "frak/errors.hpp"
#include "frak/specfun.hpp"

using namespace frak;

TEST_CASE("gamma anchor values") {
  CHECK(specfun::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(specfun::gamma(4.0) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(std::abs(specfun::gamma(0.5) - 1.7724538509055160) <= 1e-15);
}

TEST_CASE("gamma relative error on [0.1, 50] against the C library") {
  // std::tgamma is an independent implementation, correct to a few ulps
  double worst = 0.0;
  for (int i = 0; i <= 4990; ++i) {
    const double x = 0.1 + 0.01 * i;
    worst = std::max(worst, std::abs(specfun::gamma(x) / std::tgamma(x) - 1.0));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("gamma recurrence") {
  for (double x : {0.1, 0.37, 1.5, 2.9, 7.25, 20.5}) {
    CHECK(specfun::gamma(x + 1.0) == doctest::Approx(x * specfun::gamma(x)).epsilon(1e-14));
  }
}

TEST_CASE("lgamma agrees with log of gamma") {
  for (double x : {0.05, 0.5, 1.0, 2.0, 3.3, 10.0, 80.0}) {
    CHECK(specfun::lgamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
}

TEST_CASE("nonpositive arguments are domain errors") {
  CHECK_THROWS_AS(specfun::gamma(0.0), DomainError);
  CHECK_THROWS_AS(specfun::gamma(-1.5), DomainError);
  CHECK_THROWS_AS(specfun::lgamma(0.0), DomainError);
  CHECK_THROWS_AS(specfun::beta(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(specfun::beta(1.0, -2.0), DomainError);
  CHECK_THROWS_AS(specfun::gamma(std::nan("")), DomainError);
}

TEST_CASE("beta values") {
  CHECK(specfun::beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(specfun::beta(1.0, 3.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  // Γ(1/2)Γ(7/2)/Γ(4) = √π · (15/8)√π / 6 = 15π/48
  const double oracle = 15.0 * std::numbers::pi / 48.0;
  CHECK(std::abs(oracle - 0.98174770424681) < 1e-14);
  CHECK(std::abs(specfun::beta(0.5, 3.5) - oracle) <= 1e-14);
  // log-space path for large arguments
  const double big = specfun::beta(80.0, 90.0);
  const double ref = std::exp(std::lgamma(80.0) + std::lgamma(90.0) - std::lgamma(170.0));
  CHECK(big == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("beta is symmetric") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(0.01, 20.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = pos(rng), y = pos(rng);
    const double a = specfun::beta(x, y), b = specfun::beta(y, x);
    CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, a));
  }
}

TEST_CASE("beta recurrences used by the closed-form kernel integral") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double sigma = 1.0 - unit(rng);
    if (sigma >= 1.0) continue;
    const double alpha = 4.0 - unit(rng);
    const double b = specfun::beta(1.0 - sigma, alpha - 1.0);
    CHECK(std::abs(specfun::beta(1.0 - sigma, alpha) - (alpha - 1.0) / (alpha - sigma) * b) <=
          1e-12);
    CHECK(std::abs(specfun::beta(2.0 - sigma, alpha - 1.0) - (1.0 - sigma) / (alpha - sigma) * b) <=
          1e-12);
  }
}
