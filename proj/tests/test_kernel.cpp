#include <doctest.h>

#include <cmath>
#include <random>

#include "frak/errors.hpp"
#include "frak/kernel.hpp"

using namespace frak;

namespace {

// ∫₀¹ G(t,s) s^{-σ} ds by the substitution s = v^{1/(1-σ)}, which turns
// s^{-σ} ds into dv/(1-σ), followed by composite Simpson split at the kink.
double L_simpson(const GreenParams& p, double t, int panels) {
  const double e = 1.0 / (1.0 - p.sigma());
  auto f = [&](double v) { return green_eval(p, t, std::min(std::pow(v, e), 1.0)); };
  auto simpson = [&](double a, double b, int n) {
    if (b <= a) return 0.0;
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
  };
  const double kink = std::pow(t, 1.0 - p.sigma());
  const int left = std::max(2, 2 * static_cast<int>(panels * kink / 2));
  const int right = std::max(2, 2 * static_cast<int>(panels * (1.0 - kink) / 2));
  return (simpson(0.0, kink, left) + simpson(kink, 1.0, right)) / (1.0 - p.sigma());
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(GreenParams(3.0, 0.5), DomainError);
  CHECK_THROWS_AS(GreenParams(4.01, 0.5), DomainError);
  CHECK_THROWS_AS(GreenParams(3.5, 0.0), DomainError);
  CHECK_THROWS_AS(GreenParams(3.5, 1.0), DomainError);
  CHECK_NOTHROW(GreenParams(4.0, 0.5));
}

TEST_CASE("green_eval examples") {
  const GreenParams p35(3.5, 0.5);
  CHECK(green_eval(p35, 0.0, 0.3) == 0.0);
  CHECK(green_eval(p35, 1.0, 0.3) == 0.0);
  // 0.25 * 0.25 * 0.5 / 6
  CHECK(green_eval(GreenParams(4.0, 0.5), 0.5, 0.5) == doctest::Approx(1.0 / 192.0).epsilon(1e-14));
  CHECK_THROWS_AS(green_eval(p35, -0.1, 0.3), DomainError);
  CHECK_THROWS_AS(green_eval(p35, 0.5, 1.2), DomainError);
}

TEST_CASE("green_eval matches the classical clamped-beam kernel at alpha = 4") {
  // For u'''' = h with clamped ends, G(t,s) = t²(1-s)²(3s - t - 2ts)/6 for t <= s.
  const GreenParams p(4.0, 0.5);
  for (double t : {0.1, 0.3, 0.6}) {
    for (double s : {0.65, 0.8, 0.95}) {
      const double classical = t * t * (1 - s) * (1 - s) * (3 * s - t - 2 * t * s) / 6.0;
      CHECK(green_eval(p, t, s) == doctest::Approx(classical).epsilon(1e-13));
      CHECK(green_eval(p, s, t) == doctest::Approx(green_eval(p, t, s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("kernel is positive on the open square") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double alpha : {3.01, 3.5, 4.0}) {
    const GreenParams p(alpha, 0.5);
    int bad = 0;
    for (int i = 0; i < 100000; ++i) {
      const double t = unit(rng), s = unit(rng);
      if (t == 0.0 || s == 0.0) continue;
      if (!(green_eval(p, t, s) > 0.0)) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("kernel branches meet at the diagonal and vanish on boundary rows") {
  for (double alpha : {3.01, 3.5, 4.0}) {
    const GreenParams p(alpha, 0.5);
    for (int i = 1; i < 100; ++i) {
      const double t = i / 100.0;
      CHECK(std::abs(green_eval(p, t, t - 1e-6) - green_eval(p, t, t + 1e-6)) <= 1e-4);
    }
    for (int j = 0; j <= 200; ++j) {
      const double s = j / 200.0;
      CHECK(green_eval(p, 0.0, s) == 0.0);
      CHECK(green_eval(p, 1.0, s) == 0.0);
      CHECK(green_eval(p, s, 0.0) == 0.0);
      CHECK(green_eval(p, s, 1.0) == 0.0);
    }
  }
}

TEST_CASE("L_closed endpoints and the clamped-beam limit") {
  for (double alpha : {3.01, 3.5, 4.0}) {
    for (double sigma : {0.1, 0.5, 0.9}) {
      const GreenParams p(alpha, sigma);
      CHECK(L_closed(p, 0.0) == 0.0);
      CHECK(std::abs(L_closed(p, 1.0)) <= 1e-12);
    }
  }
  // σ → 0 at α = 4 is u'''' = 1 with solution t²(1-t)²/24
  CHECK(std::abs(L_closed(GreenParams(4.0, 1e-8), 0.5) - 1.0 / 384.0) <= 1e-6);
}

TEST_CASE("L_closed agrees with an independent Simpson quadrature") {
  for (double alpha : {3.01, 3.5, 4.0}) {
    for (double sigma : {0.1, 0.5, 0.9}) {
      const GreenParams p(alpha, sigma);
      for (double t : {0.05, 0.2, 0.45, 0.7, 0.93}) {
        CHECK(std::abs(L_closed(p, t) - L_simpson(p, t, 40000)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("constant_N agrees with a dense scan") {
  for (auto [alpha, sigma] : {std::pair{3.5, 0.5}, std::pair{3.01, 0.9}, std::pair{4.0, 0.1}}) {
    const GreenParams p(alpha, sigma);
    double scan_max = 0.0, scan_arg = 0.0;
    for (int i = 0; i <= 1000000; ++i) {
      const double t = i / 1e6;
      const double v = L_closed(p, t);
      if (v > scan_max) {
        scan_max = v;
        scan_arg = t;
      }
    }
    const auto [N, t_star] = constant_N(p);
    CHECK(N > 0.0);
    CHECK(N >= scan_max * (1.0 - 1e-14));
    CHECK(N == doctest::Approx(scan_max).epsilon(1e-12));
    CHECK(std::abs(t_star - scan_arg) <= 2e-6);
    CHECK(L_closed(p, t_star) == N);
  }
  const auto [N4, t4] = constant_N(GreenParams(4.0, 1e-8));
  CHECK(std::abs(N4 - 1.0 / 384.0) <= 1e-6);
  CHECK(std::abs(t4 - 0.5) <= 1e-6);
}

TEST_CASE("case1_bound") {
  const GreenParams p(3.5, 0.5);
  CHECK(case1_bound(p, 0.0, 1.0) == 0.0);
  CHECK(case1_bound(p, 0.7, 0.0) == 0.0);
  CHECK_THROWS_AS(case1_bound(p, 0.5, -1.0), DomainError);

  auto beta = [](double x, double y) { return std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y); };
  const double g = std::tgamma(3.5);
  const double oracle = 2.5 * std::pow(0.5, 1.5) * beta(0.5, 2.5) / g +
                        std::pow(0.5, 3.0) * beta(0.5, 3.5) / g;
  CHECK(case1_bound(p, 0.5, 1.0) == doctest::Approx(oracle).epsilon(1e-13));
  CHECK(case1_bound(p, 0.5, 3.0) == doctest::Approx(3.0 * oracle).epsilon(1e-13));
}
