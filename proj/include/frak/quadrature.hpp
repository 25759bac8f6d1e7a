#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "frak/errors.hpp"
#include "frak/kernel.hpp"

namespace frak {

/// Gauss rule for ∫_a^b (s-a)^{exponent_b} f(s) ds.
struct QuadRule {
  std::vector<double> nodes;    // strictly increasing, inside (a, b)
  std::vector<double> weights;  // all positive
  double exponent_b = 0.0;      // -sigma for Jacobi rules, 0 for Legendre
  double a = 0.0;
  double b = 1.0;

  std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  double apply(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      sum += weights[i] * f(nodes[i]);
    }
    return sum;
  }
};

inline constexpr int kMaxRulePoints = 256;

/// n-point Gauss rule for the weight x^{-sigma} on [0,1], from the
/// eigen-decomposition of the Jacobi matrix of the shifted Jacobi
/// polynomials (Golub–Welsch). Throws ConfigError unless 1 <= n <= 256,
/// DomainError unless 0 < sigma < 1.
QuadRule jacobi_rule(int n, double sigma);

/// n-point Gauss–Legendre rule on [0,1].
QuadRule legendre_rule(int n);

/// Rule for weight x^{exponent} (exponent in (-1, 0]) memoized by (n, exponent).
/// Safe for concurrent readers; insertions take an exclusive lock.
std::shared_ptr<const QuadRule> cached_rule(int n, double exponent);

/// Affine image of a [0,1] rule on [a,b]; weights pick up (b-a)^{1+exponent_b}.
QuadRule mapped(const QuadRule& rule, double a, double b);

/// Eigenvalues and first eigenvector components of a symmetric tridiagonal
/// matrix (implicit QL). `diag` has n entries, `offdiag` n-1. On return the
/// eigenvalues are sorted ascending and `first` holds the matching first
/// components.
void tridiagonal_eigen(std::vector<double>& diag, std::vector<double> offdiag,
                       std::vector<double>& first);

/// ∫₀¹ K(t,s) s^{-σ} F(s) ds, split at s = t. On [0,t] the Jacobi rule is
/// rescaled with s = t·x so the weight becomes t^{1-σ} x^{-σ}; on [t,1] a
/// Legendre rule is used with s^{-σ} folded into the integrand.
template <class Kernel, class F>
double integrate_split(Kernel&& kernel, double sigma, double t, F&& f_reg, int n) {
  double left = 0.0;
  double right = 0.0;
  if (t > 0.0) {
    const auto rule = cached_rule(n, -sigma);
    for (std::size_t i = 0; i < rule->size(); ++i) {
      const double s = t * rule->nodes[i];
      left += rule->weights[i] * kernel(t, s) * f_reg(s);
    }
    left *= std::pow(t, 1.0 - sigma);
  }
  if (t < 1.0) {
    const auto rule = cached_rule(n, 0.0);
    const double len = 1.0 - t;
    for (std::size_t i = 0; i < rule->size(); ++i) {
      const double s = std::min(t + len * rule->nodes[i], 1.0);
      right += rule->weights[i] * kernel(t, s) * std::pow(s, -sigma) * f_reg(s);
    }
    right *= len;
  }
  return left + right;
}

/// H(t) = ∫₀¹ G(t,s) s^{-σ} F_reg(s) ds where F_reg(s) = s^σ F(s).
template <class F>
double integrate_green(const GreenParams& params, double t, F&& f_reg, int n) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("integrate_green: t must lie in [0,1]");
  }
  return integrate_split([&params](double tt, double s) { return green_eval(params, tt, s); },
                         params.sigma(), t, std::forward<F>(f_reg), n);
}

}  // namespace frak
