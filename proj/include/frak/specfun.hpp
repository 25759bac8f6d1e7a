#pragma once

namespace frak::specfun {

/// Gamma function for x > 0. Rational Lanczos approximation
/// (N=13, g≈6.0247) with reflection below 1/2.
/// Throws DomainError for x <= 0 or non-finite x.
double gamma(double x);

/// log Γ(x) for x > 0.
double lgamma(double x);

/// Euler beta function B(x, y) = Γ(x)Γ(y)/Γ(x+y) for x, y > 0.
double beta(double x, double y);

}  // namespace frak::specfun
