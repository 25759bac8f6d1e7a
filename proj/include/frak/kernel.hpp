#pragma once

namespace frak {

/// Fractional order alpha in (3, 4] and singularity exponent sigma in (0, 1).
class GreenParams {
 public:
  /// Throws DomainError when either parameter is outside its range.
  GreenParams(double alpha, double sigma);

  double alpha() const noexcept { return alpha_; }
  double sigma() const noexcept { return sigma_; }
  /// Γ(alpha), cached.
  double gamma_alpha() const noexcept { return gamma_alpha_; }

 private:
  double alpha_;
  double sigma_;
  double gamma_alpha_;
};

/// Green's function of D^α u = h with u(0)=u(1)=u'(0)=u'(1)=0.
///
/// For s <= t:  [(t-s)^{α-1} + (1-s)^{α-2} t^{α-2} ((s-t) + (α-2)(1-t)s)] / Γ(α)
/// for s >= t the (t-s)^{α-1} term is dropped. The diagonal s == t uses the
/// second branch. G vanishes identically on the rows t = 0 and t = 1 and is
/// returned as an exact zero there.
double green_eval(const GreenParams& params, double t, double s);

/// L(t) = ∫₀¹ G(t,s) s^{-σ} ds in closed form:
/// B(1-σ,α-1)/Γ(α) · [ (α-1)/(α-σ) t^{α-σ}
///                     - (1 + (α-2)(1-σ)/(α-σ)) t^{α-1}
///                     + (α-1)(1-σ)/(α-σ) t^{α-2} ]
double L_closed(const GreenParams& params, double t);

struct KernelMaximum {
  double N;
  double t_star;
};

/// N = max_{t∈[0,1]} L(t). A 1024-point scan brackets the maximum and a
/// golden-section search refines it until the bracket is below 1e-10.
KernelMaximum constant_N(const GreenParams& params);

/// Upper bound for |H(t) - H(0)| where H(t) = ∫ G(t,s) F(s) ds and
/// |s^σ F(s)| <= M:
///   M(α-1) t^{α-2} B(1-σ,α-1)/Γ(α) + M t^{α-σ} B(1-σ,α)/Γ(α).
/// Throws DomainError for M < 0 or t outside [0,1].
double case1_bound(const GreenParams& params, double t, double M);

}  // namespace frak
