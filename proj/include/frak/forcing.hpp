#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "frak/expr.hpp"
#include "frak/kernel.hpp"

namespace frak {

/// The regularized nonlinearity g(t,u) = t^σ f(t,u). Users never supply f
/// itself, so nothing singular is evaluated at t = 0.
class Forcing {
 public:
  using Fn = std::function<double(double t, double u)>;

  Forcing(std::string label, Fn fn, bool depends_on_u, bool signed_values = false)
      : label_(std::move(label)),
        fn_(std::move(fn)),
        depends_on_u_(depends_on_u),
        signed_(signed_values) {}

  static Forcing from_expression(const expr::Expression& e);

  double operator()(double t, double u) const { return fn_(t, u); }

  const std::string& label() const noexcept { return label_; }
  bool depends_on_u() const noexcept { return depends_on_u_; }
  /// A signed forcing may take negative values (manufactured solutions);
  /// the cone check is skipped for it.
  bool is_signed() const noexcept { return signed_; }

 private:
  std::string label_;
  Fn fn_;
  bool depends_on_u_;
  bool signed_;
};

/// Built-in forcings, addressed as "catalog:<id>" in problem files:
///   zero          g = 0
///   unit          g = t^σ                                (f ≡ 1)
///   manufactured  g = t^σ (-2Γ(α+1) + Γ(α+2) t), signed  (u = t^{α-1}(1-t)²)
///   contraction   g = 1 + 0.1 u / (1 + τ√u)²
///   log           g = 1 + 0.1 ln(1 + u)
/// Throws std::invalid_argument for unknown ids.
Forcing catalog_forcing(std::string_view id, const GreenParams& params, double tau);

std::vector<std::string> catalog_ids();

/// Exact solution of the manufactured problem, t^{α-1}(1-t)².
double manufactured_solution(const GreenParams& params, double t);

/// Resolves "catalog:<id>" through the catalog and anything else as an
/// expression in t and u.
Forcing resolve_forcing(std::string_view text, const GreenParams& params, double tau);

}  // namespace frak
