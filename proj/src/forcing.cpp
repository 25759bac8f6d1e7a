#include "frak/forcing.hpp"

#include <cmath>
#include <stdexcept>

#include "frak/specfun.hpp"

namespace frak {

Forcing Forcing::from_expression(const expr::Expression& e) {
  return Forcing(e.source(), [e](double t, double u) { return e.eval(t, u); }, e.depends_on_u());
}

Forcing catalog_forcing(std::string_view id, const GreenParams& params, double tau) {
  const double sigma = params.sigma();
  const std::string label = "catalog:" + std::string(id);
  if (id == "zero") {
    return Forcing(label, [](double, double) { return 0.0; }, false);
  }
  if (id == "unit") {
    return Forcing(label, [sigma](double t, double) { return std::pow(t, sigma); }, false);
  }
  if (id == "manufactured") {
    const double c0 = -2.0 * specfun::gamma(params.alpha() + 1.0);
    const double c1 = specfun::gamma(params.alpha() + 2.0);
    return Forcing(
        label, [=](double t, double) { return std::pow(t, sigma) * (c0 + c1 * t); }, false, true);
  }
  if (id == "contraction") {
    return Forcing(
        label,
        [tau](double, double u) {
          const double d = 1.0 + tau * std::sqrt(u);
          return 1.0 + 0.1 * u / (d * d);
        },
        true);
  }
  if (id == "log") {
    return Forcing(label, [](double, double u) { return 1.0 + 0.1 * std::log1p(u); }, true);
  }
  throw std::invalid_argument("unknown catalog forcing '" + std::string(id) + "'");
}

std::vector<std::string> catalog_ids() { return {"zero", "unit", "manufactured", "contraction", "log"}; }

double manufactured_solution(const GreenParams& params, double t) {
  return std::pow(t, params.alpha() - 1.0) * (1.0 - t) * (1.0 - t);
}

Forcing resolve_forcing(std::string_view text, const GreenParams& params, double tau) {
  constexpr std::string_view prefix = "catalog:";
  if (text.substr(0, prefix.size()) == prefix) {
    return catalog_forcing(text.substr(prefix.size()), params, tau);
  }
  return Forcing::from_expression(expr::Expression::parse(text));
}

}  // namespace frak
