#include "frak/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "frak/errors.hpp"
#include "frak/specfun.hpp"

namespace frak {

namespace {

void require_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0,1], got " + std::to_string(x));
  }
}

}  // namespace

GreenParams::GreenParams(double alpha, double sigma) : alpha_(alpha), sigma_(sigma) {
  if (!(alpha > 3.0 && alpha <= 4.0)) {
    throw DomainError("alpha must lie in (3,4], got " + std::to_string(alpha));
  }
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError("sigma must lie in (0,1), got " + std::to_string(sigma));
  }
  gamma_alpha_ = specfun::gamma(alpha);
}

double green_eval(const GreenParams& params, double t, double s) {
  require_unit(t, "t");
  require_unit(s, "s");
  if (t == 0.0 || t == 1.0 || s == 0.0 || s == 1.0) {
    return 0.0;
  }
  const double a = params.alpha();
  const double common =
      std::pow(1.0 - s, a - 2.0) * std::pow(t, a - 2.0) * ((s - t) + (a - 2.0) * (1.0 - t) * s);
  const double jump = s < t ? std::pow(t - s, a - 1.0) : 0.0;
  return (jump + common) / params.gamma_alpha();
}

double L_closed(const GreenParams& params, double t) {
  require_unit(t, "t");
  const double a = params.alpha();
  const double sg = params.sigma();
  const double scale = specfun::beta(1.0 - sg, a - 1.0) / params.gamma_alpha();
  const double c1 = (a - 1.0) / (a - sg);
  const double c2 = 1.0 + (a - 2.0) * (1.0 - sg) / (a - sg);
  const double c3 = (a - 1.0) * (1.0 - sg) / (a - sg);
  return scale * (c1 * std::pow(t, a - sg) - c2 * std::pow(t, a - 1.0) + c3 * std::pow(t, a - 2.0));
}

KernelMaximum constant_N(const GreenParams& params) {
  constexpr int kScan = 1024;
  int best = 0;
  double best_value = L_closed(params, 0.0);
  for (int i = 1; i < kScan; ++i) {
    const double v = L_closed(params, static_cast<double>(i) / (kScan - 1));
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double lo = static_cast<double>(std::max(best - 1, 0)) / (kScan - 1);
  double hi = static_cast<double>(std::min(best + 1, kScan - 1)) / (kScan - 1);

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = L_closed(params, x1);
  double f2 = L_closed(params, x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = L_closed(params, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = L_closed(params, x1);
    }
  }
  const double t_star = 0.5 * (lo + hi);
  double N = L_closed(params, t_star);
  // The grid sample can only tie the refined value at round-off level.
  if (best_value > N) {
    return {best_value, static_cast<double>(best) / (kScan - 1)};
  }
  return {N, t_star};
}

double case1_bound(const GreenParams& params, double t, double M) {
  require_unit(t, "t");
  if (!(M >= 0.0)) {
    throw DomainError("case1_bound: M must be non-negative, got " + std::to_string(M));
  }
  const double a = params.alpha();
  const double sg = params.sigma();
  const double g = params.gamma_alpha();
  return M * (a - 1.0) * std::pow(t, a - 2.0) * specfun::beta(1.0 - sg, a - 1.0) / g +
         M * std::pow(t, a - sg) * specfun::beta(1.0 - sg, a) / g;
}

}  // namespace frak
