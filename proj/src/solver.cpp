#include "frak/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "frak/errors.hpp"
#include "frak/parallel.hpp"
#include "frak/quadrature.hpp"

namespace frak {

void ProblemSpec::validate() const {
  auto fail = [](const std::string& what) { throw ConfigError(what); };
  if (grid_points < kMinGridPoints || grid_points > kMaxGridPoints) {
    fail("grid_points must lie in [" + std::to_string(kMinGridPoints) + "," +
         std::to_string(kMaxGridPoints) + "], got " + std::to_string(grid_points));
  }
  if (quad_points < 1 || quad_points > kMaxRulePoints) {
    fail("quad_points must lie in [1," + std::to_string(kMaxRulePoints) + "], got " +
         std::to_string(quad_points));
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) fail("tol must be positive");
  if (!(tau > 0.0) || !std::isfinite(tau)) fail("tau must be positive");
  if (max_iters < 1) fail("max_iters must be at least 1");
  if (!(u_max > 0.0) || !std::isfinite(u_max)) fail("u_max must be positive");
  if (lambda_claim && (!(*lambda_claim > 0.0) || !std::isfinite(*lambda_claim))) {
    fail("lambda must be positive");
  }
}

// ---------------------------------------------------------------------------
// SolutionGrid

SolutionGrid SolutionGrid::chebyshev(int m) {
  if (m < kMinGridPoints || m > kMaxGridPoints) {
    throw ConfigError("grid size must lie in [" + std::to_string(kMinGridPoints) + "," +
                      std::to_string(kMaxGridPoints) + "], got " + std::to_string(m));
  }
  SolutionGrid g;
  g.nodes_.resize(m);
  g.bary_.resize(m);
  g.values_.assign(m, 0.0);
  const double h = std::numbers::pi / (2.0 * (m - 1));
  for (int j = 0; j < m; ++j) {
    // (1 - cos(jπ/(m-1)))/2 without cancellation near t = 0
    const double s = std::sin(h * j);
    g.nodes_[j] = s * s;
    g.bary_[j] = (j % 2 == 0) ? 1.0 : -1.0;
  }
  g.nodes_.front() = 0.0;
  g.nodes_.back() = 1.0;
  g.bary_.front() *= 0.5;
  g.bary_.back() *= 0.5;
  return g;
}

SolutionGrid SolutionGrid::filled(int m, double value) {
  auto g = chebyshev(m);
  std::fill(g.values_.begin() + 1, g.values_.end() - 1, value);
  return g;
}

double SolutionGrid::operator()(double t) const {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    const double diff = t - nodes_[j];
    if (diff == 0.0) {
      return values_[j];
    }
    const double w = bary_[j] / diff;
    num += w * values_[j];
    den += w;
  }
  return num / den;
}

double sup_distance(const SolutionGrid& a, const SolutionGrid& b) {
  double d = 0.0;
  const auto& va = a.values();
  const auto& vb = b.values();
  for (std::size_t i = 0; i < va.size(); ++i) {
    d = std::max(d, std::abs(va[i] - vb[i]));
  }
  return d;
}

// ---------------------------------------------------------------------------
// Certificate

ContractionCertificate certify_contraction(const ProblemSpec& p, int n_samples,
                                           std::uint64_t seed) {
  if (n_samples < 1000) {
    throw ConfigError("certificate needs at least 1000 samples, got " +
                      std::to_string(n_samples));
  }
  p.validate();
  const auto [N, t_star] = constant_N(p.params);
  const auto grid = SolutionGrid::chebyshev(p.grid_points);
  const auto& nodes = grid.nodes();

  ContractionCertificate cert;
  cert.N = N;
  cert.t_star = t_star;
  cert.tau = p.tau;
  cert.u_max = p.u_max;
  cert.samples = n_samples;
  cert.lambda_claim = p.lambda_claim.value_or(1.0 / N);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> level(0.0, p.u_max);
  std::uniform_real_distribution<double> decade(-3.0, 0.0);
  double worst = 0.0;
  for (int k = 0; k < n_samples; ++k) {
    const double t = nodes[static_cast<std::size_t>(k) % nodes.size()];
    const double x = level(rng);
    double y;
    if (k % 2 == 0) {
      y = level(rng);
    } else {
      // close pairs probe the small-|x-y| end of the condition
      const double step = p.u_max * std::pow(10.0, decade(rng));
      y = x + step <= p.u_max ? x + step : x - step;
      y = std::clamp(y, 0.0, p.u_max);
    }
    const double d = std::abs(x - y);
    if (d == 0.0) {
      continue;
    }
    const double q = 1.0 + p.tau * std::sqrt(d);
    const double r = std::abs(p.g(t, x) - p.g(t, y)) * q * q / d;
    worst = std::max(worst, r);
  }
  cert.lambda_observed = worst;
  // λ = 1/N is admissible; allow the rounding of the product
  constexpr double slack = 4.0 * std::numeric_limits<double>::epsilon();
  cert.pass = cert.lambda_observed <= cert.lambda_claim && cert.lambda_claim * N <= 1.0 + slack;
  return cert;
}

// ---------------------------------------------------------------------------
// Operator and iteration

namespace {

double green_apply(const ProblemSpec& p, const SolutionGrid& u, double t) {
  auto integrand = [&](double s) {
    const double us = std::max(u(s), 0.0);
    const double gs = p.g(s, us);
    if (gs < 0.0 && !p.g.is_signed()) {
      throw ConeViolation("forcing is negative at t=" + std::to_string(s) +
                              ", u=" + std::to_string(us) + ": g=" + std::to_string(gs),
                          s, us, gs);
    }
    return gs;
  };
  return integrate_green(p.params, t, integrand, p.quad_points);
}

}  // namespace

double nystrom_eval(const ProblemSpec& p, const SolutionGrid& u, double t) {
  return green_apply(p, u, t);
}

SolutionGrid apply_T(const SolutionGrid& u, const ProblemSpec& p, unsigned threads) {
  SolutionGrid out = u;
  out.trace.clear();
  auto& values = out.values();
  const auto& nodes = u.nodes();
  const std::size_t m = nodes.size();
  values.front() = 0.0;
  values.back() = 0.0;

  parallel_for(m - 2, threads, [&](std::size_t k) {
    const std::size_t i = k + 1;
    values[i] = green_apply(p, u, nodes[i]);
  });
  return out;
}

SolveResult solve(const ProblemSpec& p, const SolutionGrid& u0, const SolveOptions& options) {
  p.validate();
  if (u0.size() != static_cast<std::size_t>(p.grid_points)) {
    throw ConfigError("initial grid has " + std::to_string(u0.size()) + " nodes, problem wants " +
                      std::to_string(p.grid_points));
  }
  SolveResult result;
  result.certificate = certify_contraction(p, options.certificate_samples, options.seed);
  result.certified = result.certificate.pass;
  if (!result.certified && !options.uncertified) {
    throw CertificateRefused(result.certificate);
  }

  SolutionGrid u = u0;
  u.values().front() = 0.0;
  u.values().back() = 0.0;
  std::vector<double> trace;
  for (int iter = 1; iter <= p.max_iters; ++iter) {
    SolutionGrid next = apply_T(u, p, options.threads);
    const double delta = sup_distance(next, u);
    trace.push_back(delta);
    u = std::move(next);
    if (delta <= p.tol) {
      u.trace = trace;
      result.solution = std::move(u);
      result.iterations = iter;
      return result;
    }
  }
  throw NonConvergence("Picard iteration did not reach tol=" + std::to_string(p.tol) + " in " +
                           std::to_string(p.max_iters) + " iterations",
                       std::move(trace));
}

std::optional<std::size_t> recursion_violation(const std::vector<double>& trace, double tau,
                                               double slack) {
  for (std::size_t n = 0; n + 1 < trace.size(); ++n) {
    const double q = 1.0 + tau * std::sqrt(trace[n]);
    if (trace[n + 1] > trace[n] / (q * q) + slack) {
      return n;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Positivity

std::string to_string(PositivityVerdict v) {
  return v == PositivityVerdict::VerifiedPositive ? "verified positive" : "not-verified";
}

PositivityReport check_positivity(const ProblemSpec& p, const SolutionGrid& u) {
  PositivityReport report;
  const auto& nodes = u.nodes();
  const auto& values = u.values();

  double u_top = p.u_max;
  for (double v : values) u_top = std::max(u_top, 2.0 * v);
  constexpr int kLevels = 65;
  for (double t : nodes) {
    double prev = p.g(t, 0.0);
    for (int k = 1; k < kLevels; ++k) {
      const double cur = p.g(t, u_top * k / (kLevels - 1));
      if (cur < prev - 1e-12 * std::max(1.0, std::abs(prev))) {
        ++report.monotone_violations;
      }
      prev = cur;
    }
  }
  report.monotone_in_u = report.monotone_violations == 0;

  // f(t,0) = t^{-σ} g(t,0) blows up at 0 iff g(t,0) stays away from 0 there
  double g0 = p.g(0.0, 0.0);
  for (int k = 0; k <= 40; ++k) {
    g0 = std::min(g0, p.g(0.05 * std::ldexp(1.0, -k), 0.0));
  }
  for (double t : nodes) {
    if (t <= 0.05) g0 = std::min(g0, p.g(t, 0.0));
  }
  report.g0_min_near_zero = g0;
  report.singular_at_zero = g0 > 1e-8;

  report.interior_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    report.interior_min = std::min(report.interior_min, values[i]);
  }
  report.non_negative = *std::min_element(values.begin(), values.end()) >= 0.0;
  report.verdict = (report.monotone_in_u && report.singular_at_zero && report.interior_min > 0.0)
                       ? PositivityVerdict::VerifiedPositive
                       : PositivityVerdict::NotVerified;
  return report;
}

// ---------------------------------------------------------------------------
// Grünwald–Letnikov residual

std::vector<ResidualPoint> residual_gl(const ProblemSpec& p,
                                       const std::function<double(double)>& u, double h) {
  if (!(h >= 1e-4 && h <= 1e-2)) {
    throw ConfigError("residual step h must lie in [1e-4, 1e-2], got " + std::to_string(h));
  }
  const double alpha = p.params.alpha();
  const double sigma = p.params.sigma();
  std::vector<ResidualPoint> out;
  for (int k = 0; k <= 12; ++k) {
    const double t = 0.2 + 0.05 * k;
    const auto steps = static_cast<std::size_t>(std::floor(t / h + 1e-9));
    double w = 1.0;
    double sum = 0.0;
    for (std::size_t j = 0; j <= steps; ++j) {
      if (j > 0) w *= 1.0 - (alpha + 1.0) / static_cast<double>(j);
      sum += w * u(std::max(t - static_cast<double>(j) * h, 0.0));
    }
    ResidualPoint pt;
    pt.t = t;
    pt.derivative = sum * std::pow(h, -alpha);
    pt.forcing = std::pow(t, -sigma) * p.g(t, u(t));
    pt.residual = std::abs(pt.derivative - pt.forcing);
    out.push_back(pt);
  }
  return out;
}

std::vector<ResidualPoint> residual_gl(const ProblemSpec& p, const SolutionGrid& u, double h) {
  return residual_gl(p, [&u](double t) { return u(t); }, h);
}

}  // namespace frak
