#include "frak/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "frak/fcontraction.hpp"
#include "frak/kernel.hpp"
#include "frak/parallel.hpp"
#include "frak/quadrature.hpp"
#include "frak/solver.hpp"
#include "frak/specfun.hpp"

namespace frak::verify {

using nlohmann::ordered_json;

namespace {

std::string tag(double alpha) {
  std::ostringstream os;
  os << "alpha=" << alpha;
  return os.str();
}

std::string tag(double alpha, double sigma) {
  std::ostringstream os;
  os << "alpha=" << alpha << ",sigma=" << sigma;
  return os.str();
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Kernel {
  GreenParams params;
  double perturbation;
  double operator()(double t, double s) const { return green_eval(params, t, s) - perturbation; }
};

CheckResult kernel_positivity(const Options& o, double alpha, std::uint64_t seed) {
  const Kernel k{GreenParams(alpha, 0.5), o.kernel_perturbation};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int failures = 0;
  double min_value = INFINITY;
  for (int i = 0; i < o.kernel_samples; ++i) {
    double t = unit(rng);
    double s = unit(rng);
    if (t == 0.0 || s == 0.0) continue;
    const double g = k(t, s);
    min_value = std::min(min_value, g);
    if (!(g > 0.0)) ++failures;
  }
  return {"kernel_positivity[" + tag(alpha) + "]", failures == 0,
          ordered_json{{"samples", o.kernel_samples}, {"failures", failures}, {"min", min_value}}};
}

CheckResult kernel_boundary(const Options& o, double alpha) {
  const Kernel k{GreenParams(alpha, 0.5), o.kernel_perturbation};
  int failures = 0;
  for (int i = 0; i <= 1000; ++i) {
    const double s = i / 1000.0;
    if (k(0.0, s) != 0.0 || k(1.0, s) != 0.0 || k(s, 0.0) != 0.0 || k(s, 1.0) != 0.0) ++failures;
  }
  return {"kernel_boundary[" + tag(alpha) + "]", failures == 0,
          ordered_json{{"samples", 4 * 1001}, {"failures", failures}}};
}

CheckResult kernel_continuity(const Options& o, double alpha) {
  const Kernel k{GreenParams(alpha, 0.5), o.kernel_perturbation};
  double worst = 0.0;
  for (int i = 1; i < 100; ++i) {
    const double t = i / 100.0;
    worst = std::max(worst, std::abs(k(t, t - 1e-6) - k(t, t + 1e-6)));
  }
  return {"kernel_continuity[" + tag(alpha) + "]", worst <= 1e-4,
          ordered_json{{"epsilon", 1e-6}, {"max_jump", worst}, {"tolerance", 1e-4}}};
}

CheckResult L_consistency(const Options& o, double alpha, double sigma) {
  const GreenParams params(alpha, sigma);
  const Kernel k{params, o.kernel_perturbation};
  double worst = 0.0;
  for (int i = 0; i < 32; ++i) {
    const double t = i / 31.0;
    const double quad = integrate_split(k, sigma, t, [](double) { return 1.0; }, 48);
    worst = std::max(worst, std::abs(L_closed(params, t) - quad));
  }
  const double ends = std::max(std::abs(L_closed(params, 0.0)), std::abs(L_closed(params, 1.0)));
  const auto [N, t_star] = constant_N(params);
  const bool pass = worst <= 1e-8 && ends <= 1e-12 && N > 0.0;
  return {"L_consistency[" + tag(alpha, sigma) + "]", pass,
          ordered_json{{"max_abs_diff", worst},
                       {"endpoint_abs", ends},
                       {"N", N},
                       {"t_star", t_star}}};
}

CheckResult case1(const Options& o, double alpha, double sigma, std::uint64_t seed) {
  const GreenParams params(alpha, sigma);
  const Kernel k{params, o.kernel_perturbation};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  int failures = 0;
  for (int inst = 0; inst < 8; ++inst) {
    // F_reg(s) = s^σ F(s) = a + b cos(c s), |F_reg| <= |a| + |b|
    const double a = coef(rng), b = coef(rng), c = 5.0 * coef(rng);
    const double M = std::abs(a) + std::abs(b);
    auto f_reg = [=](double s) { return a + b * std::cos(c * s); };
    for (int i = 1; i <= 16; ++i) {
      const double t = i / 16.0;
      const double H = integrate_split(k, sigma, t, f_reg, 48);
      if (std::abs(H) > case1_bound(params, t, M) + 1e-12) ++failures;
    }
  }
  return {"case1_bound[" + tag(alpha, sigma) + "]", failures == 0,
          ordered_json{{"instances", 8}, {"points", 16}, {"failures", failures}}};
}

CheckResult beta_identities(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst1 = 0.0, worst2 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double sigma = 1.0 - unit(rng);  // (0, 1]
    if (sigma >= 1.0) continue;
    const double alpha = 4.0 - unit(rng);  // (3, 4]
    const double b = specfun::beta(1.0 - sigma, alpha - 1.0);
    worst1 = std::max(worst1, std::abs(specfun::beta(1.0 - sigma, alpha) -
                                       (alpha - 1.0) / (alpha - sigma) * b));
    worst2 = std::max(worst2, std::abs(specfun::beta(2.0 - sigma, alpha - 1.0) -
                                       (1.0 - sigma) / (alpha - sigma) * b));
  }
  return {"beta_identities", worst1 <= 1e-12 && worst2 <= 1e-12,
          ordered_json{{"samples", 1000}, {"max_err_first", worst1}, {"max_err_second", worst2}}};
}

CheckResult moments(double sigma) {
  double worst = 0.0;
  for (int n : {1, 2, 3, 4, 8, 16, 32, 48, 64}) {
    const auto rule = jacobi_rule(n, sigma);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      const double q = rule.apply([k](double x) { return std::pow(x, k); });
      worst = std::max(worst, std::abs(q - 1.0 / (k + 1.0 - sigma)));
    }
  }
  std::ostringstream name;
  name << "quadrature_moments[sigma=" << sigma << "]";
  return {name.str(), worst <= 1e-12, ordered_json{{"max_abs_err", worst}}};
}

CheckResult phi_class(PhiId id, std::uint64_t seed) {
  const auto phi = phi_catalog(id);
  const auto r = verify_phi_class(phi, 2000, seed);
  return {"phi_class[" + phi.name + "]", r.pass(),
          ordered_json{{"k", phi.k_witness},
                       {"increasing", r.increasing},
                       {"diverges", r.diverges},
                       {"k_limit", r.k_limit},
                       {"k_probe", r.k_probe}}};
}

CheckResult wardowski_reference() {
  const std::vector<double> pts = {0.0, 1.0};
  const std::function<double(const double&, const double&)> d = [](const double& a,
                                                                    const double& b) {
    return std::abs(a - b);
  };
  const std::function<double(const double&)> identity = [](const double& x) { return x; };
  const std::function<double(const double&)> constant = [](const double&) { return 0.5; };
  const auto phi = phi_catalog(PhiId::NegInvSqrt);
  const auto r_id = verify_wardowski(pts, identity, d, 1.0, phi, {{0, 1}});
  const auto r_const = verify_wardowski(pts, constant, d, 1.0, phi, {{0, 1}});
  const bool pass = !r_id.pass() && r_const.pass() && r_const.checked == 0;
  return {"wardowski_reference_maps", pass,
          ordered_json{{"identity_violations", r_id.violations.size()},
                       {"constant_checked", r_const.checked}}};
}

CheckResult wardowski_solver(double alpha, double sigma, std::uint64_t seed) {
  const GreenParams params(alpha, sigma);
  ProblemSpec p(params, catalog_forcing("contraction", params, 1.0));
  const auto cert = certify_contraction(p, 2000, seed);
  const auto r = sample_cone_contraction(p, 1000, seed, 1e-9);
  const bool pass = cert.pass && r.wardowski.pass() && r.sqrt_form_violations == 0;
  return {"wardowski_solver[" + tag(alpha, sigma) + "]", pass,
          ordered_json{{"certificate", cert.pass ? "pass" : "fail"},
                       {"pairs_checked", r.wardowski.checked},
                       {"violations", r.wardowski.violations.size()},
                       {"sqrt_form_violations", r.sqrt_form_violations}}};
}

CheckResult manufactured(double alpha, double sigma) {
  const GreenParams params(alpha, sigma);
  ProblemSpec p(params, catalog_forcing("manufactured", params, 1.0));
  const auto result = solve(p, SolutionGrid::chebyshev(p.grid_points));
  double worst = 0.0;
  for (std::size_t i = 0; i < result.solution.size(); ++i) {
    const double t = result.solution.nodes()[i];
    worst = std::max(worst, std::abs(result.solution.values()[i] - manufactured_solution(params, t)));
  }
  return {"manufactured_solve[" + tag(alpha, sigma) + "]", worst <= 1e-6,
          ordered_json{{"sup_error", worst}, {"iterations", result.iterations}}};
}

}  // namespace

bool Report::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

ordered_json Report::to_json() const {
  ordered_json j;
  j["all_pass"] = all_pass();
  ordered_json list = ordered_json::array();
  for (const auto& c : checks) {
    list.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["checks"] = std::move(list);
  return j;
}

Report run_suite(const Options& o) {
  std::vector<std::function<CheckResult()>> tasks;
  std::uint64_t salt = 0;
  for (double alpha : kSweepAlphas) {
    const auto s = mix(o.seed, salt++);
    tasks.emplace_back([=] { return kernel_positivity(o, alpha, s); });
    tasks.emplace_back([=] { return kernel_boundary(o, alpha); });
    tasks.emplace_back([=] { return kernel_continuity(o, alpha); });
  }
  for (double alpha : kSweepAlphas) {
    for (double sigma : kSweepSigmas) {
      const auto s = mix(o.seed, salt++);
      tasks.emplace_back([=] { return L_consistency(o, alpha, sigma); });
      tasks.emplace_back([=] { return case1(o, alpha, sigma, s); });
      tasks.emplace_back([=] { return wardowski_solver(alpha, sigma, s); });
      tasks.emplace_back([=] { return manufactured(alpha, sigma); });
    }
  }
  {
    const auto s = mix(o.seed, salt++);
    tasks.emplace_back([=] { return beta_identities(s); });
  }
  for (double sigma : kSweepSigmas) {
    tasks.emplace_back([=] { return moments(sigma); });
  }
  for (auto id : {PhiId::NegInvSqrt, PhiId::Ln, PhiId::LnPlusT, PhiId::LnT2PlusT}) {
    const auto s = mix(o.seed, salt++);
    tasks.emplace_back([=] { return phi_class(id, s); });
  }
  tasks.emplace_back([] { return wardowski_reference(); });

  Report report;
  report.checks.resize(tasks.size());
  parallel_for(tasks.size(), o.threads, [&](std::size_t i) {
    try {
      report.checks[i] = tasks[i]();
    } catch (const std::exception& e) {
      report.checks[i] = {"task_" + std::to_string(i), false, ordered_json{{"error", e.what()}}};
    }
  });
  return report;
}

}  // namespace frak::verify
