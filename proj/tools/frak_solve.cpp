// frak-solve: solve, inspect and verify the clamped singular fractional
// boundary value problem D^α u = f(t,u), u(0)=u(1)=u'(0)=u'(1)=0.
//
// Exit codes: 0 success, 1 bad input, 2 certificate failure,
// 3 non-convergence, 4 verification failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "frak/errors.hpp"
#include "frak/kernel.hpp"
#include "frak/parallel.hpp"
#include "frak/problem_io.hpp"
#include "frak/quadrature.hpp"
#include "frak/solver.hpp"
#include "frak/verify.hpp"

namespace fs = std::filesystem;
using namespace frak;

namespace {

enum Exit { kOk = 0, kInput = 1, kCertificate = 2, kNonConvergence = 3, kVerify = 4 };

struct SolveArgs {
  std::string problem;
  io::ProblemInput flags;
  std::string out = ".";
  std::string format = "csv";
  bool uncertified = false;
  std::uint64_t seed = 1;
  double u0 = 0.0;
  double residual_h = 1e-3;
};

struct KernelArgs {
  double alpha = 0.0;
  double sigma = 0.0;
  int grid = 33;
  int quad = 48;
  std::string out = ".";
};

struct VerifyArgs {
  std::uint64_t seed = 1;
  double perturb = 0.0;
  int samples = 100000;
  std::string out = ".";
};

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir + ": " + ec.message());
}

int cmd_solve(const SolveArgs& a) {
  io::ProblemInput input;
  if (!a.problem.empty()) input = io::read_problem_file(a.problem);
  input = io::merge(input, a.flags);
  const ProblemSpec p = io::build_problem(input);
  if (!(a.u0 >= 0.0)) throw ConfigError("--u0 must be non-negative");

  ensure_dir(a.out);
  const fs::path out(a.out);
  SolveOptions options;
  options.uncertified = a.uncertified;
  options.seed = a.seed;
  options.threads = thread_cap_from_env(1);

  SolveResult result;
  try {
    result = solve(p, SolutionGrid::filled(p.grid_points, a.u0), options);
  } catch (const CertificateRefused& e) {
    io::write_file(out / "certificate.json", io::to_json(e.certificate).dump(2) + "\n");
    std::cerr << "error: " << e.what() << " (lambda_observed=" << e.certificate.lambda_observed
              << ", lambda*N=" << e.certificate.lambda_claim * e.certificate.N
              << "); pass --uncertified to iterate anyway\n";
    return kCertificate;
  } catch (const NonConvergence& e) {
    std::ostringstream trace;
    io::write_trace_csv(trace, e.trace);
    io::write_file(out / "trace.csv", trace.str());
    std::cerr << "error: " << e.what() << "\n";
    return kNonConvergence;
  }

  const auto& u = result.solution;
  if (a.format == "json") {
    io::write_file(out / "solution.json", io::solution_json(u).dump(2) + "\n");
    io::write_file(out / "trace.json", io::trace_json(u.trace).dump(2) + "\n");
  } else {
    std::ostringstream sol, trace;
    io::write_solution_csv(sol, u);
    io::write_trace_csv(trace, u.trace);
    io::write_file(out / "solution.csv", sol.str());
    io::write_file(out / "trace.csv", trace.str());
  }
  io::write_file(out / "certificate.json", io::to_json(result.certificate).dump(2) + "\n");
  const auto positivity = check_positivity(p, u);
  io::write_file(out / "positivity.json", io::to_json(positivity).dump(2) + "\n");
  std::ostringstream residual;
  io::write_residual_csv(residual, residual_gl(p, u, a.residual_h));
  io::write_file(out / "residual.csv", residual.str());

  std::cout << "converged in " << result.iterations << " iterations"
            << (result.certified ? "" : " (uncertified)") << "\n"
            << "N = " << io::format_number(result.certificate.N) << "\n"
            << "solution: " << to_string(positivity.verdict)
            << (positivity.non_negative ? ", non-negative" : "") << "\n";
  return kOk;
}

int cmd_kernel(const KernelArgs& a) {
  const GreenParams params(a.alpha, a.sigma);
  if (a.grid < 2) throw ConfigError("--grid must be at least 2");
  if (a.quad < 1 || a.quad > kMaxRulePoints) throw ConfigError("--quad must lie in [1,256]");
  ensure_dir(a.out);
  const fs::path out(a.out);

  std::ostringstream green;
  green << "t,s,G\n";
  for (int i = 0; i < a.grid; ++i) {
    const double t = static_cast<double>(i) / (a.grid - 1);
    for (int j = 0; j < a.grid; ++j) {
      const double s = static_cast<double>(j) / (a.grid - 1);
      green << io::format_number(t) << ',' << io::format_number(s) << ','
            << io::format_number(green_eval(params, t, s)) << '\n';
    }
  }
  io::write_file(out / "green.csv", green.str());

  std::ostringstream L;
  L << "t,L_closed,L_quadrature\n";
  for (int i = 0; i < a.grid; ++i) {
    const double t = static_cast<double>(i) / (a.grid - 1);
    const double quad = integrate_green(params, t, [](double) { return 1.0; }, a.quad);
    L << io::format_number(t) << ',' << io::format_number(L_closed(params, t)) << ','
      << io::format_number(quad) << '\n';
  }
  io::write_file(out / "L.csv", L.str());

  const auto [N, t_star] = constant_N(params);
  std::cout << "N = " << io::format_number(N) << "\n"
            << "t_star = " << io::format_number(t_star) << "\n";
  return kOk;
}

int cmd_verify(const VerifyArgs& a) {
  verify::Options o;
  o.seed = a.seed;
  o.kernel_perturbation = a.perturb;
  o.kernel_samples = a.samples;
  o.threads = thread_cap_from_env(1);
  if (a.samples < 1) throw ConfigError("--samples must be positive");

  const auto report = verify::run_suite(o);
  ensure_dir(a.out);
  io::write_file(fs::path(a.out) / "verify.json", report.to_json().dump(2) + "\n");
  int failed = 0;
  for (const auto& c : report.checks) {
    if (!c.pass) {
      ++failed;
      std::cout << "FAIL " << c.name << "\n";
    }
  }
  std::cout << (report.checks.size() - failed) << "/" << report.checks.size()
            << " checks passed\n";
  return report.all_pass() ? kOk : kVerify;
}

template <class T>
void optional_flag(CLI::App* app, const std::string& name, std::optional<T>& target,
                   const std::string& help) {
  app->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver and verification toolkit for singular fractional BVPs"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a problem by Picard iteration");
  solve_cmd->add_option("--problem,-p", solve_args.problem, "JSON problem file");
  optional_flag(solve_cmd, "--alpha", solve_args.flags.alpha, "Fractional order in (3,4]");
  optional_flag(solve_cmd, "--sigma", solve_args.flags.sigma, "Singularity exponent in (0,1)");
  optional_flag(solve_cmd, "--g", solve_args.flags.g,
                "Regularized nonlinearity t^sigma f(t,u), or catalog:<id>");
  optional_flag(solve_cmd, "--lambda", solve_args.flags.lambda, "Claimed Lipschitz constant");
  optional_flag(solve_cmd, "--tau", solve_args.flags.tau, "tau > 0");
  optional_flag(solve_cmd, "--tol", solve_args.flags.tol, "Sup-norm stopping tolerance");
  optional_flag(solve_cmd, "--grid", solve_args.flags.grid_points, "Chebyshev grid points");
  optional_flag(solve_cmd, "--quad", solve_args.flags.quad_points, "Points per quadrature panel");
  optional_flag(solve_cmd, "--max-iters", solve_args.flags.max_iters, "Iteration cap");
  optional_flag(solve_cmd, "--u-max", solve_args.flags.u_max, "Certificate sampling range");
  solve_cmd->add_option("--out,-o", solve_args.out, "Output directory");
  solve_cmd->add_option("--format", solve_args.format, "Solution format")
      ->check(CLI::IsMember({"csv", "json"}));
  solve_cmd->add_flag("--uncertified", solve_args.uncertified,
                      "Iterate even if the contraction certificate fails");
  solve_cmd->add_option("--seed", solve_args.seed, "Certificate sampling seed");
  solve_cmd->add_option("--u0", solve_args.u0, "Constant initial guess on interior nodes");
  solve_cmd->add_option("--residual-h", solve_args.residual_h, "Grünwald–Letnikov step");

  KernelArgs kernel_args;
  auto* kernel_cmd = app.add_subcommand("kernel", "Dump G(t,s), L(t) and the constant N");
  kernel_cmd->add_option("--alpha", kernel_args.alpha, "Fractional order in (3,4]")->required();
  kernel_cmd->add_option("--sigma", kernel_args.sigma, "Singularity exponent in (0,1)")
      ->required();
  kernel_cmd->add_option("--grid", kernel_args.grid, "Points per axis");
  kernel_cmd->add_option("--quad", kernel_args.quad, "Points per quadrature panel");
  kernel_cmd->add_option("--out,-o", kernel_args.out, "Output directory");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite over the sweep");
  verify_cmd->add_option("--seed", verify_args.seed, "Sampling seed");
  verify_cmd->add_option("--perturb-kernel", verify_args.perturb,
                         "Test hook: shift kernel values by -eps");
  verify_cmd->add_option("--samples", verify_args.samples, "Kernel positivity samples per alpha");
  verify_cmd->add_option("--out,-o", verify_args.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_args);
    if (kernel_cmd->parsed()) return cmd_kernel(kernel_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
