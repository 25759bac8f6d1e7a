#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frak/forcing.hpp"
#include "frak/kernel.hpp"

namespace frak {

/// Everything that defines one boundary value problem and how to solve it.
struct ProblemSpec {
  ProblemSpec(GreenParams params, Forcing g) : params(params), g(std::move(g)) {}

  GreenParams params;
  Forcing g;
  /// Claimed λ of the Lipschitz-type condition; 1/N when absent.
  std::optional<double> lambda_claim;
  double tau = 1.0;
  int grid_points = 33;
  int quad_points = 48;
  double tol = 1e-10;
  int max_iters = 200;
  /// Upper end of the u-range sampled by the certificate and positivity checks.
  double u_max = 10.0;

  /// Throws ConfigError on out-of-range settings.
  void validate() const;
};

inline constexpr int kMinGridPoints = 3;
inline constexpr int kMaxGridPoints = 1025;

/// u sampled at Chebyshev–Lobatto points of [0,1], evaluated between nodes
/// by barycentric interpolation. The end values are exactly zero.
class SolutionGrid {
 public:
  /// Zero function on m nodes.
  static SolutionGrid chebyshev(int m);
  /// Interior nodes set to `value`, ends zero.
  static SolutionGrid filled(int m, double value);

  double operator()(double t) const;

  const std::vector<double>& nodes() const noexcept { return nodes_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::vector<double>& values() noexcept { return values_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Recorded d(u_{n+1}, u_n) of the iteration that produced this grid.
  std::vector<double> trace;

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> bary_;
};

/// Maximum nodal difference; the metric d restricted to the grid.
double sup_distance(const SolutionGrid& a, const SolutionGrid& b);

struct ContractionCertificate {
  double N = 0.0;
  double t_star = 0.0;
  double lambda_observed = 0.0;
  double lambda_claim = 0.0;
  double tau = 0.0;
  double u_max = 0.0;
  int samples = 0;
  bool pass = false;
};

/// Falsification check of t^σ|f(t,x)-f(t,y)| <= λ|x-y|/(1+τ√|x-y|)² on
/// random (t,x,y) with t on the grid and x,y in [0, u_max]. Requires
/// n_samples >= 1000.
ContractionCertificate certify_contraction(const ProblemSpec& p, int n_samples,
                                           std::uint64_t seed = 1);

class CertificateRefused : public std::runtime_error {
 public:
  explicit CertificateRefused(ContractionCertificate cert)
      : std::runtime_error("contraction certificate failed; refusing to iterate"),
        certificate(cert) {}
  ContractionCertificate certificate;
};

/// (Tu)(t_i) = ∫ G(t_i,s) s^{-σ} g(s, u(s)) ds at every node. u(s) is the
/// interpolant clipped at zero. Throws ConeViolation when an unsigned
/// forcing returns a negative value.
SolutionGrid apply_T(const SolutionGrid& u, const ProblemSpec& p, unsigned threads = 1);

/// Right-hand side of the fixed-point equation at an arbitrary t,
/// ∫ G(t,s) s^{-σ} g(s, u(s)) ds.
double nystrom_eval(const ProblemSpec& p, const SolutionGrid& u, double t);

struct SolveOptions {
  bool uncertified = false;
  int certificate_samples = 4096;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct SolveResult {
  SolutionGrid solution;
  ContractionCertificate certificate;
  bool certified = false;
  int iterations = 0;
};

/// Picard iteration u_{n+1} = T u_n from u0 until d(u_{n+1},u_n) <= tol.
/// Throws CertificateRefused (unless options.uncertified), NonConvergence
/// carrying the trace, or ConeViolation.
SolveResult solve(const ProblemSpec& p, const SolutionGrid& u0, const SolveOptions& options = {});

/// First n with a_{n+1} > a_n/(1+τ√a_n)² + slack, if any.
std::optional<std::size_t> recursion_violation(const std::vector<double>& trace, double tau,
                                               double slack);

enum class PositivityVerdict { VerifiedPositive, NotVerified };

std::string to_string(PositivityVerdict v);

struct PositivityReport {
  bool monotone_in_u = false;     // g(t,·) non-decreasing at every node
  int monotone_violations = 0;
  bool singular_at_zero = false;  // g(t,0) bounded away from 0 near t = 0
  double g0_min_near_zero = 0.0;
  double interior_min = 0.0;
  bool non_negative = false;
  PositivityVerdict verdict = PositivityVerdict::NotVerified;
};

/// Checks the hypotheses that make the solution strictly positive and the
/// interior minimum of u.
PositivityReport check_positivity(const ProblemSpec& p, const SolutionGrid& u);

struct ResidualPoint {
  double t;
  double derivative;  // Grünwald–Letnikov D^α u(t)
  double forcing;     // t^{-σ} g(t, u(t))
  double residual;
};

/// |D^α u(t) - t^{-σ} g(t,u(t))| with D^α approximated by the first-order
/// Grünwald–Letnikov sum of step h, at t = 0.20, 0.25, ..., 0.80.
/// Requires 1e-4 <= h <= 1e-2.
std::vector<ResidualPoint> residual_gl(const ProblemSpec& p, const SolutionGrid& u, double h);

/// Same, with u given as a function on [0,1].
std::vector<ResidualPoint> residual_gl(const ProblemSpec& p,
                                       const std::function<double(double)>& u, double h);

}  // namespace frak
