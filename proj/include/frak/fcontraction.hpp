#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frak/solver.hpp"

namespace frak {

enum class PhiId { NegInvSqrt, Ln, LnPlusT, LnT2PlusT };

/// A member of the class 𝔉: strictly increasing on (0,∞), φ(t_n) → -∞
/// exactly when t_n → 0, and t^k φ(t) → 0 as t → 0⁺ for the witness k.
struct PhiFunction {
  PhiId id;
  std::string name;
  double k_witness;

  double operator()(double t) const;
};

/// Catalog entries ship with their witness: neg_inv_sqrt k = 3/4, the
/// logarithmic ones k = 1/2.
PhiFunction phi_catalog(PhiId id);
/// Lookup by name ("neg_inv_sqrt", "ln", "ln_plus_t", "ln_t2_plus_t");
/// throws std::invalid_argument for anything else.
PhiFunction phi_catalog(std::string_view name);

struct PhiClassReport {
  bool increasing = false;   // (a)
  bool diverges = false;     // (b), forward direction on the dyadic sequence
  bool k_limit = false;      // (c)
  int monotone_violations = 0;
  double phi_at_depth = 0.0;  // φ(2^{-depth})
  double k_probe = 0.0;       // |t^k φ(t)| at t = 2^{-40}
  bool pass() const noexcept { return increasing && diverges && k_limit; }
};

// Limit conditions are checked on finite dyadic sequences: falsification
// checks, not proofs.
inline constexpr int kDivergenceDepth = 1000;     // t = 2^{-1000} is still a normal double
inline constexpr double kDivergenceBound = 500.0;
inline constexpr int kWitnessDepth = 40;
inline constexpr double kWitnessEpsilon = 1e-3;

/// Requires n_samples >= 1000.
PhiClassReport verify_phi_class(const PhiFunction& phi, int n_samples, std::uint64_t seed = 1);

struct WardowskiViolation {
  std::size_t i, j;
  double d_xy, d_txy;
  double lhs, rhs;  // τ + φ(d(Tx,Ty)),  φ(d(x,y))
};

struct WardowskiReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;  // pairs with d(Tx,Ty) = 0
  std::vector<WardowskiViolation> violations;
  bool pass() const noexcept { return violations.empty(); }
};

/// Checks τ + φ(d(Tx,Ty)) <= φ(d(x,y)) + tolerance for every listed pair
/// with d(Tx,Ty) > 0. `dist` must be a metric on the points; symmetry,
/// identity and (on a deterministic subsample) the triangle inequality are
/// checked first, and a violation throws MetricAxiomError.
template <class X>
WardowskiReport verify_wardowski(const std::vector<X>& points,
                                 const std::function<X(const X&)>& T,
                                 const std::function<double(const X&, const X&)>& dist,
                                 double tau, const PhiFunction& phi,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                 double tolerance = 1e-12);

/// Precheck of the metric axioms on a finite point set given as a
/// distance matrix.
void check_metric_axioms(const std::vector<std::vector<double>>& d);

/// The solver's T on random non-negative grid functions with
/// φ(t) = -1/√t: Wardowski inequality on n_pairs pairs plus the
/// square-root form √d(Tu,Tv) <= √d(u,v)/(1+τ√d(u,v)).
struct ConeSamplingReport {
  WardowskiReport wardowski;
  std::size_t sqrt_form_violations = 0;
};

ConeSamplingReport sample_cone_contraction(const ProblemSpec& p, std::size_t n_pairs,
                                           std::uint64_t seed, double tolerance,
                                           unsigned threads = 1);

// ---------------------------------------------------------------------------

template <class X>
WardowskiReport verify_wardowski(const std::vector<X>& points,
                                 const std::function<X(const X&)>& T,
                                 const std::function<double(const X&, const X&)>& dist,
                                 double tau, const PhiFunction& phi,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                 double tolerance) {
  const std::size_t n = points.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d[i][j] = dist(points[i], points[j]);
    }
  }
  check_metric_axioms(d);

  std::vector<X> images;
  images.reserve(n);
  for (const auto& x : points) images.push_back(T(x));

  WardowskiReport report;
  for (const auto& [i, j] : pairs) {
    const double dt = dist(images.at(i), images.at(j));
    if (!(dt > 0.0)) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    const double lhs = tau + phi(dt);
    const double rhs = phi(d[i][j]);
    if (!(lhs <= rhs + tolerance)) {
      report.violations.push_back({i, j, d[i][j], dt, lhs, rhs});
    }
  }
  return report;
}

}  // namespace frak
