#include "frak/fcontraction.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "frak/errors.hpp"
#include "frak/parallel.hpp"

namespace frak {

double PhiFunction::operator()(double t) const {
  switch (id) {
    case PhiId::NegInvSqrt: return -1.0 / std::sqrt(t);
    case PhiId::Ln: return std::log(t);
    case PhiId::LnPlusT: return std::log(t) + t;
    case PhiId::LnT2PlusT: return std::log(t * t + t);
  }
  return 0.0;
}

PhiFunction phi_catalog(PhiId id) {
  switch (id) {
    case PhiId::NegInvSqrt: return {id, "neg_inv_sqrt", 0.75};
    case PhiId::Ln: return {id, "ln", 0.5};
    case PhiId::LnPlusT: return {id, "ln_plus_t", 0.5};
    case PhiId::LnT2PlusT: return {id, "ln_t2_plus_t", 0.5};
  }
  throw std::invalid_argument("unknown phi id");
}

PhiFunction phi_catalog(std::string_view name) {
  for (auto id : {PhiId::NegInvSqrt, PhiId::Ln, PhiId::LnPlusT, PhiId::LnT2PlusT}) {
    auto phi = phi_catalog(id);
    if (phi.name == name) return phi;
  }
  throw std::invalid_argument("unknown phi function '" + std::string(name) + "'");
}

PhiClassReport verify_phi_class(const PhiFunction& phi, int n_samples, std::uint64_t seed) {
  if (n_samples < 1000) {
    throw ConfigError("verify_phi_class needs at least 1000 samples");
  }
  PhiClassReport report;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> ts(n_samples);
  for (auto& t : ts) {
    t = 100.0 * (1.0 - unit(rng));  // (0, 100]
  }
  std::sort(ts.begin(), ts.end());
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (ts[i] > ts[i - 1] && !(phi(ts[i]) > phi(ts[i - 1]))) {
      ++report.monotone_violations;
    }
  }
  report.increasing = report.monotone_violations == 0;

  // (b): from some depth on, φ(2^{-n}) stays below -B
  int last_above = 0;
  for (int n = 1; n <= kDivergenceDepth; ++n) {
    if (!(phi(std::ldexp(1.0, -n)) < -kDivergenceBound)) last_above = n;
  }
  report.phi_at_depth = phi(std::ldexp(1.0, -kDivergenceDepth));
  report.diverges = last_above < kDivergenceDepth;

  const double t = std::ldexp(1.0, -kWitnessDepth);
  report.k_probe = std::abs(std::pow(t, phi.k_witness) * phi(t));
  report.k_limit = report.k_probe <= kWitnessEpsilon;
  return report;
}

void check_metric_axioms(const std::vector<std::vector<double>>& d) {
  const std::size_t n = d.size();
  double scale = 0.0;
  for (const auto& row : d) {
    if (row.size() != n) throw MetricAxiomError("distance matrix is not square");
    for (double v : row) scale = std::max(scale, std::abs(v));
  }
  const double tol = 1e-12 * std::max(1.0, scale);
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i][i] != 0.0) {
      throw MetricAxiomError("d(x,x) != 0 at point " + std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!(d[i][j] >= 0.0)) throw MetricAxiomError("negative or undefined distance");
      if (std::abs(d[i][j] - d[j][i]) > tol) {
        throw MetricAxiomError("asymmetric distance between points " + std::to_string(i) +
                               " and " + std::to_string(j));
      }
    }
  }
  auto triangle = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (d[i][k] > d[i][j] + d[j][k] + tol) {
      throw MetricAxiomError("triangle inequality fails for points " + std::to_string(i) + ", " +
                             std::to_string(j) + ", " + std::to_string(k));
    }
  };
  if (n <= 48) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) triangle(i, j, k);
    return;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int s = 0; s < 100000; ++s) {
    triangle(pick(rng), pick(rng), pick(rng));
  }
}

ConeSamplingReport sample_cone_contraction(const ProblemSpec& p, std::size_t n_pairs,
                                           std::uint64_t seed, double tolerance,
                                           unsigned threads) {
  p.validate();
  const std::size_t n_points = std::clamp<std::size_t>(n_pairs / 5, 16, 400);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<SolutionGrid> points;
  points.reserve(n_points);
  for (std::size_t k = 0; k < n_points; ++k) {
    auto g = SolutionGrid::chebyshev(p.grid_points);
    auto& v = g.values();
    const double amplitude = p.u_max * unit(rng);
    if (k % 2 == 0) {
      const double freq = 1.0 + 4.0 * unit(rng);
      const double phase = 6.283185307179586 * unit(rng);
      for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        v[i] = amplitude * 0.5 * (1.0 + std::sin(6.283185307179586 * freq * g.nodes()[i] + phase));
      }
    } else {
      for (std::size_t i = 1; i + 1 < v.size(); ++i) v[i] = amplitude * unit(rng);
    }
    points.push_back(std::move(g));
  }

  std::set<std::pair<std::size_t, std::size_t>> chosen;
  const std::size_t max_pairs = n_points * (n_points - 1) / 2;
  std::uniform_int_distribution<std::size_t> pick(0, n_points - 1);
  while (chosen.size() < std::min(n_pairs, max_pairs)) {
    auto i = pick(rng);
    auto j = pick(rng);
    if (i == j) continue;
    chosen.emplace(std::min(i, j), std::max(i, j));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs(chosen.begin(), chosen.end());

  // Points and their images share one index space: k < n is a sampled
  // cone element, n + k is T applied to it.
  std::vector<SolutionGrid> all(2 * n_points);
  for (std::size_t k = 0; k < n_points; ++k) all[k] = points[k];
  parallel_for(n_points, threads, [&](std::size_t k) { all[n_points + k] = apply_T(points[k], p); });

  std::vector<std::size_t> ids(n_points);
  for (std::size_t k = 0; k < n_points; ++k) ids[k] = k;
  const std::function<std::size_t(const std::size_t&)> T = [n_points](const std::size_t& k) {
    return n_points + k;
  };
  const std::function<double(const std::size_t&, const std::size_t&)> dist =
      [&all](const std::size_t& a, const std::size_t& b) { return sup_distance(all[a], all[b]); };

  ConeSamplingReport report;
  report.wardowski =
      verify_wardowski(ids, T, dist, p.tau, phi_catalog(PhiId::NegInvSqrt), pairs, tolerance);

  for (const auto& [i, j] : pairs) {
    const double d = sup_distance(points[i], points[j]);
    const double dt = sup_distance(all[n_points + i], all[n_points + j]);
    if (std::sqrt(dt) > std::sqrt(d) / (1.0 + p.tau * std::sqrt(d)) + tolerance) {
      ++report.sqrt_form_violations;
    }
  }
  return report;
}

}  // namespace frak
