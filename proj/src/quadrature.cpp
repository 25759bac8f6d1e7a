#include "frak/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>

#include "frak/errors.hpp"

namespace frak {

void tridiagonal_eigen(std::vector<double>& diag, std::vector<double> offdiag,
                       std::vector<double>& first) {
  const std::size_t n = diag.size();
  first.assign(n, 0.0);
  if (n == 0) {
    return;
  }
  first[0] = 1.0;
  offdiag.resize(n, 0.0);  // offdiag[i] couples i and i+1, offdiag[n-1] = 0
  auto& d = diag;
  auto& e = offdiag;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) {
          break;
        }
      }
      if (m != l) {
        if (++iterations > 60) {
          throw std::runtime_error("tridiagonal_eigen: QL iteration did not converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool deflated = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            deflated = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = first[i + 1];
          first[i + 1] = s * first[i] + c * f;
          first[i] = c * first[i] - s * f;
        }
        if (deflated) {
          continue;
        }
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&d](std::size_t i, std::size_t j) { return d[i] < d[j]; });
  std::vector<double> sd(n), sf(n);
  for (std::size_t k = 0; k < n; ++k) {
    sd[k] = d[order[k]];
    sf[k] = first[order[k]];
  }
  diag = std::move(sd);
  first = std::move(sf);
}

namespace {

// Gauss rule on [0,1] for weight x^{b} (b > -1), built from the Jacobi
// polynomials P^{(0,b)} on [-1,1] mapped by x = (ξ+1)/2.
QuadRule gauss_rule(int n, double b) {
  if (n < 1 || n > kMaxRulePoints) {
    throw ConfigError("quadrature rule size must lie in [1," + std::to_string(kMaxRulePoints) +
                      "], got " + std::to_string(n));
  }
  const double a = 0.0;
  const double ab = a + b;
  std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) {
    const double kk = k;
    double alpha_k;
    if (k == 0) {
      alpha_k = (b - a) / (ab + 2.0);
    } else {
      alpha_k = (b * b - a * a) / ((2.0 * kk + ab) * (2.0 * kk + ab + 2.0));
    }
    diag[k] = 0.5 * (alpha_k + 1.0);
  }
  for (int k = 1; k < n; ++k) {
    const double kk = k;
    const double den = (2.0 * kk + ab);
    const double beta_k = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) /
                          (den * den * (den + 1.0) * (den - 1.0));
    off[k - 1] = 0.5 * std::sqrt(beta_k);
  }
  std::vector<double> first;
  tridiagonal_eigen(diag, off, first);

  const double mu0 = 1.0 / (1.0 + b);  // ∫₀¹ x^b dx
  QuadRule rule;
  rule.exponent_b = b;
  rule.nodes = std::move(diag);
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    rule.weights[k] = mu0 * first[k] * first[k];
  }
  return rule;
}

struct RuleCache {
  std::shared_mutex mutex;
  std::map<std::pair<int, double>, std::shared_ptr<const QuadRule>> rules;
};

RuleCache& rule_cache() {
  static RuleCache cache;
  return cache;
}

}  // namespace

QuadRule jacobi_rule(int n, double sigma) {
  if (!(sigma > 0.0 && sigma < 1.0)) {
    throw DomainError("jacobi_rule: sigma must lie in (0,1), got " + std::to_string(sigma));
  }
  return gauss_rule(n, -sigma);
}

QuadRule legendre_rule(int n) { return gauss_rule(n, 0.0); }

std::shared_ptr<const QuadRule> cached_rule(int n, double exponent) {
  if (!(exponent > -1.0 && exponent <= 0.0)) {
    throw DomainError("cached_rule: exponent must lie in (-1,0], got " + std::to_string(exponent));
  }
  auto& cache = rule_cache();
  const auto key = std::make_pair(n, exponent);
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.rules.find(key); it != cache.rules.end()) {
      return it->second;
    }
  }
  auto rule = std::make_shared<const QuadRule>(gauss_rule(n, exponent));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.rules.emplace(key, std::move(rule));
  return it->second;
}

QuadRule mapped(const QuadRule& rule, double a, double b) {
  if (!(b > a)) {
    throw DomainError("mapped: empty interval");
  }
  QuadRule out;
  out.exponent_b = rule.exponent_b;
  out.a = a;
  out.b = b;
  const double len = b - a;
  const double scale = std::pow(len, 1.0 + rule.exponent_b);
  out.nodes.reserve(rule.size());
  out.weights.reserve(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    out.nodes.push_back(a + len * rule.nodes[i]);
    out.weights.push_back(scale * rule.weights[i]);
  }
  return out;
}

}  // namespace frak
