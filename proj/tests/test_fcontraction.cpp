#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "frak/errors.hpp"
#include "frak/fcontraction.hpp"
#include "frak/forcing.hpp"

using namespace frak;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

const std::function<double(const double&, const double&)> abs_dist = [](const double& a,
                                                                        const double& b) {
  return std::abs(a - b);
};

}  // namespace

TEST_CASE("phi catalog values") {
  CHECK(phi_catalog(PhiId::NegInvSqrt)(4.0) == -0.5);
  CHECK(phi_catalog(PhiId::Ln)(1.0) == 0.0);
  CHECK(phi_catalog(PhiId::LnPlusT)(1.0) == 1.0);
  CHECK(phi_catalog(PhiId::LnT2PlusT)(1.0) == doctest::Approx(std::log(2.0)));
  CHECK(phi_catalog("ln_plus_t").id == PhiId::LnPlusT);
  CHECK(phi_catalog("neg_inv_sqrt").k_witness == 0.75);
  CHECK_THROWS_AS(phi_catalog("sqrt"), std::invalid_argument);
}

TEST_CASE("catalog members belong to the class") {
  for (auto id : {PhiId::NegInvSqrt, PhiId::Ln, PhiId::LnPlusT, PhiId::LnT2PlusT}) {
    const auto phi = phi_catalog(id);
    CAPTURE(phi.name);
    const auto r = verify_phi_class(phi, 10000, 3);
    CHECK(r.increasing);
    CHECK(r.diverges);
    CHECK(r.k_limit);
    CHECK(r.pass());
  }
  CHECK_THROWS_AS(verify_phi_class(phi_catalog(PhiId::Ln), 999), ConfigError);
}

TEST_CASE("wrong witness exponent is caught") {
  auto phi = phi_catalog(PhiId::NegInvSqrt);
  phi.k_witness = 0.25;  // t^{1/4} t^{-1/2} blows up
  const auto r = verify_phi_class(phi, 1000);
  CHECK(r.increasing);
  CHECK(r.diverges);
  CHECK_FALSE(r.k_limit);
  CHECK_FALSE(r.pass());
}

TEST_CASE("wardowski on reference maps") {
  std::vector<double> xs;
  for (int i = 0; i < 20; ++i) xs.push_back(0.1 * i);
  const auto pairs = all_pairs(xs.size());
  const auto phi = phi_catalog(PhiId::Ln);

  const std::function<double(const double&)> identity = [](const double& x) { return x; };
  const auto id_report = verify_wardowski(xs, identity, abs_dist, 0.5, phi, pairs);
  CHECK_FALSE(id_report.pass());
  CHECK(id_report.violations.size() == pairs.size());

  const std::function<double(const double&)> constant = [](const double&) { return 3.0; };
  const auto c_report = verify_wardowski(xs, constant, abs_dist, 0.5, phi, pairs);
  CHECK(c_report.pass());
  CHECK(c_report.checked == 0);
  CHECK(c_report.skipped == pairs.size());

  // x/2 under ln: τ + ln(d/2) <= ln d  iff  τ <= ln 2
  const std::function<double(const double&)> half = [](const double& x) { return x / 2; };
  CHECK(verify_wardowski(xs, half, abs_dist, 0.69, phi, pairs).pass());
  CHECK_FALSE(verify_wardowski(xs, half, abs_dist, 0.70, phi, pairs).pass());
}

TEST_CASE("metric precheck") {
  CHECK_NOTHROW(check_metric_axioms({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
  CHECK_THROWS_AS(check_metric_axioms({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}), MetricAxiomError);
  CHECK_THROWS_AS(check_metric_axioms({{0, 1}, {2, 0}}), MetricAxiomError);
  CHECK_THROWS_AS(check_metric_axioms({{1, 1}, {1, 0}}), MetricAxiomError);

  std::vector<double> xs{0.0, 1.0, 2.0};
  const std::function<double(const double&, const double&)> squared = [](const double& a,
                                                                         const double& b) {
    return (a - b) * (a - b);
  };
  const std::function<double(const double&)> identity = [](const double& x) { return x; };
  CHECK_THROWS_AS(verify_wardowski(xs, identity, squared, 0.1, phi_catalog(PhiId::Ln),
                                   all_pairs(3)),
                  MetricAxiomError);
}

TEST_CASE("solver operator is an F-contraction on sampled cone elements") {
  const GreenParams params(3.5, 0.5);
  ProblemSpec p(params, catalog_forcing("contraction", params, 1.0));
  const auto r = sample_cone_contraction(p, 1000, 11, 1e-9);
  CHECK(r.wardowski.pass());
  CHECK(r.wardowski.checked + r.wardowski.skipped == 1000);
  CHECK(r.wardowski.checked > 900);
  CHECK(r.sqrt_form_violations == 0);

  const auto again = sample_cone_contraction(p, 1000, 11, 1e-9, 4);
  CHECK(again.wardowski.checked == r.wardowski.checked);
}
