#include "frak/problem_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace frak::io {

using nlohmann::json;

namespace {

double get_number(const json& j, const char* key) {
  if (!j.is_number()) {
    throw ProblemFormatError(std::string("\"") + key + "\" must be a number");
  }
  return j.get<double>();
}

int get_integer(const json& j, const char* key) {
  if (!j.is_number_integer()) {
    throw ProblemFormatError(std::string("\"") + key + "\" must be an integer");
  }
  return j.get<int>();
}

}  // namespace

ProblemInput parse_problem_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the 1-based position of the offending byte
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ProblemFormatError("malformed problem JSON at offset " + std::to_string(offset) + ": " +
                             e.what());
  }
  if (!j.is_object()) {
    throw ProblemFormatError("problem file must hold a JSON object");
  }
  static const std::set<std::string> known = {"alpha", "sigma",       "g",           "lambda",
                                              "tau",   "grid_points", "quad_points", "tol",
                                              "max_iters", "u_max"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) {
      throw ProblemFormatError("unknown key \"" + key + "\" in problem file");
    }
  }
  ProblemInput in;
  if (j.contains("alpha")) in.alpha = get_number(j["alpha"], "alpha");
  if (j.contains("sigma")) in.sigma = get_number(j["sigma"], "sigma");
  if (j.contains("lambda")) in.lambda = get_number(j["lambda"], "lambda");
  if (j.contains("tau")) in.tau = get_number(j["tau"], "tau");
  if (j.contains("tol")) in.tol = get_number(j["tol"], "tol");
  if (j.contains("u_max")) in.u_max = get_number(j["u_max"], "u_max");
  if (j.contains("grid_points")) in.grid_points = get_integer(j["grid_points"], "grid_points");
  if (j.contains("quad_points")) in.quad_points = get_integer(j["quad_points"], "quad_points");
  if (j.contains("max_iters")) in.max_iters = get_integer(j["max_iters"], "max_iters");
  if (j.contains("g")) {
    if (!j["g"].is_string()) throw ProblemFormatError("\"g\" must be a string");
    in.g = j["g"].get<std::string>();
  }
  return in;
}

ProblemInput read_problem_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    throw ProblemFormatError("cannot open problem file " + path.string());
  }
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_problem_json(ss.str());
}

ProblemInput merge(ProblemInput base, const ProblemInput& o) {
  auto take = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  take(base.alpha, o.alpha);
  take(base.sigma, o.sigma);
  take(base.lambda, o.lambda);
  take(base.tau, o.tau);
  take(base.tol, o.tol);
  take(base.u_max, o.u_max);
  take(base.g, o.g);
  take(base.grid_points, o.grid_points);
  take(base.quad_points, o.quad_points);
  take(base.max_iters, o.max_iters);
  return base;
}

ProblemSpec build_problem(const ProblemInput& in) {
  if (!in.alpha || !in.sigma) {
    throw ProblemFormatError("problem needs both alpha and sigma");
  }
  if (!in.g) {
    throw ProblemFormatError("problem needs a forcing \"g\"");
  }
  const GreenParams params(*in.alpha, *in.sigma);
  const double tau = in.tau.value_or(1.0);
  ProblemSpec p(params, resolve_forcing(*in.g, params, tau));
  p.tau = tau;
  p.lambda_claim = in.lambda;
  if (in.tol) p.tol = *in.tol;
  if (in.u_max) p.u_max = *in.u_max;
  if (in.grid_points) p.grid_points = *in.grid_points;
  if (in.quad_points) p.quad_points = *in.quad_points;
  if (in.max_iters) p.max_iters = *in.max_iters;
  p.validate();
  return p;
}

std::string format_number(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

void write_solution_csv(std::ostream& os, const SolutionGrid& u) {
  os << "t,u\n";
  for (std::size_t i = 0; i < u.size(); ++i) {
    os << format_number(u.nodes()[i]) << ',' << format_number(u.values()[i]) << '\n';
  }
}

void write_trace_csv(std::ostream& os, const std::vector<double>& trace) {
  os << "iter,delta\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    os << (i + 1) << ',' << format_number(trace[i]) << '\n';
  }
}

void write_residual_csv(std::ostream& os, const std::vector<ResidualPoint>& r) {
  os << "t,derivative,forcing,residual\n";
  for (const auto& pt : r) {
    os << format_number(pt.t) << ',' << format_number(pt.derivative) << ','
       << format_number(pt.forcing) << ',' << format_number(pt.residual) << '\n';
  }
}

nlohmann::ordered_json to_json(const ContractionCertificate& c) {
  nlohmann::ordered_json j;
  j["kind"] = "sampled falsification check";
  j["N"] = c.N;
  j["t_star"] = c.t_star;
  j["lambda_observed"] = c.lambda_observed;
  j["lambda_claim"] = c.lambda_claim;
  j["lambda_times_N"] = c.lambda_claim * c.N;
  j["tau"] = c.tau;
  j["u_max"] = c.u_max;
  j["samples"] = c.samples;
  j["verdict"] = c.pass ? "pass" : "fail";
  return j;
}

nlohmann::ordered_json to_json(const PositivityReport& r) {
  nlohmann::ordered_json j;
  j["monotone_in_u"] = r.monotone_in_u;
  j["monotone_violations"] = r.monotone_violations;
  j["singular_at_zero"] = r.singular_at_zero;
  j["g0_min_near_zero"] = r.g0_min_near_zero;
  j["interior_min"] = r.interior_min;
  j["non_negative"] = r.non_negative;
  j["verdict"] = to_string(r.verdict);
  return j;
}

nlohmann::ordered_json solution_json(const SolutionGrid& u) {
  nlohmann::ordered_json j;
  j["t"] = u.nodes();
  j["u"] = u.values();
  return j;
}

nlohmann::ordered_json trace_json(const std::vector<double>& trace) {
  nlohmann::ordered_json j;
  j["delta"] = trace;
  return j;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) {
    throw std::runtime_error("cannot write " + path.string());
  }
  os << contents;
  if (!os) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

}  // namespace frak::io
