#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frak/solver.hpp"

namespace frak::io {

/// Malformed problem file; the message carries the byte offset when the
/// JSON itself does not parse.
class ProblemFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw problem settings as read from a file or flags, before validation.
struct ProblemInput {
  std::optional<double> alpha, sigma, lambda, tau, tol, u_max;
  std::optional<std::string> g;
  std::optional<int> grid_points, quad_points, max_iters;
};

/// Problem file: {"alpha", "sigma", "g", "lambda", "tau", "grid_points",
/// "quad_points", "tol", "max_iters"} plus optional "u_max". Unknown keys
/// are rejected.
ProblemInput parse_problem_json(std::string_view text);
ProblemInput read_problem_file(const std::filesystem::path& path);

/// Fields set in `overrides` win.
ProblemInput merge(ProblemInput base, const ProblemInput& overrides);

/// Needs alpha, sigma and g; everything else falls back to ProblemSpec
/// defaults. "g" is either "catalog:<id>" or an expression in t and u.
ProblemSpec build_problem(const ProblemInput& in);

/// Shortest text that round-trips the double.
std::string format_number(double x);

void write_solution_csv(std::ostream& os, const SolutionGrid& u);        // t,u
void write_trace_csv(std::ostream& os, const std::vector<double>& trace);  // iter,delta
void write_residual_csv(std::ostream& os, const std::vector<ResidualPoint>& r);

nlohmann::ordered_json to_json(const ContractionCertificate& c);
nlohmann::ordered_json to_json(const PositivityReport& r);
nlohmann::ordered_json solution_json(const SolutionGrid& u);
nlohmann::ordered_json trace_json(const std::vector<double>& trace);

/// Writes `contents` to `path`, throwing std::runtime_error on failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace frak::io
