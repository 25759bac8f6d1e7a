#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace frak::expr {

enum class Op { Number, VarT, VarU, Neg, Add, Sub, Mul, Div, Pow, Sqrt, Ln, Exp, Atan, Abs, PowFn };

struct Node {
  Op op = Op::Number;
  double value = 0.0;
  std::size_t position = 0;
  std::vector<std::shared_ptr<const Node>> args;
};

/// Immutable arithmetic expression over the variables t and u.
///
/// Grammar, loosest to tightest: `+ -`, `* /`, unary minus, `^` (right
/// associative). Functions: sqrt, ln, exp, atan, abs, pow(a, b).
class Expression {
 public:
  /// Throws SyntaxError (with byte offset) or UnknownIdentifier.
  static Expression parse(std::string_view text);

  /// Throws EvalError when an intermediate leaves its domain or is not finite.
  double eval(double t, double u) const;

  /// Fully parenthesized text that re-parses to an equivalent tree.
  std::string print() const;

  bool depends_on_u() const noexcept { return uses_u_; }
  const std::string& source() const noexcept { return source_; }
  const Node& root() const noexcept { return *root_; }

 private:
  Expression(std::shared_ptr<const Node> root, std::string source);

  std::shared_ptr<const Node> root_;
  std::string source_;
  bool uses_u_ = false;
};

inline constexpr std::size_t kMaxExpressionBytes = 64 * 1024;

}  // namespace frak::expr
