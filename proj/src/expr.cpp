#include "frak/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "frak/errors.hpp"

namespace frak::expr {

namespace {

using NodePtr = std::shared_ptr<const Node>;

constexpr int kMaxDepth = 400;

NodePtr make(Op op, std::size_t pos, std::vector<NodePtr> args = {}, double value = 0.0) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->position = pos;
  n->value = value;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    auto root = parse_sum();
    skip_ws();
    if (pos_ < text_.size()) {
      throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return root;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p(p) {
      if (++p.depth_ > kMaxDepth) {
        throw SyntaxError("expression nested too deeply", p.pos_);
      }
    }
    ~DepthGuard() { --p.depth_; }
    Parser& p;
  };

  NodePtr parse_sum() {
    DepthGuard guard(*this);
    auto lhs = parse_product();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = make(Op::Add, at, {lhs, parse_product()});
      } else if (accept('-')) {
        lhs = make(Op::Sub, at, {lhs, parse_product()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_product() {
    auto lhs = parse_unary();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = make(Op::Mul, at, {lhs, parse_unary()});
      } else if (accept('/')) {
        lhs = make(Op::Div, at, {lhs, parse_unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    DepthGuard guard(*this);
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) {
      return make(Op::Neg, at, {parse_unary()});
    }
    if (accept('+')) {
      return parse_unary();
    }
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_primary();
    skip_ws();
    const std::size_t at = pos_;
    if (accept('^')) {
      return make(Op::Pow, at, {base, parse_unary()});
    }
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw SyntaxError("unexpected end of input", pos_);
    }
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_number();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return parse_identifier();
    }
    if (accept('(')) {
      auto inner = parse_sum();
      if (!accept(')')) {
        throw SyntaxError("expected ')'", pos_);
      }
      return inner;
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", at);
  }

  NodePtr parse_number() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    auto digits = [&] {
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    };
    digits();
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      digits();
    }
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t exp = end + 1;
      if (exp < text_.size() && (text_[exp] == '+' || text_[exp] == '-')) ++exp;
      if (exp < text_.size() && std::isdigit(static_cast<unsigned char>(text_[exp]))) {
        end = exp;
        digits();
      }
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + at, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end) {
      throw SyntaxError("malformed number", at);
    }
    pos_ = end;
    return make(Op::Number, at, {}, value);
  }

  NodePtr parse_identifier() {
    const std::size_t at = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(at, pos_ - at));
    if (name == "t") return make(Op::VarT, at);
    if (name == "u") return make(Op::VarU, at);

    Op op;
    std::size_t arity = 1;
    if (name == "sqrt") op = Op::Sqrt;
    else if (name == "ln") op = Op::Ln;
    else if (name == "exp") op = Op::Exp;
    else if (name == "atan") op = Op::Atan;
    else if (name == "abs") op = Op::Abs;
    else if (name == "pow") { op = Op::PowFn; arity = 2; }
    else throw UnknownIdentifier(name, at);

    if (!accept('(')) {
      throw SyntaxError("expected '(' after " + name, pos_);
    }
    std::vector<NodePtr> args;
    args.push_back(parse_sum());
    while (accept(',')) {
      args.push_back(parse_sum());
    }
    if (!accept(')')) {
      throw SyntaxError("expected ')'", pos_);
    }
    if (args.size() != arity) {
      throw SyntaxError(name + " expects " + std::to_string(arity) + " argument(s)", at);
    }
    return make(op, at, std::move(args));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

bool mentions_u(const Node& n) {
  if (n.op == Op::VarU) return true;
  for (const auto& a : n.args) {
    if (mentions_u(*a)) return true;
  }
  return false;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

[[noreturn]] void domain_fail(const char* fn, double a) {
  throw EvalError(std::string(fn) + "(" + fmt(a) + ") is outside its domain");
}

[[noreturn]] void domain_fail(const char* fn, double a, double b) {
  throw EvalError(std::string(fn) + "(" + fmt(a) + ", " + fmt(b) + ") is outside its domain");
}

double checked(double r, const char* fn, double a) {
  if (!std::isfinite(r)) domain_fail(fn, a);
  return r;
}

double checked(double r, const char* fn, double a, double b) {
  if (!std::isfinite(r)) domain_fail(fn, a, b);
  return r;
}

double eval_node(const Node& n, double t, double u) {
  switch (n.op) {
    case Op::Number: return n.value;
    case Op::VarT: return t;
    case Op::VarU: return u;
    case Op::Neg: return -eval_node(*n.args[0], t, u);
    default: break;
  }
  const double a = eval_node(*n.args[0], t, u);
  if (n.args.size() == 2) {
    const double b = eval_node(*n.args[1], t, u);
    switch (n.op) {
      case Op::Add: return checked(a + b, "add", a, b);
      case Op::Sub: return checked(a - b, "sub", a, b);
      case Op::Mul: return checked(a * b, "mul", a, b);
      case Op::Div:
        if (b == 0.0) domain_fail("div", a, b);
        return checked(a / b, "div", a, b);
      case Op::Pow: return checked(std::pow(a, b), "pow", a, b);
      case Op::PowFn: return checked(std::pow(a, b), "pow", a, b);
      default: break;
    }
  }
  switch (n.op) {
    case Op::Sqrt:
      if (a < 0.0) domain_fail("sqrt", a);
      return std::sqrt(a);
    case Op::Ln:
      if (!(a > 0.0)) domain_fail("ln", a);
      return std::log(a);
    case Op::Exp: return checked(std::exp(a), "exp", a);
    case Op::Atan: return std::atan(a);
    case Op::Abs: return std::abs(a);
    default: break;
  }
  throw EvalError("malformed expression tree");
}

void print_node(const Node& n, std::string& out) {
  auto binary = [&](const char* op) {
    out += '(';
    print_node(*n.args[0], out);
    out += op;
    print_node(*n.args[1], out);
    out += ')';
  };
  auto call = [&](const char* name) {
    out += name;
    out += '(';
    for (std::size_t i = 0; i < n.args.size(); ++i) {
      if (i) out += ", ";
      print_node(*n.args[i], out);
    }
    out += ')';
  };
  switch (n.op) {
    case Op::Number: out += fmt(n.value); break;
    case Op::VarT: out += 't'; break;
    case Op::VarU: out += 'u'; break;
    case Op::Neg:
      out += "(-";
      print_node(*n.args[0], out);
      out += ')';
      break;
    case Op::Add: binary(" + "); break;
    case Op::Sub: binary(" - "); break;
    case Op::Mul: binary(" * "); break;
    case Op::Div: binary(" / "); break;
    case Op::Pow: binary(" ^ "); break;
    case Op::Sqrt: call("sqrt"); break;
    case Op::Ln: call("ln"); break;
    case Op::Exp: call("exp"); break;
    case Op::Atan: call("atan"); break;
    case Op::Abs: call("abs"); break;
    case Op::PowFn: call("pow"); break;
  }
}

}  // namespace

Expression::Expression(std::shared_ptr<const Node> root, std::string source)
    : root_(std::move(root)), source_(std::move(source)), uses_u_(mentions_u(*root_)) {}

Expression Expression::parse(std::string_view text) {
  if (text.size() > kMaxExpressionBytes) {
    throw SyntaxError("expression longer than 64 KiB", kMaxExpressionBytes);
  }
  bool blank = true;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  }
  if (blank) {
    throw SyntaxError("empty expression", 0);
  }
  return Expression(Parser(text).parse(), std::string(text));
}

double Expression::eval(double t, double u) const { return eval_node(*root_, t, u); }

std::string Expression::print() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

}  // namespace frak::expr
