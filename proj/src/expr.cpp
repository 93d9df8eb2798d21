#include "quadid/expr.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <cmath>
#include <numbers>

namespace quadid::expr {

namespace {

constexpr std::array<std::pair<std::string_view, Func>, 7> kFuncs = {{
    {"sin", Func::Sin},
    {"cos", Func::Cos},
    {"exp", Func::Exp},
    {"sqrt", Func::Sqrt},
    {"atan", Func::Atan},
    {"abs", Func::Abs},
    {"log", Func::Log},
}};

std::shared_ptr<const Node> make(Node n) { return std::make_shared<const Node>(std::move(n)); }

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string("non-finite result in ") + what);
  return v;
}

double eval_node(const Node& n, double x) {
  switch (n.kind) {
    case Expr::Kind::Literal:
    case Expr::Kind::Constant:
      return n.value;
    case Expr::Kind::Variable:
      return x;
    case Expr::Kind::Negate:
      return -eval_node(*n.lhs, x);
    case Expr::Kind::Binary: {
      const double a = eval_node(*n.lhs, x);
      const double b = eval_node(*n.rhs, x);
      switch (n.op) {
        case '+': return checked(a + b, "+");
        case '-': return checked(a - b, "-");
        case '*': return checked(a * b, "*");
        case '/':
          if (b == 0.0) throw DomainError("division by zero");
          return checked(a / b, "/");
        case '^': return checked(std::pow(a, b), "^");
      }
      break;
    }
    case Expr::Kind::Call: {
      const double a = eval_node(*n.lhs, x);
      switch (n.fn) {
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
        case Func::Exp: return checked(std::exp(a), "exp");
        case Func::Sqrt:
          if (a < 0.0) throw DomainError("sqrt of a negative number");
          return std::sqrt(a);
        case Func::Atan: return std::atan(a);
        case Func::Abs: return std::abs(a);
        case Func::Log:
          if (a <= 0.0) throw DomainError("log of a non-positive number");
          return std::log(a);
      }
      break;
    }
  }
  throw std::logic_error("malformed expression node");
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    skip_ws();
    if (pos_ == src_.size()) throw SyntaxError("empty expression", pos_);
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    while (true) {
      if (accept('+')) lhs = Expr::binary('+', lhs, parse_term());
      else if (accept('-')) lhs = Expr::binary('-', lhs, parse_term());
      else return lhs;
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (true) {
      if (accept('*')) lhs = Expr::binary('*', lhs, parse_unary());
      else if (accept('/')) lhs = Expr::binary('/', lhs, parse_unary());
      else return lhs;
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::negate(parse_unary());
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (accept('^')) return Expr::binary('^', base, parse_unary());
    return base;
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ == src_.size()) throw SyntaxError("expected an operand", pos_);
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  Expr parse_number() {
    double v = 0.0;
    const char* first = src_.data() + pos_;
    const auto [end, ec] = std::from_chars(first, src_.data() + src_.size(), v);
    if (ec != std::errc() || end == first) throw SyntaxError("malformed number", pos_);
    pos_ += static_cast<std::size_t>(end - first);
    return Expr::literal(v);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view id = src_.substr(start, pos_ - start);
    if (id == "x") return Expr::variable();
    if (id == "pi") return Expr::pi();
    if (id == "e") return Expr::e();
    for (const auto& [name, fn] : kFuncs) {
      if (id != name) continue;
      if (!accept('(')) throw SyntaxError("expected '(' after " + std::string(id), pos_);
      Expr arg = parse_expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return Expr::call(fn, arg);
    }
    throw SyntaxError("unknown identifier '" + std::string(id) + "'", start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void print_node(const Node& n, std::string& out) {
  switch (n.kind) {
    case Expr::Kind::Literal: {
      std::array<char, 32> buf{};
      const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), n.value);
      const std::string_view text(buf.data(), static_cast<std::size_t>(res.ptr - buf.data()));
      if (std::signbit(n.value)) out.append("(").append(text).append(")");
      else out.append(text);
      return;
    }
    case Expr::Kind::Constant:
      out += n.name;
      return;
    case Expr::Kind::Variable:
      out += 'x';
      return;
    case Expr::Kind::Negate:
      out += "(-";
      print_node(*n.lhs, out);
      out += ')';
      return;
    case Expr::Kind::Binary:
      out += '(';
      print_node(*n.lhs, out);
      out += n.op;
      print_node(*n.rhs, out);
      out += ')';
      return;
    case Expr::Kind::Call:
      out += func_name(n.fn);
      out += '(';
      print_node(*n.lhs, out);
      out += ')';
      return;
  }
}

}  // namespace

Expr Expr::literal(double v) { return Expr(make({.kind = Kind::Literal, .value = v})); }

Expr Expr::pi() {
  return Expr(make({.kind = Kind::Constant, .value = std::numbers::pi, .name = "pi"}));
}

Expr Expr::e() {
  return Expr(make({.kind = Kind::Constant, .value = std::numbers::e, .name = "e"}));
}

Expr Expr::variable() { return Expr(make({.kind = Kind::Variable})); }

Expr Expr::negate(Expr operand) {
  return Expr(make({.kind = Kind::Negate, .lhs = std::move(operand.node_)}));
}

Expr Expr::binary(char op, Expr lhs, Expr rhs) {
  if (op != '+' && op != '-' && op != '*' && op != '/' && op != '^') {
    throw std::invalid_argument(std::string("unknown binary operator '") + op + "'");
  }
  return Expr(make({.kind = Kind::Binary,
                    .op = op,
                    .lhs = std::move(lhs.node_),
                    .rhs = std::move(rhs.node_)}));
}

Expr Expr::call(Func fn, Expr arg) {
  return Expr(make({.kind = Kind::Call, .fn = fn, .lhs = std::move(arg.node_)}));
}

Expr::Kind Expr::kind() const { return node_->kind; }

double Expr::eval(double x) const { return eval_node(*node_, x); }

Expr parse(std::string_view src) { return Parser(src).parse(); }

double eval(const Expr& e, double x) { return e.eval(x); }

std::string print(const Expr& e) {
  std::string out;
  print_node(e.node(), out);
  return out;
}

std::string_view func_name(Func fn) {
  for (const auto& [name, f] : kFuncs) {
    if (f == fn) return name;
  }
  return "?";
}

}  // namespace quadid::expr
