#pragma once

// Expressions in one variable x, used as CLI integrands.
//
// Grammar, loosest binding first:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative: 2^3^2 = 2^9
//   primary := number | 'x' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | exp | sqrt | atan | abs | log
//
// Unary minus binds looser than '^', so -x^2 = -(x^2).

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadid::expr {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  /// Byte offset into the source text.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Division by zero, sqrt of a negative, log of a non-positive, or any
/// other operation whose result is not finite.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Func { Sin, Cos, Exp, Sqrt, Atan, Abs, Log };

struct Node;

/// Immutable, cheaply copyable expression tree.
class Expr {
 public:
  enum class Kind { Literal, Constant, Variable, Negate, Binary, Call };

  static Expr literal(double v);
  static Expr pi();
  static Expr e();
  static Expr variable();
  static Expr negate(Expr operand);
  static Expr binary(char op, Expr lhs, Expr rhs);
  static Expr call(Func fn, Expr arg);

  Kind kind() const;
  double operator()(double x) const { return eval(x); }
  double eval(double x) const;

  const Node& node() const { return *node_; }

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  Expr::Kind kind;
  double value = 0.0;       // Literal / Constant
  std::string name{};       // Constant
  char op = 0;              // Binary: + - * / ^
  Func fn = Func::Sin;      // Call
  std::shared_ptr<const Node> lhs{};
  std::shared_ptr<const Node> rhs{};
};

Expr parse(std::string_view src);
double eval(const Expr& e, double x);

/// Fully parenthesized text that parses back to the same tree.
std::string print(const Expr& e);

std::string_view func_name(Func fn);

}  // namespace quadid::expr
