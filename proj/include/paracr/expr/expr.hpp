#pragma once

// Closed-form scalar functions of chart coordinates.
//
// Grammar (whitespace insignificant):
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?
//   exponent:= ['-'] INT ('^' exponent)? | '(' ['-'] INT ')'
//   primary := NUMBER | IDENT | FUNC '(' sum ')' | '(' sum ')'
//   FUNC    := sinh | cosh | tanh | exp | ln | sqrt
// Exponents are integers; a chain x^a^b folds right to a single integer.

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paracr/ad/dual.hpp"
#include "paracr/errors.hpp"

namespace paracr::expr {

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string message, std::string expected)
      : Error(format(offset, message, expected)),
        offset_(offset),
        message_(std::move(message)),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }
  const std::string& expected() const { return expected_; }

  /// Prefixes the message with the position of the expression in a document.
  void locate(const std::string& where) { text_ = where + ": " + text_; }
  const char* what() const noexcept override { return text_.c_str(); }

 private:
  static std::string format(std::size_t offset, const std::string& msg, const std::string& expected) {
    std::string s = "parse error at offset " + std::to_string(offset) + ": " + msg;
    if (!expected.empty()) s += " (expected " + expected + ")";
    return s;
  }

  std::size_t offset_;
  std::string message_;
  std::string expected_;
  std::string text_ = Error::what();
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(std::size_t offset, std::string name, const std::vector<std::string>& coordinates)
      : ParseError(offset, "unknown identifier '" + name + "'", "one of [" + join(coordinates) + "]"),
        name_(std::move(name)),
        coordinates_(coordinates) {}

  const std::string& name() const { return name_; }
  const std::vector<std::string>& coordinates() const { return coordinates_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  }

  std::string name_;
  std::vector<std::string> coordinates_;
};

enum class UnaryOp { Neg, Sinh, Cosh, Tanh, Exp, Ln, Sqrt };
enum class BinaryOp { Add, Sub, Mul, Div };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Constant {
  double value;
};
struct Variable {
  int index;
  std::string name;
};
struct Unary {
  UnaryOp op;
  NodePtr arg;
};
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Power {
  NodePtr base;
  std::int64_t exponent;
};

struct Node {
  std::variant<Constant, Variable, Unary, Binary, Power> kind;
};

/// Immutable expression tree; cheap to copy (shared nodes).
class Expr {
 public:
  Expr();
  explicit Expr(NodePtr root);

  static Expr constant(double value);
  static Expr variable(int index, std::string name);
  static Expr unary(UnaryOp op, Expr arg);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr power(Expr base, std::int64_t exponent);

  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }

  /// One past the largest variable index referenced (0 for constants).
  int arity() const { return arity_; }
  bool uses_variable(int index) const;

  std::string render() const;

  /// Evaluate at `x` over double or any nested dual scalar.
  template <class T>
  T eval(std::span<const T> x) const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  NodePtr root_;
  int arity_ = 0;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

/// Parse `text` over the given coordinate names. Identifiers found in
/// `constants` are replaced by literal constants.
Expr parse(std::string_view text, const std::vector<std::string>& coordinates,
           const std::map<std::string, double>& constants = {});

bool structurally_equal(const Node& a, const Node& b);

// ------------------------------------------------------------ evaluation

namespace detail {

template <class T>
T eval_node(const Node& n, std::span<const T> x);

template <class T>
T eval_unary(UnaryOp op, const T& a) {
  switch (op) {
    case UnaryOp::Neg:
      return -a;
    case UnaryOp::Sinh:
      return paracr::sinh(a);
    case UnaryOp::Cosh:
      return paracr::cosh(a);
    case UnaryOp::Tanh:
      return paracr::tanh(a);
    case UnaryOp::Exp:
      return paracr::exp(a);
    case UnaryOp::Ln:
      return paracr::log(a);
    case UnaryOp::Sqrt:
      return paracr::sqrt(a);
  }
  return a;
}

template <class T>
T eval_binary(BinaryOp op, const T& a, const T& b) {
  switch (op) {
    case BinaryOp::Add:
      return a + b;
    case BinaryOp::Sub:
      return a - b;
    case BinaryOp::Mul:
      return a * b;
    case BinaryOp::Div:
      if constexpr (is_dual<T>) {
        return a / b;
      } else {
        return checked_div(a, b);
      }
  }
  return a;
}

template <class T>
T eval_node(const Node& n, std::span<const T> x) {
  struct Visitor {
    std::span<const T> x;
    T operator()(const Constant& c) const { return constant<T>(c.value); }
    T operator()(const Variable& v) const { return x[static_cast<std::size_t>(v.index)]; }
    T operator()(const Unary& u) const { return eval_unary(u.op, eval_node(*u.arg, x)); }
    T operator()(const Binary& b) const { return eval_binary(b.op, eval_node(*b.lhs, x), eval_node(*b.rhs, x)); }
    T operator()(const Power& p) const { return ipow(eval_node(*p.base, x), p.exponent); }
  };
  return std::visit(Visitor{x}, n.kind);
}

}  // namespace detail

template <class T>
T Expr::eval(std::span<const T> x) const {
  if (static_cast<int>(x.size()) < arity()) {
    throw std::invalid_argument("expression needs " + std::to_string(arity()) + " coordinates, got " +
                                std::to_string(x.size()));
  }
  return detail::eval_node(*root_, x);
}

}  // namespace paracr::expr
