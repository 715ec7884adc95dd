#include "paracr/expr/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstring>
#include <limits>

namespace paracr::expr {

namespace {

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

int compute_arity(const Node& n) {
  struct Visitor {
    int operator()(const Constant&) const { return 0; }
    int operator()(const Variable& v) const { return v.index + 1; }
    int operator()(const Unary& u) const { return compute_arity(*u.arg); }
    int operator()(const Binary& b) const { return std::max(compute_arity(*b.lhs), compute_arity(*b.rhs)); }
    int operator()(const Power& p) const { return compute_arity(*p.base); }
  };
  return std::visit(Visitor{}, n.kind);
}

bool node_uses(const Node& n, int index) {
  struct Visitor {
    int index;
    bool operator()(const Constant&) const { return false; }
    bool operator()(const Variable& v) const { return v.index == index; }
    bool operator()(const Unary& u) const { return node_uses(*u.arg, index); }
    bool operator()(const Binary& b) const { return node_uses(*b.lhs, index) || node_uses(*b.rhs, index); }
    bool operator()(const Power& p) const { return node_uses(*p.base, index); }
  };
  return std::visit(Visitor{index}, n.kind);
}

// ------------------------------------------------------------------ render

enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kPrimary = 5 };

int precedence(const Node& n) {
  struct Visitor {
    int operator()(const Constant&) const { return kPrimary; }  // negatives render parenthesised
    int operator()(const Variable&) const { return kPrimary; }
    int operator()(const Unary& u) const { return u.op == UnaryOp::Neg ? kUnary : kPrimary; }
    int operator()(const Binary& b) const {
      return b.op == BinaryOp::Add || b.op == BinaryOp::Sub ? kSum : kProduct;
    }
    int operator()(const Power&) const { return kPower; }
  };
  return std::visit(Visitor{}, n.kind);
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

const char* function_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Sinh:
      return "sinh";
    case UnaryOp::Cosh:
      return "cosh";
    case UnaryOp::Tanh:
      return "tanh";
    case UnaryOp::Exp:
      return "exp";
    case UnaryOp::Ln:
      return "ln";
    case UnaryOp::Sqrt:
      return "sqrt";
    case UnaryOp::Neg:
      break;
  }
  return "-";
}

void render_node(const Node& n, std::string& out);

void render_child(const Node& n, bool parens, std::string& out) {
  if (parens) out += '(';
  render_node(n, out);
  if (parens) out += ')';
}

void render_node(const Node& n, std::string& out) {
  struct Visitor {
    std::string& out;
    void operator()(const Constant& c) const {
      if (std::signbit(c.value)) {
        out += "(-" + format_number(-c.value) + ")";
      } else {
        out += format_number(c.value);
      }
    }
    void operator()(const Variable& v) const { out += v.name; }
    void operator()(const Unary& u) const {
      if (u.op == UnaryOp::Neg) {
        out += '-';
        render_child(*u.arg, precedence(*u.arg) < kUnary, out);
      } else {
        out += function_name(u.op);
        render_child(*u.arg, true, out);
      }
    }
    void operator()(const Binary& b) const {
      const int p = (b.op == BinaryOp::Add || b.op == BinaryOp::Sub) ? kSum : kProduct;
      render_child(*b.lhs, precedence(*b.lhs) < p, out);
      switch (b.op) {
        case BinaryOp::Add:
          out += " + ";
          break;
        case BinaryOp::Sub:
          out += " - ";
          break;
        case BinaryOp::Mul:
          out += "*";
          break;
        case BinaryOp::Div:
          out += "/";
          break;
      }
      render_child(*b.rhs, precedence(*b.rhs) <= p, out);
    }
    void operator()(const Power& p) const {
      render_child(*p.base, precedence(*p.base) < kPrimary, out);
      out += '^';
      out += std::to_string(p.exponent);
    }
  };
  std::visit(Visitor{out}, n.kind);
}

// ------------------------------------------------------------------ parser

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& coords, const std::map<std::string, double>& consts)
      : text_(text), coords_(coords), consts_(consts) {}

  Expr parse_all() {
    Expr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(pos_, "unexpected character '" + std::string(1, text_[pos_]) + "'", "operator or end of input");
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(pos_, "missing '" + std::string(1, c) + "'", std::string("'") + c + "'");
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(BinaryOp::Add, lhs, parse_product());
      } else if (accept('-')) {
        lhs = Expr::binary(BinaryOp::Sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_product() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(BinaryOp::Mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = Expr::binary(BinaryOp::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::unary(UnaryOp::Neg, parse_unary());
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (accept('^')) return Expr::power(base, parse_exponent());
    return base;
  }

  std::int64_t parse_exponent() {
    skip_ws();
    if (accept('(')) {
      std::int64_t e = parse_signed_integer();
      expect(')');
      return e;
    }
    std::int64_t e = parse_signed_integer();
    if (accept('^')) {
      const std::size_t at = pos_;
      std::int64_t rest = parse_exponent();
      if (rest < 0) throw ParseError(at, "negative exponent in an integer power chain", "non-negative integer");
      std::int64_t folded = 1;
      for (std::int64_t i = 0; i < rest; ++i) {
        folded *= e;
        if (folded > kMaxExponent || folded < -kMaxExponent) {
          throw ParseError(at, "exponent too large", "|exponent| <= 1000");
        }
      }
      return folded;
    }
    return e;
  }

  std::int64_t parse_signed_integer() {
    skip_ws();
    bool neg = accept('-');
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(pos_, "exponent must be an integer literal", "integer");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      throw ParseError(pos_, "exponent must be an integer literal", "integer");
    }
    std::int64_t v = 0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc{} || v > kMaxExponent) throw ParseError(start, "exponent too large", "|exponent| <= 1000");
    return neg ? -v : v;
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input", "number, identifier or '('");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = parse_sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
    throw ParseError(pos_, "unexpected character '" + std::string(1, c) + "'", "number, identifier or '('");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t n = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) throw ParseError(start, "malformed number", "digits");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = save;  // 'e' belongs to something else
    }
    double v = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (res.ec != std::errc{} || res.ptr != text_.data() + pos_) {
      throw ParseError(start, "malformed number", "decimal literal");
    }
    return Expr::constant(v);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      static const std::pair<const char*, UnaryOp> kFunctions[] = {
          {"sinh", UnaryOp::Sinh}, {"cosh", UnaryOp::Cosh}, {"tanh", UnaryOp::Tanh},
          {"exp", UnaryOp::Exp},   {"ln", UnaryOp::Ln},     {"sqrt", UnaryOp::Sqrt},
      };
      for (const auto& [fname, op] : kFunctions) {
        if (name == fname) {
          ++pos_;
          Expr arg = parse_sum();
          expect(')');
          return Expr::unary(op, arg);
        }
      }
      throw ParseError(start, "unknown function '" + name + "'", "sinh, cosh, tanh, exp, ln or sqrt");
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == name) return Expr::variable(static_cast<int>(i), name);
    }
    if (auto it = consts_.find(name); it != consts_.end()) return Expr::constant(it->second);
    throw UnknownVariable(start, name, coords_);
  }

  static constexpr std::int64_t kMaxExponent = 1000;

  std::string_view text_;
  const std::vector<std::string>& coords_;
  const std::map<std::string, double>& consts_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr::Expr() : Expr(make(Node{Constant{0.0}})) {}

Expr::Expr(NodePtr root) : root_(std::move(root)), arity_(compute_arity(*root_)) {}

Expr Expr::constant(double value) { return Expr(make(Node{Constant{value}})); }
Expr Expr::variable(int index, std::string name) { return Expr(make(Node{Variable{index, std::move(name)}})); }
Expr Expr::unary(UnaryOp op, Expr arg) { return Expr(make(Node{Unary{op, arg.root_}})); }
Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) { return Expr(make(Node{Binary{op, lhs.root_, rhs.root_}})); }
Expr Expr::power(Expr base, std::int64_t exponent) { return Expr(make(Node{Power{base.root_, exponent}})); }

bool Expr::uses_variable(int index) const { return node_uses(*root_, index); }

std::string Expr::render() const {
  std::string out;
  render_node(*root_, out);
  return out;
}

bool structurally_equal(const Node& a, const Node& b) {
  if (a.kind.index() != b.kind.index()) return false;
  if (auto* c = std::get_if<Constant>(&a.kind)) {
    // Bitwise so that -0.0 and 0.0 differ, as they render differently.
    double x = c->value, y = std::get<Constant>(b.kind).value;
    return std::memcmp(&x, &y, sizeof x) == 0;
  }
  if (auto* v = std::get_if<Variable>(&a.kind)) {
    const auto& w = std::get<Variable>(b.kind);
    return v->index == w.index && v->name == w.name;
  }
  if (auto* u = std::get_if<Unary>(&a.kind)) {
    const auto& w = std::get<Unary>(b.kind);
    return u->op == w.op && structurally_equal(*u->arg, *w.arg);
  }
  if (auto* bin = std::get_if<Binary>(&a.kind)) {
    const auto& w = std::get<Binary>(b.kind);
    return bin->op == w.op && structurally_equal(*bin->lhs, *w.lhs) && structurally_equal(*bin->rhs, *w.rhs);
  }
  const auto& p = std::get<Power>(a.kind);
  const auto& q = std::get<Power>(b.kind);
  return p.exponent == q.exponent && structurally_equal(*p.base, *q.base);
}

bool operator==(const Expr& a, const Expr& b) { return structurally_equal(*a.root_, *b.root_); }

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(BinaryOp::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(BinaryOp::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(BinaryOp::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(BinaryOp::Div, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(UnaryOp::Neg, a); }

Expr parse(std::string_view text, const std::vector<std::string>& coordinates,
           const std::map<std::string, double>& constants) {
  return Parser(text, coordinates, constants).parse_all();
}

}  // namespace paracr::expr
