#ifndef IVL_EXPR_HPP
#define IVL_EXPR_HPP

// Univariate arithmetic expressions in x: a recursive-descent parser, the
// natural interval extension, and forward derivative propagation.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := atom ('^' uint)?
//   atom   := number | 'x' | '(' expr ')' | '-' atom
//
// Binary operators are left-associative. Unary minus is part of the atom, so
// "-x^2" reads as (-x)^2; write "-(x^2)" for the negated square.

#include <cctype>
#include <cfenv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ivl/error.hpp"
#include "ivl/interval.hpp"
#include "ivl/io/text.hpp"

namespace ivl {

class ParseError : public error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
      : error(errc::parse_error, "at byte " + std::to_string(offset) + ": " + detail + " (expected " +
                                     join(expected) + ")"),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
      if (!out.empty()) out += ", ";
      out += item;
    }
    return out;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Smallest interval of doubles containing the decimal literal: a point when
/// the literal is representable, otherwise one ulp wide.
inline Interval decimal_enclosure(const std::string& literal) {
  const int saved = std::fegetround();
  std::fesetround(FE_DOWNWARD);
  const double lo = std::strtod(literal.c_str(), nullptr);
  std::fesetround(FE_UPWARD);
  const double hi = std::strtod(literal.c_str(), nullptr);
  std::fesetround(saved);
  return Interval::make(lo, hi);
}

namespace detail {

// Decimal text whose enclosure is exactly the point x. Every double has a
// finite decimal expansion, so the search ends.
inline std::string exact_decimal(double x) {
  std::vector<char> buf(1100);
  for (int digits = 17;; digits += 8) {
    std::snprintf(buf.data(), buf.size(), "%.*g", digits, x);
    if (decimal_enclosure(buf.data()) == Interval::point(x)) return buf.data();
  }
}

}  // namespace detail

class Expr {
 public:
  enum class Kind { Const, Var, Neg, Add, Sub, Mul, Div, Pow };

  /// Constant whose value is the enclosure of a decimal literal.
  static Expr literal(const std::string& text) { return Expr(make_const(decimal_enclosure(text), text)); }
  /// Negative values are stored as the negation of a positive constant, the
  /// shape the parser produces for "-c".
  static Expr constant(double value) {
    if (!std::isfinite(value)) throw error(errc::invalid_argument, "constant must be finite");
    if (value < 0) return -constant(-value);
    return Expr(make_const(Interval::point(value == 0 ? 0.0 : value), {}));
  }
  static Expr var();

  friend Expr operator-(const Expr& e) { return Expr(make_node(Kind::Neg, e, {}, 0)); }
  friend Expr operator+(const Expr& a, const Expr& b) { return Expr(make_node(Kind::Add, a, b, 0)); }
  friend Expr operator-(const Expr& a, const Expr& b) { return Expr(make_node(Kind::Sub, a, b, 0)); }
  friend Expr operator*(const Expr& a, const Expr& b) { return Expr(make_node(Kind::Mul, a, b, 0)); }
  friend Expr operator/(const Expr& a, const Expr& b) { return Expr(make_node(Kind::Div, a, b, 0)); }
  static Expr pow(const Expr& base, unsigned exponent) {
    return Expr(make_node(Kind::Pow, base, {}, exponent));
  }

  Kind kind() const noexcept;
  /// Const only.
  const Interval& value() const noexcept;
  /// Source text of a parsed constant; empty for programmatic constants.
  const std::string& text() const noexcept;
  /// Pow only.
  unsigned exponent() const noexcept;
  /// Operand of Neg and Pow, left operand of binary nodes.
  const Expr& lhs() const noexcept;
  const Expr& rhs() const noexcept;

  /// Structural equality.
  friend bool operator==(const Expr& a, const Expr& b) noexcept;

 private:
  struct Node;

  Expr() = default;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static std::shared_ptr<const Node> make_const(Interval value, std::string text);
  static std::shared_ptr<const Node> make_node(Kind kind, const Expr& a, const Expr& b, unsigned exponent);

  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Kind kind = Kind::Const;
  Interval value;
  std::string text;
  unsigned exponent = 0;
  // Null for leaves.
  Expr lhs;
  Expr rhs;
};

inline Expr Expr::var() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  return Expr(std::move(n));
}

inline std::shared_ptr<const Expr::Node> Expr::make_const(Interval value, std::string text) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = value;
  n->text = std::move(text);
  return n;
}

inline std::shared_ptr<const Expr::Node> Expr::make_node(Kind kind, const Expr& a, const Expr& b,
                                                         unsigned exponent) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->exponent = exponent;
  n->lhs = a;
  n->rhs = b;
  return n;
}

inline Expr::Kind Expr::kind() const noexcept { return node_->kind; }
inline const Interval& Expr::value() const noexcept { return node_->value; }
inline const std::string& Expr::text() const noexcept { return node_->text; }
inline unsigned Expr::exponent() const noexcept { return node_->exponent; }

inline const Expr& Expr::lhs() const noexcept { return node_->lhs; }
inline const Expr& Expr::rhs() const noexcept { return node_->rhs; }

inline bool operator==(const Expr& a, const Expr& b) noexcept {
  const Expr::Node* x = a.node_.get();
  const Expr::Node* y = b.node_.get();
  if (x == y) return true;
  if (x == nullptr || y == nullptr) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Expr::Kind::Const: return x->value == y->value;
    case Expr::Kind::Var: return true;
    case Expr::Kind::Neg: return a.lhs() == b.lhs();
    case Expr::Kind::Pow: return x->exponent == y->exponent && a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

// ---- printing -------------------------------------------------------------

/// Fully parenthesized form that parse() maps back to the same tree.
inline std::string to_string(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Const:
      if (!e.text().empty()) return e.text();
      return detail::exact_decimal(e.value().lo());
    case Expr::Kind::Var: return "x";
    case Expr::Kind::Neg: return "(-" + to_string(e.lhs()) + ")";
    case Expr::Kind::Pow: return "(" + to_string(e.lhs()) + "^" + std::to_string(e.exponent()) + ")";
    case Expr::Kind::Add: return "(" + to_string(e.lhs()) + " + " + to_string(e.rhs()) + ")";
    case Expr::Kind::Sub: return "(" + to_string(e.lhs()) + " - " + to_string(e.rhs()) + ")";
    case Expr::Kind::Mul: return "(" + to_string(e.lhs()) + " * " + to_string(e.rhs()) + ")";
    case Expr::Kind::Div: return "(" + to_string(e.lhs()) + " / " + to_string(e.rhs()) + ")";
  }
  return {};
}

// ---- parsing --------------------------------------------------------------

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"}, "trailing input");
    return e;
  }

 private:
  Expr parse_expr() {
    Expr e = parse_term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        e = e + parse_term();
      } else if (accept('-')) {
        e = e - parse_term();
      } else {
        return e;
      }
    }
  }

  Expr parse_term() {
    Expr e = parse_factor();
    for (;;) {
      skip_space();
      if (accept('*')) {
        e = e * parse_factor();
      } else if (accept('/')) {
        e = e / parse_factor();
      } else {
        return e;
      }
    }
  }

  Expr parse_factor() {
    Expr base = parse_atom();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail({"unsigned integer"}, "bad exponent");
    }
    unsigned long n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (n > 1000000) fail({"exponent <= 1000000"}, "exponent too large");
      ++pos_;
    }
    return Expr::pow(base, static_cast<unsigned>(n));
  }

  Expr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail({"number", "'x'", "'('", "'-'"}, "unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return Expr::var();
    }
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      skip_space();
      if (!accept(')')) fail({"')'"}, "unbalanced parenthesis");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -parse_atom();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    fail({"number", "'x'", "'('", "'-'"}, std::string("unexpected '") + c + "'");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    const auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa_digits = digits();
    if (accept('.')) mantissa_digits += digits();
    if (mantissa_digits == 0) {
      pos_ = start;
      fail({"digit"}, "malformed number");
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail({"exponent digits"}, "malformed exponent");
    }
    return Expr::literal(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
    throw ParseError(pos_, std::move(expected), detail);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws ParseError with the byte offset and the set of expected tokens.
inline Expr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

// ---- evaluation -----------------------------------------------------------

/// Natural interval extension; powers use the exact range power.
inline Interval eval_interval(const Expr& e, const Interval& x) {
  switch (e.kind()) {
    case Expr::Kind::Const: return e.value();
    case Expr::Kind::Var: return x;
    case Expr::Kind::Neg: return -eval_interval(e.lhs(), x);
    case Expr::Kind::Add: return eval_interval(e.lhs(), x) + eval_interval(e.rhs(), x);
    case Expr::Kind::Sub: return eval_interval(e.lhs(), x) - eval_interval(e.rhs(), x);
    case Expr::Kind::Mul: return eval_interval(e.lhs(), x) * eval_interval(e.rhs(), x);
    case Expr::Kind::Div: return eval_interval(e.lhs(), x) / eval_interval(e.rhs(), x);
    case Expr::Kind::Pow: return int_pow(eval_interval(e.lhs(), x), e.exponent());
  }
  return x;
}

/// Value and derivative enclosures over the same box.
struct AdPair {
  Interval value;
  Interval deriv;
};

inline AdPair eval_ad(const Expr& e, const Interval& x) {
  const Interval zero{};
  const Interval one = Interval::point(1.0);
  switch (e.kind()) {
    case Expr::Kind::Const: return {e.value(), zero};
    case Expr::Kind::Var: return {x, one};
    case Expr::Kind::Neg: {
      const AdPair u = eval_ad(e.lhs(), x);
      return {-u.value, -u.deriv};
    }
    case Expr::Kind::Add: {
      const AdPair u = eval_ad(e.lhs(), x), v = eval_ad(e.rhs(), x);
      return {u.value + v.value, u.deriv + v.deriv};
    }
    case Expr::Kind::Sub: {
      const AdPair u = eval_ad(e.lhs(), x), v = eval_ad(e.rhs(), x);
      return {u.value - v.value, u.deriv - v.deriv};
    }
    case Expr::Kind::Mul: {
      const AdPair u = eval_ad(e.lhs(), x), v = eval_ad(e.rhs(), x);
      return {u.value * v.value, u.deriv * v.value + u.value * v.deriv};
    }
    case Expr::Kind::Div: {
      const AdPair u = eval_ad(e.lhs(), x), v = eval_ad(e.rhs(), x);
      const Interval q = u.value / v.value;
      return {q, (u.deriv * v.value - u.value * v.deriv) / int_pow(v.value, 2)};
    }
    case Expr::Kind::Pow: {
      const unsigned n = e.exponent();
      const AdPair u = eval_ad(e.lhs(), x);
      if (n == 0) return {one, zero};
      const Interval scale = Interval::point(static_cast<double>(n));
      return {int_pow(u.value, n), scale * int_pow(u.value, n - 1) * u.deriv};
    }
  }
  return {x, one};
}

}  // namespace ivl

#endif  // IVL_EXPR_HPP
