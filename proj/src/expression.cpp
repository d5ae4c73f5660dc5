#include "spectra/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <vector>

#include "spectra/errors.hpp"

namespace spectra {

struct Expression::Node {
  enum class Op { constant, var, add, sub, mul, div, pow, neg, abs, exp };
  Op op = Op::constant;
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  bool depends_on_x() const {
    if (op == Op::var) return true;
    return (lhs && lhs->depends_on_x()) || (rhs && rhs->depends_on_x());
  }
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr, double value = 0.0) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->value = value;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    auto n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("potential expression '" + std::string(s_) + "': " + what + " at position " +
                          std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    auto n = term();
    for (;;) {
      if (accept('+')) n = make(Node::Op::add, n, term());
      else if (accept('-')) n = make(Node::Op::sub, n, term());
      else return n;
    }
  }

  NodePtr term() {
    auto n = unary();
    for (;;) {
      if (accept('*')) n = make(Node::Op::mul, n, unary());
      else if (accept('/')) n = make(Node::Op::div, n, unary());
      else return n;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Op::neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    auto base = atom();
    if (accept('^')) {
      auto exponent = unary();
      if (exponent->depends_on_x()) fail("exponent must not depend on x");
      return make(Node::Op::pow, base, exponent);
    }
    return base;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = 0.0;
      const char* begin = s_.data() + pos_;
      const auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), v);
      if (ec != std::errc()) fail("malformed number");
      pos_ += static_cast<std::size_t>(ptr - begin);
      return make(Node::Op::constant, nullptr, nullptr, v);
    }
    if (accept('(')) {
      auto n = expr();
      if (!accept(')')) fail("expected ')'");
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
      const std::string_view word = s_.substr(pos_, end - pos_);
      pos_ = end;
      if (word == "x") return make(Node::Op::var);
      if (word == "pi") return make(Node::Op::constant, nullptr, nullptr, std::numbers::pi);
      if (word == "e") return make(Node::Op::constant, nullptr, nullptr, std::numbers::e);
      if (word == "abs" || word == "exp") {
        if (!accept('(')) fail("expected '(' after " + std::string(word));
        auto arg = expr();
        if (!accept(')')) fail("expected ')'");
        return make(word == "abs" ? Node::Op::abs : Node::Op::exp, arg);
      }
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Jet eval_node(const Node& n, double x) {
  switch (n.op) {
    case Node::Op::constant: return {n.value, 0.0, 0.0};
    case Node::Op::var: return {x, 1.0, 0.0};
    case Node::Op::neg: {
      const Jet a = eval_node(*n.lhs, x);
      return {-a.v, -a.d1, -a.d2};
    }
    case Node::Op::add: {
      const Jet a = eval_node(*n.lhs, x), b = eval_node(*n.rhs, x);
      return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
    }
    case Node::Op::sub: {
      const Jet a = eval_node(*n.lhs, x), b = eval_node(*n.rhs, x);
      return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
    }
    case Node::Op::mul: {
      const Jet a = eval_node(*n.lhs, x), b = eval_node(*n.rhs, x);
      return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
    }
    case Node::Op::div: {
      const Jet a = eval_node(*n.lhs, x), b = eval_node(*n.rhs, x);
      const double q = a.v / b.v;
      const double q1 = (a.d1 - q * b.d1) / b.v;
      const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
      return {q, q1, q2};
    }
    case Node::Op::pow: {
      const Jet a = eval_node(*n.lhs, x);
      const double c = eval_node(*n.rhs, x).v;
      if (c == 0.0) return {1.0, 0.0, 0.0};
      const double v = std::pow(a.v, c);
      const double dv = c == 1.0 ? 1.0 : c * std::pow(a.v, c - 1.0);
      const double ddv = (c == 1.0 || c == 2.0) ? (c == 2.0 ? 2.0 : 0.0) : c * (c - 1.0) * std::pow(a.v, c - 2.0);
      return {v, dv * a.d1, ddv * a.d1 * a.d1 + dv * a.d2};
    }
    case Node::Op::abs: {
      const Jet a = eval_node(*n.lhs, x);
      const double s = a.v > 0.0 ? 1.0 : (a.v < 0.0 ? -1.0 : 0.0);
      return {std::abs(a.v), s * a.d1, s * a.d2};
    }
    case Node::Op::exp: {
      const Jet a = eval_node(*n.lhs, x);
      const double v = std::exp(a.v);
      return {v, v * a.d1, v * (a.d2 + a.d1 * a.d1)};
    }
  }
  return {};
}

double parse_number(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ValidationError("malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.root_ = Parser(text).parse();
  e.text_ = std::string(text);
  return e;
}

Jet Expression::eval(double x) const { return eval_node(*root_, x); }

CustomFamily potential_from_expression(std::string_view text) {
  const auto expr = Expression::parse(text);
  return CustomFamily{[expr](double x) { return expr.eval(x).v; },
                      [expr](double x) { return expr.eval(x).d1; },
                      [expr](double x) { return expr.eval(x).d2; }, std::string(text)};
}

MeasureSpec1D parse_measure(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ValidationError("measure '" + std::string(text) +
                          "' must look like gaussian:<rho>, exppower:<p> or potential:<expr>");
  }
  const auto kind = text.substr(0, colon);
  const auto arg = text.substr(colon + 1);
  if (kind == "gaussian") return gaussian_measure(parse_number(arg, "gaussian rho"));
  if (kind == "exppower" || kind == "nu") return exp_power_measure(parse_number(arg, "exponent p"));
  if (kind == "potential") {
    std::string_view body = arg;
    if (body.size() >= 2 && body.front() == '"' && body.back() == '"') body = body.substr(1, body.size() - 2);
    return custom_measure(potential_from_expression(body));
  }
  throw ValidationError("unknown measure family '" + std::string(kind) + "'");
}

}  // namespace spectra
