#include "glc/expr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <sstream>

#include "glc/lie.hpp"  // GlcError

namespace glc {

static double logaddexp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

double SemifieldSpec::oplus(double a, double b) const {
  switch (id) {
    case SemifieldId::Positive: return a + b;
    case SemifieldId::Maslov: return -q * logaddexp(-a / q, -b / q);
    case SemifieldId::Tropical: return std::min(a, b);
  }
  return 0;
}
double SemifieldSpec::odot(double a, double b) const {
  return id == SemifieldId::Positive ? a * b : a + b;
}
double SemifieldSpec::oslash(double a, double b) const {
  return id == SemifieldId::Positive ? a / b : a - b;
}
double SemifieldSpec::inject(double c) const {
  switch (id) {
    case SemifieldId::Positive: return c;
    case SemifieldId::Maslov: return -q * std::log(c);
    case SemifieldId::Tropical: return 0.0;
  }
  return 0;
}

namespace {

struct Token {
  enum Kind { Ident, Number, Op, LParen, RParen, End } kind;
  std::string text;
  double value = 0;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_.kind = Token::End;
      return;
    }
    char c = s_[i_];
    if (c == '-') throw GlcError("SyntaxError", "subtraction at position " + std::to_string(i_));
    if (c == '(') {
      tok_ = {Token::LParen, "(", 0, i_++};
      return;
    }
    if (c == ')') {
      tok_ = {Token::RParen, ")", 0, i_++};
      return;
    }
    if (c == '+' || c == '*' || c == '/' || c == '^') {
      tok_ = {Token::Op, std::string(1, c), 0, i_++};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t j = i_;
      while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || s_[j] == '.' ||
                               s_[j] == 'e' || s_[j] == 'E' ||
                               ((s_[j] == '+') && j > i_ && (s_[j - 1] == 'e' || s_[j - 1] == 'E'))))
        ++j;
      double v = std::strtod(s_.substr(i_, j - i_).c_str(), nullptr);
      if (!(v > 0))
        throw GlcError("NegativeConstant", "constant at position " + std::to_string(i_) +
                                               " must be strictly positive");
      tok_ = {Token::Number, s_.substr(i_, j - i_), v, i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      tok_ = {Token::Ident, s_.substr(i_, j - i_), 0, i_};
      i_ = j;
      return;
    }
    throw GlcError("SyntaxError",
                   "unexpected character '" + std::string(1, c) + "' at position " +
                       std::to_string(i_));
  }
  const std::string& s_;
  size_t i_ = 0;
  Token tok_;
};

}  // namespace

class ExprParser {
 public:
  explicit ExprParser(const std::string& text) : lex_(text) {}

  Expr run() {
    e_.root_ = parse_sum();
    if (lex_.peek().kind != Token::End)
      throw GlcError("SyntaxError", "trailing input at position " + std::to_string(lex_.peek().pos));
    return std::move(e_);
  }

 private:
  int intern(Expr::Node n) {
    // hash-cons by structural key so repeated subterms share nodes
    std::ostringstream key;
    key << static_cast<int>(n.kind) << ':' << n.a << ':' << n.b << ':' << n.var << ':' << n.value;
    auto it = pool_.find(key.str());
    if (it != pool_.end()) return it->second;
    int id = static_cast<int>(e_.nodes_.size());
    e_.nodes_.push_back(n);
    pool_[key.str()] = id;
    return id;
  }

  int parse_sum() {
    int a = parse_term();
    while (lex_.peek().kind == Token::Op && lex_.peek().text == "+") {
      lex_.take();
      int b = parse_term();
      a = intern({Expr::Node::Add, a, b, 0, -1});
    }
    return a;
  }
  int parse_term() {
    int a = parse_factor();
    while (lex_.peek().kind == Token::Op &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      Token op = lex_.take();
      int b = parse_factor();
      a = intern({op.text == "*" ? Expr::Node::Mul : Expr::Node::Div, a, b, 0, -1});
    }
    return a;
  }
  int parse_factor() {
    int a = parse_atom();
    if (lex_.peek().kind == Token::Op && lex_.peek().text == "^") {
      Token caret = lex_.take();
      Token k = lex_.take();
      if (k.kind != Token::Number || k.value != std::floor(k.value) || k.value < 1)
        throw GlcError("SyntaxError",
                       "exponent must be a positive integer at position " + std::to_string(caret.pos));
      int out = a;
      for (int i = 1; i < static_cast<int>(k.value); ++i)
        out = intern({Expr::Node::Mul, out, a, 0, -1});
      return out;
    }
    return a;
  }
  int parse_atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Number:
        return intern({Expr::Node::Const, -1, -1, t.value, -1});
      case Token::Ident: {
        auto it = std::find(e_.vars_.begin(), e_.vars_.end(), t.text);
        int v;
        if (it == e_.vars_.end()) {
          v = static_cast<int>(e_.vars_.size());
          e_.vars_.push_back(t.text);
        } else {
          v = static_cast<int>(it - e_.vars_.begin());
        }
        return intern({Expr::Node::Var, -1, -1, 0, v});
      }
      case Token::LParen: {
        int a = parse_sum();
        Token r = lex_.take();
        if (r.kind != Token::RParen)
          throw GlcError("SyntaxError", "expected ')' at position " + std::to_string(r.pos));
        return a;
      }
      default:
        throw GlcError("SyntaxError", "unexpected token at position " + std::to_string(t.pos));
    }
  }

  Lexer lex_;
  Expr e_;
  std::map<std::string, int> pool_;
};

Expr Expr::parse(const std::string& text) { return ExprParser(text).run(); }

double Expr::eval(const SemifieldSpec& s, const std::vector<double>& values) const {
  if (static_cast<int>(values.size()) != num_vars())
    throw GlcError("UnboundVariable", "expected " + std::to_string(num_vars()) + " values");
  std::vector<double> memo(nodes_.size(), std::numeric_limits<double>::quiet_NaN());
  // nodes are created children-first by the parser, so a forward pass suffices
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case Node::Var: memo[i] = values[n.var]; break;
      case Node::Const: memo[i] = s.inject(n.value); break;
      case Node::Add: memo[i] = s.oplus(memo[n.a], memo[n.b]); break;
      case Node::Mul: memo[i] = s.odot(memo[n.a], memo[n.b]); break;
      case Node::Div: memo[i] = s.oslash(memo[n.a], memo[n.b]); break;
    }
  }
  return memo[root_];
}

double Expr::eval_named(const SemifieldSpec& s, const std::map<std::string, double>& values) const {
  std::vector<double> v(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it == values.end()) throw GlcError("UnboundVariable", "no value for '" + vars_[i] + "'");
    v[i] = it->second;
  }
  return eval(s, v);
}

double Expr::maslov_limit_error(const std::vector<double>& x, double q) const {
  // eval over S_q at x equals -q log of the positive evaluation at exp(-x/q),
  // computed directly in log-domain so q as small as 1e-3 is safe.
  double mq = eval(SemifieldSpec::maslov(q), x);
  double tr = eval(SemifieldSpec::tropical(), x);
  return std::abs(mq - tr);
}

std::string Expr::print() const {
  std::vector<std::string> out(nodes_.size());
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    std::ostringstream ss;
    switch (n.kind) {
      case Node::Var: ss << vars_[n.var]; break;
      case Node::Const: ss << n.value; break;
      case Node::Add: ss << '(' << out[n.a] << " + " << out[n.b] << ')'; break;
      case Node::Mul: ss << '(' << out[n.a] << " * " << out[n.b] << ')'; break;
      case Node::Div: ss << '(' << out[n.a] << " / " << out[n.b] << ')'; break;
    }
    out[i] = ss.str();
  }
  return out[root_];
}

}  // namespace glc
