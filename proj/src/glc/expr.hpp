#pragma once
// Subtraction-free rational expressions over an abstract semifield.
//
// Grammar: identifiers, positive decimal literals, + * / ( ) and ^k with a
// positive integer k as sugar for repeated multiplication. '-' is rejected.
// Expressions are DAGs with shared subterms; evaluation is memoized per call.
//
// Semifields: positive (+, *), Maslov S_q (a (+)_q b = -q log(e^{-a/q}+e^{-b/q}),
// (.)_q = +) and tropical (min, +). Tropicalization is applied to the stored
// expression tree as written; equal positive expressions in different forms may
// tropicalize differently.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace glc {

enum class SemifieldId { Positive, Maslov, Tropical };

struct SemifieldSpec {
  SemifieldId id = SemifieldId::Positive;
  double q = 1.0;  // Maslov parameter, q > 0

  static SemifieldSpec positive() { return {SemifieldId::Positive, 0}; }
  static SemifieldSpec maslov(double q) { return {SemifieldId::Maslov, q}; }
  static SemifieldSpec tropical() { return {SemifieldId::Tropical, 0}; }

  double oplus(double a, double b) const;
  double odot(double a, double b) const;
  double oslash(double a, double b) const;
  double inject(double c) const;  // positive constant into the semifield
};

class Expr {
 public:
  static Expr parse(const std::string& text);

  int num_vars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }

  // Evaluate with values[i] the value bound to variables()[i].
  double eval(const SemifieldSpec& s, const std::vector<double>& values) const;
  // Convenience: bind by name; throws UnboundVariable if a name is missing.
  double eval_named(const SemifieldSpec& s, const std::map<std::string, double>& values) const;

  // | eval_maslov(q)(x) - eval_tropical(x) |, evaluated in log-domain.
  double maslov_limit_error(const std::vector<double>& x, double q) const;

  std::string print() const;  // canonical fully-parenthesized form

 private:
  struct Node {
    enum Kind { Var, Const, Add, Mul, Div } kind;
    int a = -1, b = -1;  // children
    double value = 0;    // Const
    int var = -1;        // Var
  };
  std::vector<Node> nodes_;
  std::vector<std::string> vars_;
  int root_ = -1;
  friend class ExprParser;
};

}  // namespace glc
