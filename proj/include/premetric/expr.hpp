#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "premetric/graded_tensor.hpp"

namespace premetric {

/// Ordered coordinate names of a chart. Axis k of a tensor on this chart
/// corresponds to coordinate k-1.
class Chart {
 public:
  Chart() = default;
  explicit Chart(std::vector<std::string> names);

  /// ["x","y","z"] for n=3, ["x","y","z","xi"] for n=4, ["x1",...] otherwise.
  static Chart standard(int n);
  static Chart spacetime() { return standard(4); }

  int dim() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int index) const { return names_.at(index); }
  /// -1 when absent.
  int index_of(std::string_view name) const;
  bool has(std::string_view name) const { return index_of(name) >= 0; }

  friend bool operator==(const Chart&, const Chart&) = default;

 private:
  std::vector<std::string> names_;
};

enum class ExprKind {
  constant, variable, add, sub, mul, div, pow, neg, sin, cos, exp, tanh, bump
};

struct ExprNode;

/// Immutable closed-form scalar expression over chart coordinates. Copies
/// share structure. Construction through the factory functions below folds
/// constants and drops additive zeros and multiplicative ones, nothing more.
class Expr {
 public:
  Expr();  // constant 0
  Expr(double value);  // NOLINT(google-explicit-constructor)

  static Expr var(int index);

  ExprKind kind() const;
  bool is_constant() const { return kind() == ExprKind::constant; }
  bool is_constant(double v) const;
  double value() const;     // constant nodes
  int var_index() const;    // variable nodes
  int exponent() const;     // pow nodes
  const Expr& lhs() const;  // unary and binary nodes
  const Expr& rhs() const;  // binary nodes

  /// Structural identity (exact constants, same tree shape).
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  explicit Expr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
  explicit Expr(std::nullptr_t) {}  // empty child slot of a leaf node
  friend struct ExprNode;
  friend Expr make_node(ExprKind, Expr, Expr, int);
  std::shared_ptr<const ExprNode> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, int exponent);
Expr sin(const Expr& a);
Expr cos(const Expr& a);
Expr exp(const Expr& a);
Expr tanh(const Expr& a);
/// Smooth compactly supported primitive: exp(-1/(1-s^2)) for |s|<1, else 0.
Expr bump(const Expr& a);

template <>
struct CoeffTraits<Expr> {
  static Expr zero() { return Expr(0.0); }
  static Expr one() { return Expr(1.0); }
  static bool is_zero(const Expr& e) { return e.is_constant(0.0); }
};

/// Tensor fields with expression coefficients.
using Field = GradedTensor<Expr>;

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_identifier, unknown_function };
  ParseError(Kind kind, std::size_t offset, const std::string& message);
  Kind kind() const { return kind_; }
  /// Byte offset into the parsed text.
  std::size_t offset() const { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

class EvalError : public std::runtime_error {
 public:
  EvalError(const std::string& message, std::vector<double> point);
  const std::vector<double>& point() const { return point_; }

 private:
  std::vector<double> point_;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' int)?
///   atom   := number | name | func '(' expr ')' | '(' expr ')' | '-' atom
/// with func in {sin, cos, exp, tanh, bump} and names from the chart.
/// Unary minus binds tighter than '^': "-x^2" is (-x)^2.
Expr parse(std::string_view text, const Chart& chart);

/// Canonical serializer; parse(print(e)) reproduces e structurally.
std::string print(const Expr& e, const Chart& chart);

/// Exact symbolic partial derivative with respect to coordinate `var`.
Expr differentiate(const Expr& e, int var);
Expr differentiate(const Expr& e, std::string_view var, const Chart& chart);

/// IEEE double evaluation. A product whose left factor evaluates to exactly
/// zero is zero without evaluating the right factor.
double eval(const Expr& e, std::span<const double> point);

/// Central difference (e(p+h)-e(p-h))/(2h) along coordinate `var`.
double fd_derivative(const Expr& e, int var, std::span<const double> point, double h);

/// Replaces coordinate `var` by `replacement` everywhere.
Expr substitute(const Expr& e, int var, const Expr& replacement);

/// Number of nodes counted as a tree (shared subtrees counted each time).
std::size_t tree_size(const Expr& e);

/// Highest coordinate index referenced, or -1 for closed constants.
int max_var_index(const Expr& e);

}  // namespace premetric
