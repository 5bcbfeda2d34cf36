#include "premetric/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace premetric {

struct ExprNode {
  ExprKind kind = ExprKind::constant;
  double value = 0.0;
  int var = -1;
  int exponent = 0;
  Expr a{nullptr};
  Expr b{nullptr};
};

namespace {

const std::shared_ptr<const ExprNode>& zero_node() {
  static const auto node = std::make_shared<const ExprNode>();
  return node;
}

bool is_unary(ExprKind k) {
  switch (k) {
    case ExprKind::neg:
    case ExprKind::sin:
    case ExprKind::cos:
    case ExprKind::exp:
    case ExprKind::tanh:
    case ExprKind::bump:
    case ExprKind::pow:
      return true;
    default:
      return false;
  }
}

bool is_binary(ExprKind k) {
  return k == ExprKind::add || k == ExprKind::sub || k == ExprKind::mul || k == ExprKind::div;
}

double bump_value(double s) {
  if (!(std::abs(s) < 1.0)) return 0.0;
  return std::exp(-1.0 / (1.0 - s * s));
}

}  // namespace

Expr make_node(ExprKind kind, Expr a, Expr b, int exponent) {
  auto node = std::make_shared<ExprNode>();
  node->kind = kind;
  node->a = std::move(a);
  node->b = std::move(b);
  node->exponent = exponent;
  return Expr(std::shared_ptr<const ExprNode>(std::move(node)));
}

Expr::Expr() : node_(zero_node()) {}

Expr::Expr(double value) {
  auto node = std::make_shared<ExprNode>();
  node->value = value;
  node_ = std::move(node);
}

Expr Expr::var(int index) {
  if (index < 0) throw ContractViolation("negative coordinate index");
  auto node = std::make_shared<ExprNode>();
  node->kind = ExprKind::variable;
  node->var = index;
  return Expr(std::shared_ptr<const ExprNode>(std::move(node)));
}

ExprKind Expr::kind() const { return node_->kind; }
bool Expr::is_constant(double v) const {
  return node_->kind == ExprKind::constant && node_->value == v;
}
double Expr::value() const { return node_->value; }
int Expr::var_index() const { return node_->var; }
int Expr::exponent() const { return node_->exponent; }
const Expr& Expr::lhs() const { return node_->a; }
const Expr& Expr::rhs() const { return node_->b; }

bool operator==(const Expr& x, const Expr& y) {
  if (x.node_ == y.node_) return true;
  const ExprNode& a = *x.node_;
  const ExprNode& b = *y.node_;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::constant:
      return a.value == b.value;
    case ExprKind::variable:
      return a.var == b.var;
    case ExprKind::pow:
      return a.exponent == b.exponent && a.a == b.a;
    default:
      if (is_binary(a.kind)) return a.a == b.a && a.b == b.b;
      return a.a == b.a;
  }
}

// ---- factories -------------------------------------------------------------

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.value() + b.value());
  if (a.is_constant(0.0)) return b;
  if (b.is_constant(0.0)) return a;
  return make_node(ExprKind::add, a, b, 0);
}

Expr operator-(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.value() - b.value());
  if (b.is_constant(0.0)) return a;
  if (a.is_constant(0.0)) return -b;
  return make_node(ExprKind::sub, a, b, 0);
}

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant()) return Expr(a.value() * b.value());
  if (a.is_constant(0.0) || b.is_constant(0.0)) return Expr(0.0);
  if (a.is_constant(1.0)) return b;
  if (b.is_constant(1.0)) return a;
  return make_node(ExprKind::mul, a, b, 0);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (a.is_constant() && b.is_constant() && b.value() != 0.0) {
    return Expr(a.value() / b.value());
  }
  if (b.is_constant(1.0)) return a;
  return make_node(ExprKind::div, a, b, 0);
}

Expr operator-(const Expr& a) {
  if (a.is_constant()) return Expr(-a.value());
  return make_node(ExprKind::neg, a, Expr(), 0);
}

Expr pow(const Expr& base, int exponent) {
  if (exponent == 0) return Expr(1.0);
  if (exponent == 1) return base;
  if (base.is_constant() && (base.value() != 0.0 || exponent > 0)) {
    return Expr(std::pow(base.value(), exponent));
  }
  return make_node(ExprKind::pow, base, Expr(), exponent);
}

Expr sin(const Expr& a) {
  if (a.is_constant()) return Expr(std::sin(a.value()));
  return make_node(ExprKind::sin, a, Expr(), 0);
}
Expr cos(const Expr& a) {
  if (a.is_constant()) return Expr(std::cos(a.value()));
  return make_node(ExprKind::cos, a, Expr(), 0);
}
Expr exp(const Expr& a) {
  if (a.is_constant()) return Expr(std::exp(a.value()));
  return make_node(ExprKind::exp, a, Expr(), 0);
}
Expr tanh(const Expr& a) {
  if (a.is_constant()) return Expr(std::tanh(a.value()));
  return make_node(ExprKind::tanh, a, Expr(), 0);
}
Expr bump(const Expr& a) {
  if (a.is_constant()) return Expr(bump_value(a.value()));
  return make_node(ExprKind::bump, a, Expr(), 0);
}

// ---- chart -----------------------------------------------------------------

Chart::Chart(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) {
      throw ContractViolation("invalid coordinate name '" + n + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[j] == n) throw ContractViolation("duplicate coordinate name '" + n + "'");
    }
  }
}

Chart Chart::standard(int n) {
  if (n == 3) return Chart({"x", "y", "z"});
  if (n == 4) return Chart({"x", "y", "z", "xi"});
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return Chart(std::move(names));
}

int Chart::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

// ---- errors ----------------------------------------------------------------

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& message)
    : std::runtime_error(message + " at offset " + std::to_string(offset)),
      kind_(kind),
      offset_(offset) {}

namespace {

std::string describe_point(const std::vector<double>& point) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) os << ", ";
    os << point[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

EvalError::EvalError(const std::string& message, std::vector<double> point)
    : std::runtime_error(message + " at point " + describe_point(point)),
      point_(std::move(point)) {}

// ---- parser ----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Chart& chart) : text_(text), chart_(chart) {}

  Expr run() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, ParseError::Kind kind = ParseError::Kind::syntax,
                         std::size_t at = std::string_view::npos) const {
    throw ParseError(kind, at == std::string_view::npos ? pos_ : at, msg);
  }

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
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    Expr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = lhs + term();
      } else if (accept('-')) {
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    while (true) {
      if (accept('*')) {
        lhs = lhs * factor();
      } else if (accept('/')) {
        lhs = lhs / factor();
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    Expr base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
        negative = text_[pos_] == '-';
        ++pos_;
      }
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == digits) fail("expected integer exponent", ParseError::Kind::syntax, start);
      long v = std::strtol(std::string(text_.substr(digits, pos_ - digits)).c_str(), nullptr, 10);
      if (v > 1000) fail("exponent too large", ParseError::Kind::syntax, start);
      return pow(base, negative ? -static_cast<int>(v) : static_cast<int>(v));
    }
    return base;
  }

  Expr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    const std::string lexeme(text_.substr(start, pos_ - start));
    if (lexeme == ".") fail("malformed number", ParseError::Kind::syntax, start);
    char* end = nullptr;
    const double v = std::strtod(lexeme.c_str(), &end);
    if (end != lexeme.c_str() + lexeme.size() || !std::isfinite(v)) {
      fail("malformed number", ParseError::Kind::syntax, start);
    }
    return Expr(v);
  }

  Expr name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view id = text_.substr(start, pos_ - start);
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      Expr (*fn)(const Expr&) = nullptr;
      if (id == "sin") fn = &sin;
      else if (id == "cos") fn = &cos;
      else if (id == "exp") fn = &exp;
      else if (id == "tanh") fn = &tanh;
      else if (id == "bump") fn = &bump;
      if (fn == nullptr) {
        fail("unknown function '" + std::string(id) + "'", ParseError::Kind::unknown_function, start);
      }
      ++pos_;
      Expr arg = expr();
      expect(')');
      return fn(arg);
    }
    const int idx = chart_.index_of(id);
    if (idx < 0) {
      fail("unknown identifier '" + std::string(id) + "'", ParseError::Kind::unknown_identifier,
           start);
    }
    return Expr::var(idx);
  }

  std::string_view text_;
  const Chart& chart_;
  std::size_t pos_ = 0;
};

// ---- printer ---------------------------------------------------------------

int precedence(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::add:
    case ExprKind::sub:
      return 1;
    case ExprKind::mul:
    case ExprKind::div:
      return 2;
    case ExprKind::neg:
      return 3;
    case ExprKind::pow:
      return 4;
    case ExprKind::constant:
      return e.value() < 0.0 || std::signbit(e.value()) ? 0 : 5;
    default:
      return 5;
  }
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Shortest representation that still round-trips.
  for (int digits = 1; digits < 17; ++digits) {
    char shorter[32];
    std::snprintf(shorter, sizeof shorter, "%.*g", digits, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

void print_to(const Expr& e, const Chart& chart, std::string& out);

void print_wrapped(const Expr& e, const Chart& chart, std::string& out, bool wrap) {
  if (wrap) out += '(';
  print_to(e, chart, out);
  if (wrap) out += ')';
}

void print_to(const Expr& e, const Chart& chart, std::string& out) {
  switch (e.kind()) {
    case ExprKind::constant:
      out += format_number(e.value());
      return;
    case ExprKind::variable:
      out += e.var_index() < chart.dim() ? chart.name(e.var_index())
                                         : "x" + std::to_string(e.var_index() + 1);
      return;
    case ExprKind::add:
    case ExprKind::sub:
    case ExprKind::mul:
    case ExprKind::div: {
      const int p = precedence(e);
      print_wrapped(e.lhs(), chart, out, precedence(e.lhs()) < p);
      out += e.kind() == ExprKind::add   ? "+"
             : e.kind() == ExprKind::sub ? "-"
             : e.kind() == ExprKind::mul ? "*"
                                         : "/";
      print_wrapped(e.rhs(), chart, out, precedence(e.rhs()) <= p);
      return;
    }
    case ExprKind::neg:
      // The operand of unary minus is an atom in the grammar.
      out += '-';
      print_wrapped(e.lhs(), chart, out,
                    precedence(e.lhs()) < 5 && e.lhs().kind() != ExprKind::neg);
      return;
    case ExprKind::pow:
      print_wrapped(e.lhs(), chart, out, precedence(e.lhs()) < 5);
      out += '^';
      out += std::to_string(e.exponent());
      return;
    case ExprKind::sin:
    case ExprKind::cos:
    case ExprKind::exp:
    case ExprKind::tanh:
    case ExprKind::bump:
      out += e.kind() == ExprKind::sin   ? "sin("
             : e.kind() == ExprKind::cos ? "cos("
             : e.kind() == ExprKind::exp ? "exp("
             : e.kind() == ExprKind::tanh ? "tanh("
                                          : "bump(";
      print_to(e.lhs(), chart, out);
      out += ')';
      return;
  }
}

double eval_rec(const Expr& e, std::span<const double> p) {
  switch (e.kind()) {
    case ExprKind::constant:
      return e.value();
    case ExprKind::variable:
      if (e.var_index() >= static_cast<int>(p.size())) {
        throw EvalError("coordinate index out of range", {p.begin(), p.end()});
      }
      return p[e.var_index()];
    case ExprKind::add:
      return eval_rec(e.lhs(), p) + eval_rec(e.rhs(), p);
    case ExprKind::sub:
      return eval_rec(e.lhs(), p) - eval_rec(e.rhs(), p);
    case ExprKind::mul: {
      const double l = eval_rec(e.lhs(), p);
      if (l == 0.0) return 0.0;
      return l * eval_rec(e.rhs(), p);
    }
    case ExprKind::div: {
      const double d = eval_rec(e.rhs(), p);
      if (d == 0.0) throw EvalError("division by zero", {p.begin(), p.end()});
      return eval_rec(e.lhs(), p) / d;
    }
    case ExprKind::pow: {
      const double b = eval_rec(e.lhs(), p);
      if (b == 0.0 && e.exponent() < 0) {
        throw EvalError("zero raised to a negative power", {p.begin(), p.end()});
      }
      return std::pow(b, e.exponent());
    }
    case ExprKind::neg:
      return -eval_rec(e.lhs(), p);
    case ExprKind::sin:
      return std::sin(eval_rec(e.lhs(), p));
    case ExprKind::cos:
      return std::cos(eval_rec(e.lhs(), p));
    case ExprKind::exp:
      return std::exp(eval_rec(e.lhs(), p));
    case ExprKind::tanh:
      return std::tanh(eval_rec(e.lhs(), p));
    case ExprKind::bump:
      return bump_value(eval_rec(e.lhs(), p));
  }
  return 0.0;
}

}  // namespace

Expr parse(std::string_view text, const Chart& chart) { return Parser(text, chart).run(); }

std::string print(const Expr& e, const Chart& chart) {
  std::string out;
  print_to(e, chart, out);
  return out;
}

Expr differentiate(const Expr& e, int var) {
  switch (e.kind()) {
    case ExprKind::constant:
      return Expr(0.0);
    case ExprKind::variable:
      return Expr(e.var_index() == var ? 1.0 : 0.0);
    case ExprKind::add:
      return differentiate(e.lhs(), var) + differentiate(e.rhs(), var);
    case ExprKind::sub:
      return differentiate(e.lhs(), var) - differentiate(e.rhs(), var);
    case ExprKind::mul:
      return differentiate(e.lhs(), var) * e.rhs() + e.lhs() * differentiate(e.rhs(), var);
    case ExprKind::div: {
      const Expr& f = e.lhs();
      const Expr& g = e.rhs();
      return (differentiate(f, var) * g - f * differentiate(g, var)) / pow(g, 2);
    }
    case ExprKind::pow: {
      const int k = e.exponent();
      return Expr(static_cast<double>(k)) * pow(e.lhs(), k - 1) * differentiate(e.lhs(), var);
    }
    case ExprKind::neg:
      return -differentiate(e.lhs(), var);
    case ExprKind::sin:
      return cos(e.lhs()) * differentiate(e.lhs(), var);
    case ExprKind::cos:
      return -sin(e.lhs()) * differentiate(e.lhs(), var);
    case ExprKind::exp:
      return e * differentiate(e.lhs(), var);
    case ExprKind::tanh:
      return (Expr(1.0) - pow(e, 2)) * differentiate(e.lhs(), var);
    case ExprKind::bump: {
      // bump'(s) = bump(s) * (-2s / (1-s^2)^2); the bump factor stays leftmost
      // so evaluation outside the support never touches the singular factor.
      const Expr& s = e.lhs();
      const Expr slope = (Expr(-2.0) * s) / pow(Expr(1.0) - pow(s, 2), 2);
      return (e * slope) * differentiate(s, var);
    }
  }
  return Expr(0.0);
}

Expr differentiate(const Expr& e, std::string_view var, const Chart& chart) {
  const int idx = chart.index_of(var);
  if (idx < 0) throw ContractViolation("unknown coordinate '" + std::string(var) + "'");
  return differentiate(e, idx);
}

double eval(const Expr& e, std::span<const double> point) { return eval_rec(e, point); }

double fd_derivative(const Expr& e, int var, std::span<const double> point, double h) {
  if (!(h > 0.0)) throw ContractViolation("finite-difference step must be positive");
  if (var < 0 || var >= static_cast<int>(point.size())) {
    throw ContractViolation("finite-difference coordinate out of range");
  }
  std::vector<double> p(point.begin(), point.end());
  p[var] = point[var] + h;
  const double fp = eval(e, p);
  p[var] = point[var] - h;
  const double fm = eval(e, p);
  return (fp - fm) / (2.0 * h);
}

Expr substitute(const Expr& e, int var, const Expr& replacement) {
  switch (e.kind()) {
    case ExprKind::constant:
      return e;
    case ExprKind::variable:
      return e.var_index() == var ? replacement : e;
    case ExprKind::add:
      return substitute(e.lhs(), var, replacement) + substitute(e.rhs(), var, replacement);
    case ExprKind::sub:
      return substitute(e.lhs(), var, replacement) - substitute(e.rhs(), var, replacement);
    case ExprKind::mul:
      return substitute(e.lhs(), var, replacement) * substitute(e.rhs(), var, replacement);
    case ExprKind::div:
      return substitute(e.lhs(), var, replacement) / substitute(e.rhs(), var, replacement);
    case ExprKind::pow:
      return pow(substitute(e.lhs(), var, replacement), e.exponent());
    case ExprKind::neg:
      return -substitute(e.lhs(), var, replacement);
    case ExprKind::sin:
      return sin(substitute(e.lhs(), var, replacement));
    case ExprKind::cos:
      return cos(substitute(e.lhs(), var, replacement));
    case ExprKind::exp:
      return exp(substitute(e.lhs(), var, replacement));
    case ExprKind::tanh:
      return tanh(substitute(e.lhs(), var, replacement));
    case ExprKind::bump:
      return bump(substitute(e.lhs(), var, replacement));
  }
  return e;
}

std::size_t tree_size(const Expr& e) {
  if (is_binary(e.kind())) return 1 + tree_size(e.lhs()) + tree_size(e.rhs());
  if (is_unary(e.kind())) return 1 + tree_size(e.lhs());
  return 1;
}

int max_var_index(const Expr& e) {
  if (e.kind() == ExprKind::variable) return e.var_index();
  if (is_binary(e.kind())) return std::max(max_var_index(e.lhs()), max_var_index(e.rhs()));
  if (is_unary(e.kind())) return max_var_index(e.lhs());
  return -1;
}

}  // namespace premetric
