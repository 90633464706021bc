#include "cartan/symbol.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

namespace cartan {

double RadialSymbol::eval(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != arity_)
    throw symbol_error("symbol arity mismatch: expected " + std::to_string(arity_) +
                       " coordinates, got " + std::to_string(x.size()));
  return fn_(x.data());
}

namespace {

// ---------------------------------------------------------------------------
// Expression tree
// ---------------------------------------------------------------------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class Op {
  Number, Variable, Add, Sub, Mul, Div, Neg, IntPow,
  Exp, Sqrt, Abs, Min, Max, Pow,
};

struct Expr {
  Op op;
  double value = 0.0;   // Number
  int index = 0;        // Variable (0-based), IntPow exponent
  std::vector<ExprPtr> args;
};

double eval_expr(const Expr& e, const double* x) {
  switch (e.op) {
    case Op::Number: return e.value;
    case Op::Variable: return x[e.index];
    case Op::Add: return eval_expr(*e.args[0], x) + eval_expr(*e.args[1], x);
    case Op::Sub: return eval_expr(*e.args[0], x) - eval_expr(*e.args[1], x);
    case Op::Mul: return eval_expr(*e.args[0], x) * eval_expr(*e.args[1], x);
    case Op::Div: return eval_expr(*e.args[0], x) / eval_expr(*e.args[1], x);
    case Op::Neg: return -eval_expr(*e.args[0], x);
    case Op::IntPow: {
      double base = eval_expr(*e.args[0], x);
      double acc = 1.0;
      for (int k = 0; k < e.index; ++k) acc *= base;
      return acc;
    }
    case Op::Exp: return std::exp(eval_expr(*e.args[0], x));
    case Op::Sqrt: return std::sqrt(eval_expr(*e.args[0], x));
    case Op::Abs: return std::fabs(eval_expr(*e.args[0], x));
    case Op::Min:
      return std::min(eval_expr(*e.args[0], x), eval_expr(*e.args[1], x));
    case Op::Max:
      return std::max(eval_expr(*e.args[0], x), eval_expr(*e.args[1], x));
    case Op::Pow:
      return std::pow(eval_expr(*e.args[0], x), eval_expr(*e.args[1], x));
  }
  return 0.0;
}

// Total degree when the subtree is polynomial in the variables.
std::optional<int> poly_degree(const Expr& e) {
  switch (e.op) {
    case Op::Number: return 0;
    case Op::Variable: return 1;
    case Op::Add:
    case Op::Sub: {
      auto l = poly_degree(*e.args[0]), r = poly_degree(*e.args[1]);
      if (l && r) return std::max(*l, *r);
      return std::nullopt;
    }
    case Op::Mul: {
      auto l = poly_degree(*e.args[0]), r = poly_degree(*e.args[1]);
      if (l && r) return *l + *r;
      return std::nullopt;
    }
    case Op::Div: {
      auto l = poly_degree(*e.args[0]), r = poly_degree(*e.args[1]);
      // division by a constant subtree keeps the tree polynomial
      if (l && r && *r == 0) return *l;
      return std::nullopt;
    }
    case Op::Neg: return poly_degree(*e.args[0]);
    case Op::IntPow: {
      auto b = poly_degree(*e.args[0]);
      if (b) return *b * e.index;
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Recursive-descent parser
// ---------------------------------------------------------------------------

class Parser {
 public:
  Parser(const std::string& text, int arity) : text_(text), arity_(arity) {}

  ExprPtr parse() {
    auto e = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "symbol parse error at position " << pos_ << ": " << msg;
    throw symbol_error(os.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  ExprPtr expression() {
    auto lhs = term();
    for (;;) {
      if (consume('+')) {
        auto rhs = term();
        lhs = std::make_shared<Expr>(Expr{Op::Add, 0, 0, {lhs, rhs}});
      } else if (consume('-')) {
        auto rhs = term();
        lhs = std::make_shared<Expr>(Expr{Op::Sub, 0, 0, {lhs, rhs}});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    auto lhs = factor();
    for (;;) {
      if (consume('*')) {
        auto rhs = factor();
        lhs = std::make_shared<Expr>(Expr{Op::Mul, 0, 0, {lhs, rhs}});
      } else if (consume('/')) {
        auto rhs = factor();
        lhs = std::make_shared<Expr>(Expr{Op::Div, 0, 0, {lhs, rhs}});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    // unary sign binds looser than '^': -x1^2 parses as -(x1^2)
    if (consume('-')) {
      auto inner = factor();
      return std::make_shared<Expr>(Expr{Op::Neg, 0, 0, {inner}});
    }
    if (consume('+')) return factor();
    auto b = base();
    if (consume('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (pos_ == start) fail("'^' requires a nonnegative integer literal exponent");
      int k = std::stoi(text_.substr(start, pos_ - start));
      return std::make_shared<Expr>(Expr{Op::IntPow, 0, k, {b}});
    }
    return b;
  }

  ExprPtr base() {
    skip_ws();
    if (consume('(')) {
      auto e = expression();
      if (!consume(')')) fail("expected ')'");
      return e;
    }
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("expected number, variable, function, or '('");
  }

  ExprPtr number() {
    skip_ws();
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin) fail("bad number literal");
    pos_ += static_cast<std::size_t>(end - begin);
    return std::make_shared<Expr>(Expr{Op::Number, v, 0, {}});
  }

  ExprPtr identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string name = text_.substr(start, pos_ - start);

    if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '9') {
      const int idx = name[1] - '1';
      if (idx >= arity_) {
        pos_ = start;
        fail("variable " + name + " exceeds symbol arity r = " + std::to_string(arity_));
      }
      return std::make_shared<Expr>(Expr{Op::Variable, 0, idx, {}});
    }

    Op op;
    std::size_t nargs;
    if (name == "exp") { op = Op::Exp; nargs = 1; }
    else if (name == "sqrt") { op = Op::Sqrt; nargs = 1; }
    else if (name == "abs") { op = Op::Abs; nargs = 1; }
    else if (name == "min") { op = Op::Min; nargs = 2; }
    else if (name == "max") { op = Op::Max; nargs = 2; }
    else if (name == "pow") { op = Op::Pow; nargs = 2; }
    else {
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }

    if (!consume('(')) fail("expected '(' after function name");
    std::vector<ExprPtr> args;
    args.push_back(expression());
    while (consume(',')) args.push_back(expression());
    if (!consume(')')) fail("expected ')'");
    if (args.size() != nargs)
      fail("function " + name + " expects " + std::to_string(nargs) + " argument(s)");
    return std::make_shared<Expr>(Expr{op, 0, 0, std::move(args)});
  }

  const std::string& text_;
  int arity_;
  std::size_t pos_ = 0;
};

}  // namespace

RadialSymbol parse_symbol(const std::string& text, int r) {
  if (r < 1) throw symbol_error("symbol arity must be >= 1");
  if (r > 9) throw symbol_error("expression symbols support at most 9 variables");
  Parser p(text, r);
  ExprPtr tree = p.parse();
  auto deg = poly_degree(*tree);
  return RadialSymbol(r, text, deg,
                      [tree](const double* x) { return eval_expr(*tree, x); });
}

RadialSymbol builtin_symbol(BuiltinKind kind, double param, int r) {
  if (r < 1) throw symbol_error("symbol arity must be >= 1");
  switch (kind) {
    case BuiltinKind::Const: {
      std::ostringstream nm;
      nm << "const(" << param << ")";
      return RadialSymbol(r, nm.str(), 0, [param](const double*) { return param; });
    }
    case BuiltinKind::PowerSum: {
      const int m = static_cast<int>(param);
      if (m < 0 || m != param) throw symbol_error("power_sum requires integer m >= 0");
      std::ostringstream nm;
      nm << "power_sum(" << m << ")";
      return RadialSymbol(r, nm.str(), m, [m, r](const double* x) {
        double s = 0.0;
        for (int j = 0; j < r; ++j) s += std::pow(x[j], m);
        return s;
      });
    }
    case BuiltinKind::Elementary: {
      const int k = static_cast<int>(param);
      if (k < 0 || k != param || k > r)
        throw symbol_error("elementary(k) requires 0 <= k <= r");
      std::ostringstream nm;
      nm << "elementary(" << k << ")";
      // e_k via the generating product prod(1 + t x_j)
      return RadialSymbol(r, nm.str(), k, [k, r](const double* x) {
        std::vector<double> e(static_cast<std::size_t>(k) + 1, 0.0);
        e[0] = 1.0;
        for (int j = 0; j < r; ++j)
          for (int i = std::min(j + 1, k); i >= 1; --i) e[i] += x[j] * e[i - 1];
        return e[k];
      });
    }
    case BuiltinKind::DetPower: {
      const int s = static_cast<int>(param);
      if (s < 0 || s != param) throw symbol_error("det_power requires integer s >= 0");
      std::ostringstream nm;
      nm << "det_power(" << s << ")";
      return RadialSymbol(r, nm.str(), s * r, [s, r](const double* x) {
        double acc = 1.0;
        for (int j = 0; j < r; ++j)
          for (int k = 0; k < s; ++k) acc *= x[j];
        return acc;
      });
    }
    case BuiltinKind::BallIndicator: {
      if (!(param >= 0.0 && param <= 1.0))
        throw symbol_error("ball_indicator requires c in [0,1]");
      std::ostringstream nm;
      nm << "ball_indicator(" << param << ")";
      return RadialSymbol(r, nm.str(), std::nullopt, [param, r](const double* x) {
        for (int j = 0; j < r; ++j)
          if (x[j] > param) return 0.0;
        return 1.0;
      });
    }
  }
  throw symbol_error("unknown builtin kind");
}

RadialSymbol parse_builtin(const std::string& text, int r) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  double param = 0.0;
  if (colon != std::string::npos) {
    try {
      std::size_t pos = 0;
      param = std::stod(text.substr(colon + 1), &pos);
      if (pos != text.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw symbol_error("bad builtin parameter in '" + text + "'");
    }
  }
  if (name == "const") return builtin_symbol(BuiltinKind::Const, colon == std::string::npos ? 1.0 : param, r);
  if (name == "power_sum") return builtin_symbol(BuiltinKind::PowerSum, param, r);
  if (name == "elementary") return builtin_symbol(BuiltinKind::Elementary, param, r);
  if (name == "det_power") return builtin_symbol(BuiltinKind::DetPower, param, r);
  if (name == "ball_indicator") return builtin_symbol(BuiltinKind::BallIndicator, param, r);
  throw symbol_error("unknown builtin '" + name + "'");
}

bool check_symmetric(const RadialSymbol& s, int samples, double tol) {
  if (samples < 1) throw symbol_error("check_symmetric requires samples >= 1");
  const int r = s.arity();
  if (r == 1) return true;
  std::mt19937 rng(0x5eed0001u);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> x(r), y(r);
  std::vector<int> perm(r);
  for (int it = 0; it < samples; ++it) {
    for (int j = 0; j < r; ++j) x[j] = unif(rng);
    const double base = s.eval(x.data());
    std::iota(perm.begin(), perm.end(), 0);
    // adjacent transpositions generate S_r; test those plus a few shuffles
    for (int j = 0; j + 1 < r; ++j) {
      y = x;
      std::swap(y[j], y[j + 1]);
      if (std::fabs(s.eval(y.data()) - base) > tol * (1.0 + std::fabs(base)))
        return false;
    }
    for (int t = 0; t < 3; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int j = 0; j < r; ++j) y[j] = x[perm[j]];
      if (std::fabs(s.eval(y.data()) - base) > tol * (1.0 + std::fabs(base)))
        return false;
    }
  }
  return true;
}

}  // namespace cartan
