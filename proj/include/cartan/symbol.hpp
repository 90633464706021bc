#ifndef CARTAN_SYMBOL_HPP
#define CARTAN_SYMBOL_HPP

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cartan {

class symbol_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A radial symbol reduced to the squared radial coordinates:
/// a symmetric function of x = (x_1, ..., x_r) in [0,1)^r, where
/// x_j = t_j^2 and the symbol's value on the domain at sum t_j e_j is
/// eval(x).  Polynomial expressions record their total degree so the
/// quadrature layer can pick an exact node count.
class RadialSymbol {
 public:
  RadialSymbol() = default;
  RadialSymbol(int arity, std::string name, std::optional<int> degree,
               std::function<double(const double*)> fn)
      : arity_(arity), name_(std::move(name)), degree_(degree), fn_(std::move(fn)) {}

  int arity() const { return arity_; }
  const std::string& name() const { return name_; }
  /// Total degree in (x_1,...,x_r) when the body is polynomial.
  std::optional<int> degree() const { return degree_; }
  bool valid() const { return static_cast<bool>(fn_); }

  double eval(const std::vector<double>& x) const;
  double eval(const double* x) const { return fn_(x); }

 private:
  int arity_ = 0;
  std::string name_;
  std::optional<int> degree_;
  std::function<double(const double*)> fn_;
};

/// Parses the expression grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' nonneg-integer)?
///   base   := number | x1..x9 | fn '(' expr (',' expr)* ')' | '(' expr ')'
/// with functions exp, sqrt, abs, min, max, pow.  Variables denote the
/// squared radial coordinates.  log is not available (unbounded at 0).
RadialSymbol parse_symbol(const std::string& text, int r);

enum class BuiltinKind { Const, PowerSum, Elementary, DetPower, BallIndicator };

/// const(c); power_sum(m): sum x_j^m; elementary(k): e_k(x);
/// det_power(s): prod x_j^s; ball_indicator(c): [max x_j <= c].
RadialSymbol builtin_symbol(BuiltinKind kind, double param, int r);

/// Parses the CLI form `name:param` (e.g. `const:1`, `det_power:2`,
/// `ball_indicator:0.5`, `power_sum:1`, `elementary:2`).
RadialSymbol parse_builtin(const std::string& text, int r);

/// Reproducible statistical permutation-symmetry check (fixed PRNG seed
/// 0x5eed0001).  Returns false on the first violation.
bool check_symmetric(const RadialSymbol& s, int samples = 64, double tol = 1e-10);

}  // namespace cartan

#endif
