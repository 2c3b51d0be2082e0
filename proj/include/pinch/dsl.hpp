#ifndef PINCH_DSL_HPP
#define PINCH_DSL_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pinch/dual.hpp"
#include "pinch/errors.hpp"
#include "pinch/metric.hpp"

namespace pinch::dsl {

enum class NodeKind { Constant, Variable, Negate, Binary, Call };

enum class Func { Exp, Log, Sin, Cos, Cosh, Sinh, Sqrt };

const char* func_name(Func f);

/// Expression tree over chart coordinates. Evaluation is a tree walk,
/// generic over the scalar type (double or nested duals), with a fixed
/// left-to-right argument order.
struct Expr {
  NodeKind kind = NodeKind::Constant;
  double value = 0.0;            // Constant
  int var_index = -1;            // Variable
  std::string var_name;          // Variable
  char op = 0;                   // Binary: + - * / ^
  Func func = Func::Exp;         // Call
  std::vector<std::unique_ptr<Expr>> children;

  std::unique_ptr<Expr> clone() const;
};

using ExprPtr = std::unique_ptr<Expr>;

bool equal(const Expr& a, const Expr& b);

/// Canonical text form; parse(print(e)) reproduces e exactly.
std::string print(const Expr& e);

template <typename T>
T eval(const Expr& e, std::span<const T> vars) {
  switch (e.kind) {
    case NodeKind::Constant:
      return T(e.value);
    case NodeKind::Variable:
      return vars[e.var_index];
    case NodeKind::Negate:
      return -eval(*e.children[0], vars);
    case NodeKind::Binary: {
      if (e.op == '^') {
        // Constant exponents keep negative bases legal.
        if (e.children[1]->kind == NodeKind::Constant)
          return pow_const(eval(*e.children[0], vars), e.children[1]->value);
        T base = eval(*e.children[0], vars);
        T ex = eval(*e.children[1], vars);
        if (scalar_value(base) <= 0.0)
          throw DomainError("power with nonpositive base and non-constant exponent");
        return exp(ex * log(base));
      }
      T a = eval(*e.children[0], vars);
      T b = eval(*e.children[1], vars);
      switch (e.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        default:  return a / b; // '/' guards zero inside operator/
      }
    }
    case NodeKind::Call: {
      T a = eval(*e.children[0], vars);
      switch (e.func) {
        case Func::Exp:  return exp(a);
        case Func::Log:  return log(a);
        case Func::Sin:  return sin(a);
        case Func::Cos:  return cos(a);
        case Func::Cosh: return cosh(a);
        case Func::Sinh: return sinh(a);
        default:         return sqrt(a);
      }
    }
  }
  throw Error("corrupt expression node");
}

/// A parsed and validated metric declaration.
struct MetricSpec {
  int dim = 0;
  std::vector<std::string> coords;
  std::map<std::pair<int, int>, ExprPtr> entries; // upper-triangular (i <= j)
  Box domain_box;
  std::optional<Split> split_decl;

  std::string print_source() const;
};

/// Parse a metric declaration. Grammar (one statement per ';'):
///   dim = <int>
///   coords = <name> (, <name>)*
///   g[<coord>,<coord>] = <expr>
///   box = <lo>, <hi>              (uniform; default [-3, 3])
///   box[<coord>] = <lo>, <hi>
///   split = <coord>
/// Expressions: + - * / ^ (right-assoc), unary -, functions
/// exp log sin cos cosh sinh sqrt, '#' comments. Unspecified off-diagonal
/// entries are 0. Validation evaluates the matrix on a grid of 5 points per
/// axis and requires symmetry, finiteness and positive definiteness
/// (smallest eigenvalue > 1e-10); with a split declaration the t row must
/// be constant diagonal. Throws SyntaxError / UnknownVariable /
/// UnknownFunction / ValidationFailure.
MetricSpec parse_metric(const std::string& source);

/// Parse just an expression against a fixed coordinate list (test hook and
/// config plumbing).
ExprPtr parse_expression(const std::string& source, const std::vector<std::string>& coords);

class DslMetric final : public MetricFieldCRTP<DslMetric> {
public:
  explicit DslMetric(MetricSpec spec, std::string name = "dsl");

  template <typename T>
  void eval_impl(std::span<const T> x, std::span<T> out) const {
    const int n = dim_;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        auto it = spec_.entries.find({i, j});
        T v = (it == spec_.entries.end()) ? T(0.0) : dsl::eval<T>(*it->second, x);
        out[static_cast<size_t>(i) * n + j] = v;
        out[static_cast<size_t>(j) * n + i] = v;
      }
  }

  const MetricSpec& spec() const { return spec_; }

private:
  MetricSpec spec_;
};

/// Validate a parsed spec and wrap it as a metric field.
std::shared_ptr<const DslMetric> make_dsl_metric(MetricSpec spec, std::string name = "dsl");

} // namespace pinch::dsl

#endif
