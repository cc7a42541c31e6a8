#pragma once

#include "adm/lambda_ring.hpp"

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace adm {

enum class NodeKind { Constant, VarX, VarY, VarYp, Neg, Add, Sub, Mul, Div, PowInt, PowXReal, Exp, Ln };

enum class Variable { X, Y, Yp };

struct Node;

/// Immutable expression tree over x, y and yp (= y'). Copies share nodes.
class Expr {
public:
    static Expr constant(double value);
    static Expr var_x();
    static Expr var_y();
    static Expr var_yp();
    static Expr neg(Expr a);
    static Expr add(Expr a, Expr b);
    static Expr sub(Expr a, Expr b);
    static Expr mul(Expr a, Expr b);
    static Expr div(Expr a, Expr b);
    static Expr pow_int(Expr base, int exponent);
    /// x^exponent with a real exponent; the base is always the variable x.
    static Expr pow_x(double exponent);
    static Expr exp(Expr a);
    static Expr ln(Expr a);

    NodeKind kind() const noexcept;
    /// Constant value or PowXReal exponent.
    double value() const noexcept;
    int int_exponent() const noexcept;
    /// Operand `i` (0 or 1) of a unary or binary node.
    Expr child(std::size_t i) const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    friend struct ExprAccess;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Grammar (precedence high to low): unary minus, `^`, `* /`, `+ -`.
/// `^` needs an integer literal exponent unless its base is the token `x`,
/// which accepts any real literal. Functions: exp(.), ln(.).
/// Throws SyntaxError / UnsupportedPower with the character position.
Expr parse(std::string_view source);

/// Fully parenthesized text that parses back to the same tree.
std::string to_string(const Expr& e);

double eval_real(const Expr& e, double x, double y, double yp);

struct LambdaEvalOptions {
    std::size_t term_cap = kDefaultTermCap;
};

/// Structural evaluation over the lambda ring, with x mapped to the series x^1.
LambdaSeries eval_lambda(const Expr& e, const LambdaSeries& y, const LambdaSeries& yp,
                         const LambdaEvalOptions& options = {});

std::set<Variable> free_vars(const Expr& e);

} // namespace adm
