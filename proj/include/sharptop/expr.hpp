#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "sharptop/rational.hpp"

namespace sharptop {

/**
 * Symbolic expression in spatial variables x0..x_{n-1} and the parameter eps,
 * closed under partial differentiation in each x_i.
 *
 * Serialized as s-expressions, e.g. "(mul (pow eps -1) (sin (div x0 eps)))".
 * pow carries an exact rational exponent. Trees are immutable and share
 * subexpressions freely.
 */
class ExprNet {
public:
    enum class Op { Const, Var, Eps, Add, Sub, Mul, Div, Neg, Pow, Exp, Log, Sin, Cos };

    ExprNet() : ExprNet(constant(Rational(0))) {}

    static ExprNet constant(Rational value);
    static ExprNet var(int index);
    static ExprNet eps();

    friend ExprNet operator+(const ExprNet& a, const ExprNet& b);
    friend ExprNet operator-(const ExprNet& a, const ExprNet& b);
    friend ExprNet operator-(const ExprNet& a);
    friend ExprNet operator*(const ExprNet& a, const ExprNet& b);
    friend ExprNet operator/(const ExprNet& a, const ExprNet& b);
    static ExprNet pow(const ExprNet& base, Rational exponent);
    static ExprNet exp(const ExprNet& a);
    static ExprNet log(const ExprNet& a);
    static ExprNet sin(const ExprNet& a);
    static ExprNet cos(const ExprNet& a);

    Op op() const noexcept;
    bool is_constant() const noexcept { return op() == Op::Const; }
    const Rational& constant_value() const;

    /// 1 + largest variable index appearing; 0 for purely eps/constant nets.
    int dim() const noexcept;

    /// Exact symbolic partial derivative in x_axis. Axes beyond dim()
    /// differentiate to zero.
    ExprNet differentiate(int axis) const;

    /// Pointwise evaluation; may return NaN/inf, callers sampling a grid
    /// convert that to NonFiniteError.
    double eval(std::span<const double> x, double eps_value) const;

    std::string to_sexpr() const;
    static ExprNet parse_sexpr(std::string_view text);

    /// Structural equality on canonicalized trees.
    friend bool operator==(const ExprNet& a, const ExprNet& b);

    struct Node; // opaque; defined in expr.cpp

private:
    explicit ExprNet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

} // namespace sharptop
