#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "hessjet/jet2.hpp"

namespace hj {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind { Number, Variable, Add, Sub, Mul, Div, Pow, Neg, Call };
enum class Function { Exp, Log, Sin, Cos, Sqrt };

struct Expr {
    ExprKind kind = ExprKind::Number;
    double value = 0.0;  // Number
    int variable = 0;    // Variable: 1 or 2
    int exponent = 0;    // Pow
    Function function = Function::Exp;
    std::vector<ExprPtr> args;
};

bool operator==(const Expr& a, const Expr& b);

/// Parses an expression in y1, y2. Throws SyntaxError with a 0-based offset.
ExprPtr parse(const std::string& text);

/// Fully parenthesized text that parses back to the same tree.
std::string print(const Expr& e);

/// Taylor jet of e at the base point. Throws DomainError when e is not
/// analytic there and DivisionByZeroConstantTerm for a vanishing divisor.
Jet2 eval_jet(const Expr& e, const std::array<double, 2>& base, int order);

/// Plain double evaluation at a point.
double eval(const Expr& e, const std::array<double, 2>& point);

}  // namespace hj
