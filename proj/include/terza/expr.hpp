#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "terza/jet.hpp"

namespace terza {

enum class NodeKind { Variable, Literal, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class Var { U, V };
enum class Func { Sin, Cos, Tan, Exp, Ln, Sqrt };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

// Immutable expression tree. `position` is the byte offset of the node's
// first character in the parsed text (0 for programmatically built nodes).
//
//  - Variable: var
//  - Literal:  value
//  - Neg:      lhs
//  - Add/Sub/Mul/Div: lhs, rhs
//  - Pow:      lhs ^ value (the exponent is always a numeric literal)
//  - Call:     func(lhs)
struct ExprNode {
    NodeKind kind{};
    Var var{};
    Func func{};
    double value = 0.0;
    Expr lhs;
    Expr rhs;
    std::size_t position = 0;
};

Expr make_variable(Var var, std::size_t position = 0);
Expr make_literal(double value, std::size_t position = 0);
Expr make_neg(Expr operand, std::size_t position = 0);
Expr make_binary(NodeKind kind, Expr lhs, Expr rhs, std::size_t position = 0);
Expr make_pow(Expr base, double exponent, std::size_t position = 0);
Expr make_call(Func func, Expr argument, std::size_t position = 0);

// Grammar, loosest first:
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] number)*
//   primary := number | 'u' | 'v' | func '(' sum ')' | '(' sum ')'
// Throws ParseError carrying the byte offset of the offending token.
Expr parse_expr(std::string_view text);

// Fully parenthesized text that parses back to an identical tree.
std::string print_expr(const Expr& e);

// Ignores source positions.
bool structurally_equal(const Expr& a, const Expr& b);

bool uses_variable(const Expr& e, Var var);

// Evaluates on jets. Jet domain errors are rethrown with the offending
// node's position attached.
Jet3 eval_expr(const Expr& e, const Jet3& u, const Jet3& v);

// Plain real evaluation, for cross-checks.
double eval_real(const Expr& e, double u, double v);

std::string_view func_name(Func f);

// Shortest decimal text that reads back to the same double.
std::string format_number(double x);

}  // namespace terza
