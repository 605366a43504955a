#include "terza/expr.hpp"

#include <array>
#include <charconv>
#include <cctype>
#include <cmath>
#include <string>

#include "terza/error.hpp"

namespace terza {

Expr make_variable(Var var, std::size_t position) {
    return std::make_shared<const ExprNode>(ExprNode{NodeKind::Variable, var, {}, 0.0, nullptr, nullptr, position});
}

Expr make_literal(double value, std::size_t position) {
    return std::make_shared<const ExprNode>(ExprNode{NodeKind::Literal, {}, {}, value, nullptr, nullptr, position});
}

Expr make_neg(Expr operand, std::size_t position) {
    return std::make_shared<const ExprNode>(ExprNode{NodeKind::Neg, {}, {}, 0.0, std::move(operand), nullptr, position});
}

Expr make_binary(NodeKind kind, Expr lhs, Expr rhs, std::size_t position) {
    return std::make_shared<const ExprNode>(ExprNode{kind, {}, {}, 0.0, std::move(lhs), std::move(rhs), position});
}

Expr make_pow(Expr base, double exponent, std::size_t position) {
    return std::make_shared<const ExprNode>(ExprNode{NodeKind::Pow, {}, {}, exponent, std::move(base), nullptr, position});
}

Expr make_call(Func func, Expr argument, std::size_t position) {
    return std::make_shared<const ExprNode>(ExprNode{NodeKind::Call, {}, func, 0.0, std::move(argument), nullptr, position});
}

std::string_view func_name(Func f) {
    switch (f) {
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Tan: return "tan";
        case Func::Exp: return "exp";
        case Func::Ln: return "ln";
        case Func::Sqrt: return "sqrt";
    }
    return "?";
}

std::string format_number(double x) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    (void)ec;
    return std::string(buf.data(), end);
}

namespace {

constexpr std::array<Func, 6> kFuncs = {Func::Sin, Func::Cos, Func::Tan, Func::Exp, Func::Ln, Func::Sqrt};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse() {
        Expr e = sum();
        skip_space();
        if (pos_ < text_.size()) {
            if (text_[pos_] == ')') fail("unbalanced parentheses: unexpected ')'");
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_number() {
        skip_space();
        return pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.');
    }

    double number() {
        skip_space();
        const std::size_t start = pos_;
        std::size_t p = pos_;
        auto digits = [&] {
            while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
        };
        digits();
        if (p < text_.size() && text_[p] == '.') {
            ++p;
            digits();
        }
        if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
            if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
                p = q;
                digits();
            }
        }
        double value = 0.0;
        auto [end, ec] = std::from_chars(text_.data() + start, text_.data() + p, value);
        if (ec != std::errc() || end != text_.data() + p) fail_at("malformed number", start);
        pos_ = p;
        return value;
    }

    std::string_view identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Expr sum() {
        Expr e = product();
        for (;;) {
            skip_space();
            const std::size_t at = pos_;
            if (accept('+'))
                e = make_binary(NodeKind::Add, e, product(), at);
            else if (accept('-'))
                e = make_binary(NodeKind::Sub, e, product(), at);
            else
                return e;
        }
    }

    Expr product() {
        Expr e = unary();
        for (;;) {
            skip_space();
            const std::size_t at = pos_;
            if (accept('*'))
                e = make_binary(NodeKind::Mul, e, unary(), at);
            else if (accept('/'))
                e = make_binary(NodeKind::Div, e, unary(), at);
            else
                return e;
        }
    }

    Expr unary() {
        skip_space();
        const std::size_t at = pos_;
        if (accept('-')) return make_neg(unary(), at);
        return power();
    }

    Expr power() {
        Expr e = primary();
        for (;;) {
            skip_space();
            const std::size_t at = pos_;
            if (!accept('^')) return e;
            const bool negative = accept('-');
            if (!at_number()) fail("exponent must be a numeric literal");
            const double x = number();
            e = make_pow(e, negative ? -x : x, at);
        }
    }

    Expr primary() {
        skip_space();
        const std::size_t at = pos_;
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        if (at_number()) return make_literal(number(), at);
        if (accept('(')) {
            Expr e = sum();
            if (!accept(')')) fail("unbalanced parentheses: expected ')'");
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            const std::string_view id = identifier();
            if (id == "u") return make_variable(Var::U, at);
            if (id == "v") return make_variable(Var::V, at);
            for (Func f : kFuncs) {
                if (id == func_name(f)) {
                    if (!accept('(')) fail("function '" + std::string(id) + "' requires parentheses");
                    Expr arg = sum();
                    if (!accept(')')) fail("unbalanced parentheses: expected ')'");
                    return make_call(f, arg, at);
                }
            }
            fail_at("unknown identifier '" + std::string(id) + "'", at);
        }
        if (text_[pos_] == ')') fail("unbalanced parentheses: unexpected ')'");
        fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void print_into(const Expr& e, std::string& out) {
    switch (e->kind) {
        case NodeKind::Variable: out += e->var == Var::U ? "u" : "v"; return;
        case NodeKind::Literal: out += format_number(e->value); return;
        case NodeKind::Neg:
            out += "(-";
            print_into(e->lhs, out);
            out += ')';
            return;
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div: {
            static constexpr std::string_view ops[] = {" + ", " - ", " * ", " / "};
            out += '(';
            print_into(e->lhs, out);
            out += ops[static_cast<int>(e->kind) - static_cast<int>(NodeKind::Add)];
            print_into(e->rhs, out);
            out += ')';
            return;
        }
        case NodeKind::Pow:
            out += '(';
            print_into(e->lhs, out);
            out += '^';
            out += format_number(e->value);
            out += ')';
            return;
        case NodeKind::Call:
            out += func_name(e->func);
            out += '(';
            print_into(e->lhs, out);
            out += ')';
            return;
    }
}

template <class Err>
[[noreturn]] void rethrow_at(const Err& err, std::size_t position) {
    throw Err(std::string(err.what()) + " (expression offset " + std::to_string(position) + ")", position);
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
    std::string out;
    print_into(e, out);
    return out;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case NodeKind::Variable: return a->var == b->var;
        case NodeKind::Literal: return a->value == b->value;
        case NodeKind::Pow: return a->value == b->value && structurally_equal(a->lhs, b->lhs);
        case NodeKind::Call: return a->func == b->func && structurally_equal(a->lhs, b->lhs);
        case NodeKind::Neg: return structurally_equal(a->lhs, b->lhs);
        default: return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
    }
}

bool uses_variable(const Expr& e, Var var) {
    if (!e) return false;
    if (e->kind == NodeKind::Variable) return e->var == var;
    return uses_variable(e->lhs, var) || uses_variable(e->rhs, var);
}

Jet3 eval_expr(const Expr& e, const Jet3& u, const Jet3& v) {
    try {
        switch (e->kind) {
            case NodeKind::Variable: return e->var == Var::U ? u : v;
            case NodeKind::Literal: return Jet3::constant(e->value);
            case NodeKind::Neg: return -eval_expr(e->lhs, u, v);
            case NodeKind::Add: return eval_expr(e->lhs, u, v) + eval_expr(e->rhs, u, v);
            case NodeKind::Sub: return eval_expr(e->lhs, u, v) - eval_expr(e->rhs, u, v);
            case NodeKind::Mul: return eval_expr(e->lhs, u, v) * eval_expr(e->rhs, u, v);
            case NodeKind::Div: return eval_expr(e->lhs, u, v) / eval_expr(e->rhs, u, v);
            case NodeKind::Pow: return pow(eval_expr(e->lhs, u, v), e->value);
            case NodeKind::Call: {
                const Jet3 a = eval_expr(e->lhs, u, v);
                switch (e->func) {
                    case Func::Sin: return sin(a);
                    case Func::Cos: return cos(a);
                    case Func::Tan: return tan(a);
                    case Func::Exp: return exp(a);
                    case Func::Ln: return log(a);
                    case Func::Sqrt: return sqrt(a);
                }
            }
        }
    } catch (const PoleError& err) {
        if (err.position()) throw;
        rethrow_at(err, e->position);
    } catch (const DomainError& err) {
        if (err.position()) throw;
        rethrow_at(err, e->position);
    }
    return {};
}

double eval_real(const Expr& e, double u, double v) {
    switch (e->kind) {
        case NodeKind::Variable: return e->var == Var::U ? u : v;
        case NodeKind::Literal: return e->value;
        case NodeKind::Neg: return -eval_real(e->lhs, u, v);
        case NodeKind::Add: return eval_real(e->lhs, u, v) + eval_real(e->rhs, u, v);
        case NodeKind::Sub: return eval_real(e->lhs, u, v) - eval_real(e->rhs, u, v);
        case NodeKind::Mul: return eval_real(e->lhs, u, v) * eval_real(e->rhs, u, v);
        case NodeKind::Div: return eval_real(e->lhs, u, v) / eval_real(e->rhs, u, v);
        case NodeKind::Pow: return std::pow(eval_real(e->lhs, u, v), e->value);
        case NodeKind::Call: {
            const double a = eval_real(e->lhs, u, v);
            switch (e->func) {
                case Func::Sin: return std::sin(a);
                case Func::Cos: return std::cos(a);
                case Func::Tan: return std::tan(a);
                case Func::Exp: return std::exp(a);
                case Func::Ln: return std::log(a);
                case Func::Sqrt: return std::sqrt(a);
            }
        }
    }
    return 0.0;
}

}  // namespace terza
