#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cutkit/rational.hpp"

namespace cutkit {

// Smooth numeric expressions with exact rational leaves and symbolic partial
// derivatives.  Used for maps (psi_bar, twists, Hadamard factors); the form
// algebra stays in the exact monomial classes.
class Expr {
public:
    enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Sin, Cos, Exp, Sqrt };

    Expr() : Expr(constant(0)) {}

    static Expr constant(Rat v) {
        auto n = std::make_shared<Node>();
        n->op = Op::Const;
        n->value = std::move(v);
        return Expr(std::move(n));
    }
    static Expr constant(long v) { return constant(Rat(v)); }
    static Expr variable(int index) {
        auto n = std::make_shared<Node>();
        n->op = Op::Var;
        n->var = index;
        return Expr(std::move(n));
    }

    Op op() const { return node_->op; }
    const Rat& value() const { return node_->value; }
    int var() const { return node_->var; }
    int ipow() const { return node_->ipow; }
    const std::vector<Expr>& args() const { return node_->args; }

    bool is_const() const { return node_->op == Op::Const; }
    bool is_const(const Rat& v) const { return is_const() && node_->value == v; }

    friend Expr operator+(const Expr& a, const Expr& b) {
        if (a.is_const(Rat(0))) return b;
        if (b.is_const(Rat(0))) return a;
        if (a.is_const() && b.is_const()) return constant(a.value() + b.value());
        return make(Op::Add, {a, b});
    }
    friend Expr operator-(const Expr& a, const Expr& b) {
        if (b.is_const(Rat(0))) return a;
        if (a.is_const() && b.is_const()) return constant(a.value() - b.value());
        return make(Op::Sub, {a, b});
    }
    friend Expr operator-(const Expr& a) {
        if (a.is_const()) return constant(-a.value());
        return make(Op::Neg, {a});
    }
    friend Expr operator*(const Expr& a, const Expr& b) {
        if (a.is_const(Rat(0)) || b.is_const(Rat(0))) return constant(0);
        if (a.is_const(Rat(1))) return b;
        if (b.is_const(Rat(1))) return a;
        if (a.is_const() && b.is_const()) return constant(a.value() * b.value());
        return make(Op::Mul, {a, b});
    }
    friend Expr operator/(const Expr& a, const Expr& b) {
        if (b.is_const(Rat(1))) return a;
        if (a.is_const(Rat(0))) return constant(0);
        return make(Op::Div, {a, b});
    }

    Expr pow(int e) const {
        if (e == 0) return constant(1);
        if (e == 1) return *this;
        return make_pow(*this, e);
    }
    static Expr sin(const Expr& a) { return make(Op::Sin, {a}); }
    static Expr cos(const Expr& a) { return make(Op::Cos, {a}); }
    static Expr exp(const Expr& a) { return make(Op::Exp, {a}); }
    static Expr sqrt(const Expr& a) { return make(Op::Sqrt, {a}); }

    double eval(std::span<const double> vars) const {
        switch (node_->op) {
            case Op::Const: return rat_double(node_->value);
            case Op::Var:
                if (node_->var >= (int)vars.size()) throw DomainError("variable out of range");
                return vars[node_->var];
            case Op::Add: return node_->args[0].eval(vars) + node_->args[1].eval(vars);
            case Op::Sub: return node_->args[0].eval(vars) - node_->args[1].eval(vars);
            case Op::Mul: return node_->args[0].eval(vars) * node_->args[1].eval(vars);
            case Op::Div: {
                double den = node_->args[1].eval(vars);
                if (den == 0.0) throw DomainError("division by zero in expression");
                return node_->args[0].eval(vars) / den;
            }
            case Op::Neg: return -node_->args[0].eval(vars);
            case Op::Pow: return std::pow(node_->args[0].eval(vars), node_->ipow);
            case Op::Sin: return std::sin(node_->args[0].eval(vars));
            case Op::Cos: return std::cos(node_->args[0].eval(vars));
            case Op::Exp: return std::exp(node_->args[0].eval(vars));
            case Op::Sqrt: {
                double v = node_->args[0].eval(vars);
                if (v < 0) throw DomainError("sqrt of negative value");
                return std::sqrt(v);
            }
        }
        throw DomainError("bad expression node");
    }

    Expr diff(int v) const {
        switch (node_->op) {
            case Op::Const: return constant(0);
            case Op::Var: return constant(node_->var == v ? 1 : 0);
            case Op::Add: return node_->args[0].diff(v) + node_->args[1].diff(v);
            case Op::Sub: return node_->args[0].diff(v) - node_->args[1].diff(v);
            case Op::Mul:
                return node_->args[0].diff(v) * node_->args[1] +
                       node_->args[0] * node_->args[1].diff(v);
            case Op::Div: {
                const Expr &f = node_->args[0], &g = node_->args[1];
                return (f.diff(v) * g - f * g.diff(v)) / (g * g);
            }
            case Op::Neg: return -node_->args[0].diff(v);
            case Op::Pow: {
                const Expr& f = node_->args[0];
                return constant(node_->ipow) * f.pow(node_->ipow - 1) * f.diff(v);
            }
            case Op::Sin: return cos(node_->args[0]) * node_->args[0].diff(v);
            case Op::Cos: return -(sin(node_->args[0]) * node_->args[0].diff(v));
            case Op::Exp: return exp(node_->args[0]) * node_->args[0].diff(v);
            case Op::Sqrt:
                return node_->args[0].diff(v) / (constant(2) * sqrt(node_->args[0]));
        }
        throw DomainError("bad expression node");
    }

    // Substitute every variable i by replacements[i].
    Expr subst(const std::vector<Expr>& replacements) const {
        switch (node_->op) {
            case Op::Const: return *this;
            case Op::Var:
                if (node_->var >= (int)replacements.size())
                    throw DomainError("substitution missing a variable");
                return replacements[node_->var];
            default: {
                std::vector<Expr> args;
                args.reserve(node_->args.size());
                for (auto& a : node_->args) args.push_back(a.subst(replacements));
                if (node_->op == Op::Pow) return make_pow(args[0], node_->ipow);
                return make(node_->op, std::move(args));
            }
        }
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        std::ostringstream os;
        print(os, names);
        return os.str();
    }

private:
    struct Node {
        Op op = Op::Const;
        Rat value{0};
        int var = 0;
        int ipow = 0;
        std::vector<Expr> args;
    };

    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    static Expr make(Op op, std::vector<Expr> args) {
        auto n = std::make_shared<Node>();
        n->op = op;
        n->args = std::move(args);
        return Expr(std::move(n));
    }
    static Expr make_pow(const Expr& base, int e) {
        auto n = std::make_shared<Node>();
        n->op = Op::Pow;
        n->args = {base};
        n->ipow = e;
        return Expr(std::move(n));
    }

    void print(std::ostringstream& os, const std::vector<std::string>& names) const {
        auto arg = [&](int i) { return node_->args[i].str(names); };
        switch (node_->op) {
            case Op::Const: os << rat_str(node_->value); break;
            case Op::Var:
                if (node_->var < (int)names.size())
                    os << names[node_->var];
                else
                    os << "v" << node_->var;
                break;
            case Op::Add: os << "(" << arg(0) << " + " << arg(1) << ")"; break;
            case Op::Sub: os << "(" << arg(0) << " - " << arg(1) << ")"; break;
            case Op::Mul: os << "(" << arg(0) << " * " << arg(1) << ")"; break;
            case Op::Div: os << "(" << arg(0) << " / " << arg(1) << ")"; break;
            case Op::Neg: os << "(-" << arg(0) << ")"; break;
            case Op::Pow: os << arg(0) << "^" << node_->ipow; break;
            case Op::Sin: os << "sin(" << arg(0) << ")"; break;
            case Op::Cos: os << "cos(" << arg(0) << ")"; break;
            case Op::Exp: os << "exp(" << arg(0) << ")"; break;
            case Op::Sqrt: os << "sqrt(" << arg(0) << ")"; break;
        }
    }

    std::shared_ptr<const Node> node_;

    friend class ExprBuilder;
};

// A complex-valued expression as a (re, im) pair; enough for unit twists.
struct CExpr {
    Expr re = Expr::constant(1);
    Expr im = Expr::constant(0);

    static CExpr one() { return {Expr::constant(1), Expr::constant(0)}; }
    static CExpr i() { return {Expr::constant(0), Expr::constant(1)}; }
    static CExpr unit_phase(const Expr& angle) { return {Expr::cos(angle), Expr::sin(angle)}; }

    friend CExpr operator*(const CExpr& a, const CExpr& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    CExpr subst(const std::vector<Expr>& replacements) const {
        return {re.subst(replacements), im.subst(replacements)};
    }
    std::complex<double> eval(std::span<const double> vars) const {
        return {re.eval(vars), im.eval(vars)};
    }
};

}  // namespace cutkit
