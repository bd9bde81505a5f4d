#pragma once

#include "interval.hpp"
#include "rational.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

namespace sgspec {

// Arithmetic expression over rationals, square roots, and integer powers,
// evaluated by certified interval arithmetic at adjustable precision.
class Expr {
public:
    static Expr constant(Rat v) {
        Expr e;
        e.node_ = std::make_shared<Node>(Node{Op::Const, std::move(v), nullptr, nullptr, 0});
        return e;
    }
    static Expr integer(long v) { return constant(Rat(v)); }

    friend Expr operator+(const Expr& a, const Expr& b) { return make(Op::Add, a.node_, b.node_); }
    friend Expr operator-(const Expr& a, const Expr& b) { return make(Op::Sub, a.node_, b.node_); }
    friend Expr operator*(const Expr& a, const Expr& b) { return make(Op::Mul, a.node_, b.node_); }
    friend Expr operator/(const Expr& a, const Expr& b) { return make(Op::Div, a.node_, b.node_); }
    friend Expr operator-(const Expr& a) { return make(Op::Neg, a.node_, nullptr); }
    friend Expr sqrt(const Expr& a) { return make(Op::Sqrt, a.node_, nullptr); }
    friend Expr pow(const Expr& a, long e) {
        Expr r;
        r.node_ = std::make_shared<Node>(Node{Op::IPow, Rat(0), a.node_, nullptr, e});
        return r;
    }

    RatInterval eval(unsigned prec_bits) const { return eval_node(*node_, prec_bits); }

private:
    enum class Op { Const, Add, Sub, Mul, Div, Neg, Sqrt, IPow };

    struct Node {
        Op op;
        Rat value;
        std::shared_ptr<const Node> lhs, rhs;
        long exponent;
    };

    std::shared_ptr<const Node> node_;

    static Expr make(Op o, std::shared_ptr<const Node> l, std::shared_ptr<const Node> r) {
        Expr e;
        e.node_ = std::make_shared<Node>(Node{o, Rat(0), std::move(l), std::move(r), 0});
        return e;
    }

    static RatInterval eval_node(const Node& n, unsigned prec_bits) {
        switch (n.op) {
            case Op::Const: return RatInterval::point(n.value);
            case Op::Add: return eval_node(*n.lhs, prec_bits) + eval_node(*n.rhs, prec_bits);
            case Op::Sub: return eval_node(*n.lhs, prec_bits) - eval_node(*n.rhs, prec_bits);
            case Op::Mul: return eval_node(*n.lhs, prec_bits) * eval_node(*n.rhs, prec_bits);
            case Op::Div: return eval_node(*n.lhs, prec_bits) / eval_node(*n.rhs, prec_bits);
            case Op::Neg: return -eval_node(*n.lhs, prec_bits);
            case Op::Sqrt: {
                RatInterval v = eval_node(*n.lhs, prec_bits);
                if (sgn(v.lo) < 0) throw std::domain_error("negative radicand");
                return sqrt_enclosure(v, prec_bits);
            }
            case Op::IPow: return pow_interval(eval_node(*n.lhs, prec_bits), n.exponent);
        }
        throw std::logic_error("unreachable");
    }
};

// Enclosure refined until its width is at most tol.
inline RatInterval interval_eval(const Expr& e, const Rat& tol) {
    if (sgn(tol) <= 0) throw std::invalid_argument("tolerance must be positive");
    for (unsigned prec = 32; prec <= (1u << 20); prec *= 2) {
        RatInterval v = e.eval(prec);
        if (v.width() <= tol) return v;
    }
    throw std::runtime_error("interval refinement did not reach the requested tolerance");
}

// Certified nonzero sign; refuses to guess if refinement stalls.
inline int certified_sign(const Expr& e) {
    for (unsigned prec = 32; prec <= (1u << 20); prec *= 2) {
        RatInterval v = e.eval(prec);
        int s = v.sign();
        if (s != 0) return s;
        if (sgn(v.lo) == 0 && sgn(v.hi) == 0) return 0;
    }
    throw std::runtime_error("sign not certifiable at the precision cap");
}

} // namespace sgspec
