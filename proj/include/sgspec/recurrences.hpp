#pragma once

#include "charpoly.hpp"
#include "graph.hpp"
#include "lambda_star.hpp"
#include "poly.hpp"

#include <stdexcept>
#include <vector>

namespace sgspec {

// p_0 = 1, p_1 = x, p_n = x p_{n-1} - p_{n-2}  (path char polys)
inline const IntPoly& path_poly(long n) {
    if (n < 0) throw std::invalid_argument("path_poly needs n >= 0");
    static thread_local std::vector<IntPoly> cache{IntPoly::constant(1), IntPoly::x()};
    while (static_cast<long>(cache.size()) <= n) {
        std::size_t k = cache.size();
        cache.push_back(IntPoly::x() * cache[k - 1] - cache[k - 2]);
    }
    return cache[static_cast<std::size_t>(n)];
}

// q_n = p_n - p_{n-2} - 2 for the all-positive cycle
inline IntPoly cycle_poly(long n) {
    if (n < 3) throw std::invalid_argument("cycle_poly needs n >= 3");
    return path_poly(n) - path_poly(n - 2) - IntPoly::constant(2);
}

// a cycle whose edge signs multiply to -1 flips the constant term
inline IntPoly unbalanced_cycle_poly(long n) {
    if (n < 3) throw std::invalid_argument("unbalanced_cycle_poly needs n >= 3");
    return path_poly(n) - path_poly(n - 2) + IntPoly::constant(2);
}

// phi of T_{a,1,b}: x p_{a+b+1} - p_a p_b
inline IntPoly t_graph_poly(long a, long b) {
    if (a < 1 || b < 1) throw std::invalid_argument("t_graph_poly needs a, b >= 1");
    return IntPoly::x() * path_poly(a + b + 1) - path_poly(a) * path_poly(b);
}

// phi of Q_{a,b,c}: x^2 p_{a+b+c+1} - x p_{a+b} p_c - x p_a p_{b+c} + p_a p_{b-1} p_c
inline IntPoly q_graph_poly(long a, long b, long c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("q_graph_poly needs a, b, c >= 1");
    IntPoly x = IntPoly::x();
    return x * x * path_poly(a + b + c + 1) - x * path_poly(a + b) * path_poly(c) -
           x * path_poly(a) * path_poly(b + c) + path_poly(a) * path_poly(b - 1) * path_poly(c);
}

// phi of the unbalanced quadrilateral with two hanging paths of n1, n2
// vertices at opposite corners
inline IntPoly q_dot_poly(long n1, long n2) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("q_dot_poly needs n1, n2 >= 0");
    return IntPoly::x() * path_poly(n1 + n2 + 3) - path_poly(n1 + 2) * path_poly(n2) -
           path_poly(n1) * path_poly(n2 + 2) + IntPoly::constant(2) * path_poly(n1) * path_poly(n2);
}

// q_dot with one extra pendant vertex at a free corner (the corner adjacent
// to both path-carrying corners), so deleting that corner leaves one path
inline IntPoly q_dot_prime_poly(long n1, long n2) {
    return IntPoly::x() * q_dot_poly(n1, n2) - path_poly(n1 + n2 + 3);
}

// Value in Q(sqrt(x^2-4)) at a fixed rational x: a + b sqrt(d), d = x^2-4.
// Exactly the arithmetic needed to evaluate theta = (x + sqrt(x^2-4))/2
// and check the closed forms for p_n and q_n against the recurrences.
struct QuadValue {
    Rat d, a, b;

    static QuadValue from_rat(const Rat& x, const Rat& value) { return {x * x - 4, value, Rat(0)}; }
    static QuadValue theta(const Rat& x) { return {x * x - 4, x / 2, make_rat(1, 2)}; }
    static QuadValue theta_inverse(const Rat& x) { return {x * x - 4, x / 2, make_rat(-1, 2)}; }

    friend QuadValue operator+(const QuadValue& p, const QuadValue& q) {
        return {p.d, p.a + q.a, p.b + q.b};
    }
    friend QuadValue operator-(const QuadValue& p, const QuadValue& q) {
        return {p.d, p.a - q.a, p.b - q.b};
    }
    friend QuadValue operator*(const QuadValue& p, const QuadValue& q) {
        return {p.d, p.a * q.a + p.b * q.b * p.d, p.a * q.b + p.b * q.a};
    }
    friend QuadValue operator/(const QuadValue& p, const QuadValue& q) {
        Rat norm = q.a * q.a - q.b * q.b * q.d;
        if (sgn(norm) == 0) throw std::domain_error("division by zero in quadratic extension");
        return p * QuadValue{q.d, q.a / norm, -q.b / norm};
    }
    friend bool operator==(const QuadValue& p, const QuadValue& q) {
        return p.a == q.a && p.b == q.b;
    }

    QuadValue pow(unsigned long e) const {
        QuadValue acc{d, Rat(1), Rat(0)}, base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
};

// A path or cycle characteristic polynomial named by its closed form in
// theta, realizable as the exact recurrence polynomial.
struct ThetaForm {
    enum class Kind { PathClosedForm, CycleClosedForm };
    Kind kind;
    long n;

    IntPoly realize() const {
        return kind == Kind::PathClosedForm ? path_poly(n) : cycle_poly(n);
    }

    // (theta^{2n+2}-1)/(theta^{n+2}-theta^n)  or  theta^n + theta^{-n} - 2,
    // evaluated exactly at rational x (x > 2 keeps the divisor nonzero)
    QuadValue closed_form_value(const Rat& x) const {
        QuadValue th = QuadValue::theta(x);
        QuadValue one = QuadValue::from_rat(x, Rat(1));
        auto un = static_cast<unsigned long>(n);
        if (kind == Kind::PathClosedForm)
            return (th.pow(2 * un + 2) - one) / (th.pow(un + 2) - th.pow(un));
        QuadValue thi = QuadValue::theta_inverse(x);
        return th.pow(un) + thi.pow(un) - QuadValue::from_rat(x, Rat(2));
    }
};

namespace detail {

inline IntPoly phi_without(const SignedGraph& g, const std::vector<char>& removed) {
    VertexSet keep;
    for (int i = 0; i < g.n(); ++i)
        if (!removed[static_cast<std::size_t>(i)]) keep.push_back(i);
    if (keep.empty()) return IntPoly::constant(1);
    return char_poly(induced_subgraph(g, keep));
}

} // namespace detail

// Vertex-deletion expansion
//   phi(G) = x phi(G-v) - sum_{u~v} phi(G-v-u) - 2 sum_{C through v} sigma(C) phi(G-C);
// an independent route to the characteristic polynomial, used to
// cross-validate the matrix engine. Simple cycles through v are listed by
// backtracking, so the graph order is capped.
inline IntPoly gill_acharya_expand(const SignedGraph& g, int v) {
    int n = g.n();
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    if (n > 12) throw std::invalid_argument("cycle enumeration is capped at 12 vertices");

    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    removed[static_cast<std::size_t>(v)] = 1;
    IntPoly acc = IntPoly::x() * detail::phi_without(g, removed);

    for (int u = 0; u < n; ++u) {
        if (g.at(v, u) == 0) continue;
        removed[static_cast<std::size_t>(u)] = 1;
        acc = acc - detail::phi_without(g, removed);
        removed[static_cast<std::size_t>(u)] = 0;
    }

    std::vector<int> path{v};
    std::vector<char> in_path(static_cast<std::size_t>(n), 0);
    in_path[static_cast<std::size_t>(v)] = 1;

    auto cycle_term = [&](IntPoly& sink) {
        int last = path.back();
        int sign = g.at(last, v);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) sign *= g.at(path[i], path[i + 1]);
        std::vector<char> rm(static_cast<std::size_t>(n), 0);
        for (int w : path) rm[static_cast<std::size_t>(w)] = 1;
        IntPoly part = IntPoly::constant(2) * detail::phi_without(g, rm);
        sink = (sign > 0) ? sink - part : sink + part;
    };

    auto dfs = [&](auto&& self) -> void {
        int last = path.back();
        // each undirected cycle is kept once, with the smaller v-neighbor first
        if (path.size() >= 3 && g.at(last, v) != 0 && path[1] < last) cycle_term(acc);
        for (int w = 0; w < n; ++w) {
            if (g.at(last, w) == 0 || in_path[static_cast<std::size_t>(w)]) continue;
            path.push_back(w);
            in_path[static_cast<std::size_t>(w)] = 1;
            self(self);
            in_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
    };
    dfs(dfs);
    return acc;
}

enum class AttachmentKind { Bracket, Paren, Bridge };

// phi of an attachment family at lambda* scales by (sqrt5 - 2)^(s - s0)
// off its anchor length s0 (2 for a bracket append, 3 for a paren append
// or a two-sided bridge); sqrt5 - 2 = lambda*^2 - 4 inside the field.
inline LStarElem attachment_reduce_at_lstar(const LStarElem& anchor, long s, AttachmentKind kind) {
    long s0 = (kind == AttachmentKind::Bracket) ? 2 : 3;
    if (s < s0) throw std::invalid_argument("attachment length below the anchor for this kind");
    LStarElem ratio = LStarElem::sqrt5() - LStarElem(Rat(2));
    return anchor * ratio.pow(static_cast<unsigned long>(s - s0));
}

} // namespace sgspec
