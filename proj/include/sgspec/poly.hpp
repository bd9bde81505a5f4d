#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sgspec {

// Dense integer polynomial, coeffs[i] = coefficient of x^i.
// The zero polynomial is represented by an empty vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { strip(); }
    static IntPoly constant(Int v) {
        if (v == 0) return IntPoly{};
        return IntPoly{{std::move(v)}};
    }
    static IntPoly x() { return IntPoly{{Int(0), Int(1)}}; }
    // x^k with coefficient a
    static IntPoly monomial(const Int& a, std::size_t k) {
        if (a == 0) return IntPoly{};
        std::vector<Int> v(k + 1, Int(0));
        v[k] = a;
        return IntPoly{std::move(v)};
    }

    bool is_zero() const { return c_.empty(); }
    // degree of zero polynomial reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& operator[](std::size_t i) const {
        static const Int zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const Int& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPoly{std::move(r)};
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return IntPoly{std::move(r)};
    }
    friend IntPoly operator-(const IntPoly& a) {
        std::vector<Int> r = a.c_;
        for (auto& v : r) v = -v;
        return IntPoly{std::move(r)};
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly{};
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly{std::move(r)};
    }
    friend IntPoly operator*(const Int& s, const IntPoly& a) {
        if (s == 0) return IntPoly{};
        std::vector<Int> r = a.c_;
        for (auto& v : r) v *= s;
        return IntPoly{std::move(r)};
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly derivative() const {
        if (c_.size() <= 1) return IntPoly{};
        std::vector<Int> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Int(static_cast<long>(i)) * c_[i];
        return IntPoly{std::move(r)};
    }

    template <typename T> T eval(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x;
            acc += T(c_[i]);
        }
        return acc;
    }

    Int content() const {
        Int g(0);
        for (const auto& v : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }
    // primitive part with positive leading coefficient
    IntPoly primitive() const {
        if (is_zero()) return IntPoly{};
        Int g = content();
        if (sgn(leading()) < 0) g = -g;
        std::vector<Int> r = c_;
        for (auto& v : r) v /= g;
        return IntPoly{std::move(r)};
    }
    // content stripped but the sign of every coefficient kept
    IntPoly abs_primitive() const {
        if (is_zero()) return IntPoly{};
        Int g = content();
        std::vector<Int> r = c_;
        for (auto& v : r) v /= g;
        return IntPoly{std::move(r)};
    }

    // exact division; throws if the division leaves a remainder
    IntPoly div_exact(const IntPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        if (is_zero()) return IntPoly{};
        std::vector<Int> rem = c_;
        long dd = d.degree();
        long qd = degree() - dd;
        if (qd < 0) throw std::domain_error("inexact polynomial division");
        std::vector<Int> q(static_cast<std::size_t>(qd) + 1, Int(0));
        for (long k = qd; k >= 0; --k) {
            Int& top = rem[static_cast<std::size_t>(k + dd)];
            if (top % d.leading() != 0) throw std::domain_error("inexact polynomial division");
            Int f = top / d.leading();
            q[static_cast<std::size_t>(k)] = f;
            if (f != 0)
                for (long i = 0; i <= dd; ++i)
                    rem[static_cast<std::size_t>(k + i)] -= f * d.c_[static_cast<std::size_t>(i)];
        }
        for (const auto& v : rem)
            if (v != 0) throw std::domain_error("inexact polynomial division");
        return IntPoly{std::move(q)};
    }

    std::string str() const {
        std::ostringstream os;
        if (c_.empty()) return "0";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ' ';
            os << c_[i].get_str();
        }
        return os.str();
    }

private:
    void strip() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b, with the
// overall scale forced positive so real-valued sign behavior matches the
// true remainder.
inline IntPoly pseudo_rem_pos(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    long da = a.degree(), db = b.degree();
    if (da < db) return a;
    const Int& lb = b.leading();
    long steps = da - db + 1;
    std::vector<Int> r(a.coeffs());
    for (long k = da - db; k >= 0; --k) {
        Int top = r[static_cast<std::size_t>(k + db)];
        for (auto& v : r) v *= lb;
        if (top != 0)
            for (long i = 0; i <= db; ++i)
                r[static_cast<std::size_t>(k + i)] -= top * b[static_cast<std::size_t>(i)];
    }
    r.resize(static_cast<std::size_t>(std::max<long>(db, 0)));
    if (sgn(lb) < 0 && (steps % 2) != 0)
        for (auto& v : r) v = -v;
    return IntPoly{std::move(r)};
}

inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem_pos(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// p with repeated roots collapsed: p / gcd(p, p'), primitive, positive leading
inline IntPoly square_free_part(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("square-free part of zero polynomial");
    if (p.degree() == 0) return IntPoly::constant(1);
    IntPoly g = poly_gcd(p, p.derivative());
    return p.primitive().div_exact(g).primitive();
}

inline IntPoly parse_poly(const std::string& line) {
    std::istringstream is(line);
    std::vector<Int> c;
    std::string tok;
    while (is >> tok) c.emplace_back(tok);
    return IntPoly{std::move(c)};
}

} // namespace sgspec
