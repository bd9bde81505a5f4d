#pragma once

#include "interval.hpp"
#include "poly.hpp"
#include "rational.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace sgspec {

// lambda* = sqrt(2 + sqrt(5)), the largest root of x^4 - 4x^2 - 1.
inline const IntPoly& lambda_star_min_poly() {
    static const IntPoly p{{Int(-1), Int(0), Int(-4), Int(0), Int(1)}};
    return p;
}

namespace detail {
// outward rounding to denominator 2^bits keeps Newton iterates small
inline RatInterval round_outward(const RatInterval& x, unsigned bits) {
    Int scale = pow_int(Int(2), bits);
    Int lo_num = x.lo.get_num() * scale / x.lo.get_den();
    if (lo_num * x.lo.get_den() > x.lo.get_num() * scale) lo_num -= 1;
    Int hi_num = x.hi.get_num() * scale / x.hi.get_den();
    if (hi_num * x.hi.get_den() < x.hi.get_num() * scale) hi_num += 1;
    Rat lo(lo_num, scale), hi(hi_num, scale);
    lo.canonicalize();
    hi.canonicalize();
    return RatInterval(lo, hi);
}
} // namespace detail

// Enclosure of lambda* to roughly the requested number of correct bits,
// via interval Newton on x^4 - 4x^2 - 1 from the seed [2.057, 2.059].
// p' = 4x^3 - 8x is positive and increasing on the seed, so the Newton
// step divides by a sign-definite interval.
inline RatInterval lambda_star_enclosure(unsigned prec_bits) {
    thread_local std::map<unsigned, RatInterval> cache;
    auto it = cache.find(prec_bits);
    if (it != cache.end()) return it->second;

    RatInterval x(make_rat(2057, 1000), make_rat(2059, 1000));
    const IntPoly& p = lambda_star_min_poly();
    const IntPoly dp = p.derivative();
    Rat tol(Int(1), pow_int(Int(2), prec_bits));
    tol.canonicalize();
    while (x.width() > tol) {
        Rat m = (x.lo + x.hi) / 2;
        Rat pm = p.eval<Rat>(m);
        RatInterval d(dp.eval<Rat>(x.lo), dp.eval<Rat>(x.hi));
        RatInterval step = RatInterval::point(pm) / d;
        RatInterval nx(m - step.hi, m - step.lo);
        x = detail::round_outward(x.intersect(nx), prec_bits + 8);
    }
    cache.emplace(prec_bits, x);
    return x;
}

// Element of Q(lambda*) as c0 + c1*L + c2*L^2 + c3*L^3 with L^4 = 4L^2 + 1.
class LStarElem {
public:
    LStarElem() : c_{Rat(0), Rat(0), Rat(0), Rat(0)} {}
    explicit LStarElem(Rat constant) : c_{std::move(constant), Rat(0), Rat(0), Rat(0)} {}
    explicit LStarElem(const Int& constant) : LStarElem(Rat(constant)) {}
    LStarElem(Rat c0, Rat c1, Rat c2, Rat c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static LStarElem lambda() { return LStarElem(Rat(0), Rat(1), Rat(0), Rat(0)); }
    // sqrt(5) = lambda*^2 - 2
    static LStarElem sqrt5() { return LStarElem(Rat(-2), Rat(0), Rat(1), Rat(0)); }

    const Rat& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    bool is_zero() const {
        return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
    }

    friend LStarElem operator+(const LStarElem& a, const LStarElem& b) {
        return LStarElem(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]);
    }
    friend LStarElem operator-(const LStarElem& a, const LStarElem& b) {
        return LStarElem(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]);
    }
    friend LStarElem operator-(const LStarElem& a) {
        return LStarElem(-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]);
    }
    friend LStarElem operator*(const Rat& s, const LStarElem& a) {
        return LStarElem(s * a.c_[0], s * a.c_[1], s * a.c_[2], s * a.c_[3]);
    }
    friend LStarElem operator*(const LStarElem& a, const LStarElem& b) {
        std::array<Rat, 7> prod{};
        for (int i = 0; i < 4; ++i) {
            if (sgn(a.c_[static_cast<std::size_t>(i)]) == 0) continue;
            for (int j = 0; j < 4; ++j)
                prod[static_cast<std::size_t>(i + j)] +=
                    a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        }
        // reduce with L^k = 4 L^(k-2) + L^(k-4)
        for (int k = 6; k >= 4; --k) {
            Rat v = prod[static_cast<std::size_t>(k)];
            if (sgn(v) == 0) continue;
            prod[static_cast<std::size_t>(k - 2)] += 4 * v;
            prod[static_cast<std::size_t>(k - 4)] += v;
            prod[static_cast<std::size_t>(k)] = 0;
        }
        return LStarElem(prod[0], prod[1], prod[2], prod[3]);
    }
    friend bool operator==(const LStarElem& a, const LStarElem& b) {
        return a.c_ == b.c_;
    }

    LStarElem pow(unsigned long e) const {
        LStarElem acc(Rat(1));
        LStarElem b = *this;
        while (e) {
            if (e & 1UL) acc = acc * b;
            b = b * b;
            e >>= 1UL;
        }
        return acc;
    }

    // multiply by lambda with immediate reduction
    LStarElem times_lambda() const {
        return LStarElem(c_[3], c_[0], c_[1] + 4 * c_[3], c_[2]);
    }

    RatInterval enclosure(unsigned prec_bits) const {
        RatInterval L = lambda_star_enclosure(prec_bits);
        RatInterval L2 = L * L;
        RatInterval L3 = L2 * L;
        return RatInterval::point(c_[0]) + c_[1] * L + c_[2] * L2 + c_[3] * L3;
    }

    double to_double() const {
        const double L = 2.0581710272714924;
        return c_[0].get_d() + c_[1].get_d() * L + c_[2].get_d() * L * L + c_[3].get_d() * L * L * L;
    }

private:
    std::array<Rat, 4> c_;
};

// p(lambda*) reduced into the field.
inline LStarElem lstar_from_poly(const IntPoly& p) {
    LStarElem acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc.times_lambda();
        acc = acc + LStarElem(Rat(p.coeffs()[i]));
    }
    return acc;
}

// Exact sign of the real number an element represents. Zero is exact
// (the basis 1, L, L^2, L^3 is Q-linearly independent); otherwise the
// lambda* enclosure is refined until the evaluated interval clears zero.
inline int lstar_sign(const LStarElem& e) {
    if (e.is_zero()) return 0;
    for (unsigned prec = 32;; prec *= 2) {
        int s = e.enclosure(prec).sign();
        if (s != 0) return s;
        if (prec > (1U << 20)) throw std::runtime_error("sign refinement failed to converge");
    }
}

} // namespace sgspec
