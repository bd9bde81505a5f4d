#pragma once

#include "rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgspec {

// Closed rational interval [lo, hi] enclosing a real number.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (this->lo > this->hi) throw std::invalid_argument("interval bounds out of order");
    }
    static RatInterval point(Rat v) { return RatInterval(v, v); }

    Rat width() const { return hi - lo; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    // 0 when the enclosure still straddles zero
    int sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;
    }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo + b.lo, a.hi + b.hi);
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return RatInterval(a.lo - b.hi, a.hi - b.lo);
    }
    friend RatInterval operator-(const RatInterval& a) { return RatInterval(-a.hi, -a.lo); }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return RatInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                           std::max(std::max(p1, p2), std::max(p3, p4)));
    }
    friend RatInterval operator*(const Rat& s, const RatInterval& a) {
        if (sgn(s) >= 0) return RatInterval(s * a.lo, s * a.hi);
        return RatInterval(s * a.hi, s * a.lo);
    }
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
        if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
        RatInterval inv(Rat(1) / b.hi, Rat(1) / b.lo);
        return a * inv;
    }

    RatInterval intersect(const RatInterval& o) const {
        Rat l = std::max(lo, o.lo), h = std::min(hi, o.hi);
        if (l > h) throw std::domain_error("empty interval intersection");
        return RatInterval(l, h);
    }
};

// Dyadic enclosure of sqrt(v) for rational v >= 0, accurate to 2^-prec_bits.
inline RatInterval sqrt_enclosure(const Rat& v, unsigned prec_bits) {
    if (sgn(v) < 0) throw std::domain_error("square root of a negative value");
    if (sgn(v) == 0) return RatInterval::point(Rat(0));
    Int num = v.get_num(), den = v.get_den();
    Int scale = pow_int(Int(2), 2UL * prec_bits);
    Int lo_arg = (num * scale) / den;              // floor
    Int hi_arg = (num * scale + den - 1) / den;    // ceil
    Int slo = isqrt(lo_arg);
    Int shi = isqrt(hi_arg) + 1;
    Int denom = pow_int(Int(2), prec_bits);
    Rat rlo(slo, denom), rhi(shi, denom);
    rlo.canonicalize();
    rhi.canonicalize();
    return RatInterval(rlo, rhi);
}

// Enclosure of sqrt over an interval with nonnegative lower bound.
inline RatInterval sqrt_enclosure(const RatInterval& v, unsigned prec_bits) {
    if (sgn(v.lo) < 0) throw std::domain_error("square root of an interval reaching below zero");
    RatInterval lo_enc = sqrt_enclosure(v.lo, prec_bits);
    RatInterval hi_enc = sqrt_enclosure(v.hi, prec_bits);
    return RatInterval(lo_enc.lo, hi_enc.hi);
}

// Integer power by repeated squaring; negative exponents require a
// sign-definite base.
// Exact image of x -> x^e over the interval: x^e is monotone on each
// sign half, so even powers of a straddling interval clamp at zero
// instead of picking up a spurious negative range.
inline RatInterval pow_interval(const RatInterval& base, long e) {
    if (e == 0) return RatInterval::point(Rat(1));
    bool invert = e < 0;
    unsigned long k = static_cast<unsigned long>(invert ? -e : e);
    auto powk = [k](const Rat& v) {
        Rat num(pow_int(v.get_num(), k));
        Rat den(pow_int(v.get_den(), k));
        return Rat(num / den);
    };
    Rat plo = powk(base.lo), phi = powk(base.hi);
    RatInterval image{Rat(0), Rat(0)};
    if (k % 2 == 1 || sgn(base.lo) >= 0)
        image = RatInterval{plo, phi};
    else if (sgn(base.hi) <= 0)
        image = RatInterval{phi, plo};
    else
        image = RatInterval{Rat(0), std::max(plo, phi)};
    if (invert) return RatInterval::point(Rat(1)) / image;
    return image;
}

} // namespace sgspec
