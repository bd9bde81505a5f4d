#pragma once

#include "lambda_star.hpp"
#include "poly.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace sgspec {

// Endpoint of a root-counting interval: a rational, an element of
// Q(lambda*), or +/- infinity.
struct NegInfinity {};
struct PosInfinity {};
using SturmEndpoint = std::variant<Rat, LStarElem, NegInfinity, PosInfinity>;

class SturmChain {
public:
    explicit SturmChain(const IntPoly& p) {
        IntPoly f = square_free_part(p);
        chain_.push_back(f);
        if (f.degree() >= 1) {
            chain_.push_back(f.derivative().primitive());
            while (true) {
                const IntPoly& a = chain_[chain_.size() - 2];
                const IntPoly& b = chain_.back();
                IntPoly r = pseudo_rem_pos(a, b);
                if (r.is_zero()) break;
                r = r.abs_primitive();  // strip content without touching signs
                chain_.push_back(-r);
            }
        }
    }

    long square_free_degree() const { return chain_.front().degree(); }
    const IntPoly& square_free() const { return chain_.front(); }

    // Sign variations with zero entries skipped; by this convention the
    // variation count V is right-continuous, so V(a) - V(b) counts the
    // distinct real roots in the half-open interval (a, b].
    int variations(const SturmEndpoint& at) const {
        int count = 0, prev = 0;
        for (const IntPoly& f : chain_) {
            int s = sign_at(f, at);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    // distinct real roots of the square-free part in (a, b]
    int count_roots(const SturmEndpoint& a, const SturmEndpoint& b) const {
        return variations(a) - variations(b);
    }

    static int sign_at(const IntPoly& f, const SturmEndpoint& at) {
        if (f.is_zero()) return 0;
        if (std::holds_alternative<Rat>(at)) return sgn(f.eval<Rat>(std::get<Rat>(at)));
        if (std::holds_alternative<LStarElem>(at)) {
            LStarElem acc;
            for (std::size_t i = f.coeffs().size(); i-- > 0;) {
                acc = acc * std::get<LStarElem>(at);
                acc = acc + LStarElem(Rat(f.coeffs()[i]));
            }
            return lstar_sign(acc);
        }
        int lead = sgn(f.leading());
        if (std::holds_alternative<PosInfinity>(at)) return lead;
        return (f.degree() % 2 == 0) ? lead : -lead;
    }

private:
    std::vector<IntPoly> chain_;
};

// Distinct real roots of the square-free part of p in the half-open
// interval (a, b].
inline int sturm_count(const IntPoly& p, const SturmEndpoint& a, const SturmEndpoint& b) {
    return SturmChain(p).count_roots(a, b);
}

} // namespace sgspec
