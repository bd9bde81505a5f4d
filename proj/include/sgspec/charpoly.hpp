#pragma once

#include "graph.hpp"
#include "lambda_star.hpp"
#include "poly.hpp"
#include "sturm.hpp"

#include <string>
#include <vector>

namespace sgspec {

// Exact monic characteristic polynomial det(xI - A) via the
// Faddeev-LeVerrier trace recurrence; every division is asserted exact.
inline IntPoly char_poly(const SignedGraph& g) {
    int n = g.n();
    std::vector<Int> c(static_cast<std::size_t>(n) + 1, Int(0));
    c[static_cast<std::size_t>(n)] = 1;

    auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
    std::vector<Int> A(static_cast<std::size_t>(n) * n, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[idx(i, j)] = g.at(i, j);

    std::vector<Int> M = A;
    Int tr(0);
    for (int i = 0; i < n; ++i) tr += M[idx(i, i)];
    c[static_cast<std::size_t>(n - 1)] = -tr;

    std::vector<Int> next(static_cast<std::size_t>(n) * n, Int(0));
    for (int k = 2; k <= n; ++k) {
        // M := A * (M + c_{n-k+1} I)
        const Int& shift = c[static_cast<std::size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i) M[idx(i, i)] += shift;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int s(0);
                for (int l = 0; l < n; ++l)
                    if (A[idx(i, l)] != 0) s += A[idx(i, l)] * M[idx(l, j)];
                next[idx(i, j)] = s;
            }
        std::swap(M, next);
        tr = 0;
        for (int i = 0; i < n; ++i) tr += M[idx(i, i)];
        if (tr % k != 0) throw std::logic_error("trace recurrence produced a non-integral coefficient");
        c[static_cast<std::size_t>(n - k)] = -tr / k;
    }
    return IntPoly{std::move(c)};
}

enum class RhoVerdict {
    Below2,
    Exactly2,
    Between2AndLambdaStar,
    ExactlyLambdaStar,
    AboveLambdaStar,
};

inline const char* to_string(RhoVerdict v) {
    switch (v) {
        case RhoVerdict::Below2: return "Below2";
        case RhoVerdict::Exactly2: return "Exactly2";
        case RhoVerdict::Between2AndLambdaStar: return "Between2AndLambdaStar";
        case RhoVerdict::ExactlyLambdaStar: return "ExactlyLambdaStar";
        case RhoVerdict::AboveLambdaStar: return "AboveLambdaStar";
    }
    return "?";
}

inline bool verdict_at_most_lambda_star(RhoVerdict v) { return v != RhoVerdict::AboveLambdaStar; }
inline bool verdict_above_2(RhoVerdict v) {
    return v == RhoVerdict::Between2AndLambdaStar || v == RhoVerdict::ExactlyLambdaStar ||
           v == RhoVerdict::AboveLambdaStar;
}

struct RhoResult {
    RhoVerdict verdict;
    IntPoly witness;  // the characteristic polynomial that decided it
};

// Exact placement of the largest root magnitude relative to 2 and
// lambda*: rho <= t iff every real root lies in [-t, t], decided by Sturm
// counts on (-t, t] plus an exact root test at -t. Counts are compared
// against the number of real roots, so polynomials with complex roots
// (anything that is not a symmetric characteristic polynomial) classify
// by their real roots alone.
inline RhoResult rho_verdict_poly(const IntPoly& phi) {
    SturmChain chain(phi);
    const IntPoly& sf = chain.square_free();

    LStarElem lam = LStarElem::lambda();
    LStarElem at_lam = lstar_from_poly(sf);
    bool root_at_lambda = at_lam.is_zero();  // iff x^4-4x^2-1 divides sf

    int real_count =
        chain.count_roots(SturmEndpoint(NegInfinity{}), SturmEndpoint(PosInfinity{}));
    int count_ls = chain.count_roots(SturmEndpoint(-lam), SturmEndpoint(lam));
    bool neg_lam_root = root_at_lambda;  // minimal polynomial is even in x^2
    bool all_in_ls = (count_ls + (neg_lam_root ? 1 : 0)) == real_count;

    Rat two(2), minus_two(-2);
    bool root_at_2 = sgn(sf.eval<Rat>(two)) == 0;
    bool root_at_m2 = sgn(sf.eval<Rat>(minus_two)) == 0;
    int count_2 = chain.count_roots(SturmEndpoint(minus_two), SturmEndpoint(two));
    bool all_in_2 = (count_2 + (root_at_m2 ? 1 : 0)) == real_count;

    RhoVerdict v;
    if (all_in_2)
        v = (root_at_2 || root_at_m2) ? RhoVerdict::Exactly2 : RhoVerdict::Below2;
    else if (all_in_ls)
        v = root_at_lambda ? RhoVerdict::ExactlyLambdaStar : RhoVerdict::Between2AndLambdaStar;
    else
        v = RhoVerdict::AboveLambdaStar;
    return {v, phi};
}

inline RhoResult rho_verdict(const SignedGraph& g) { return rho_verdict_poly(char_poly(g)); }

struct EigenvalueEnclosure {
    Rat lo, hi;
    int multiplicity;
};

namespace detail {

// Square-free decomposition by repeated deflation: peel off the
// square-free part until nothing is left, then difference consecutive
// layers to isolate roots of each exact multiplicity.
inline std::vector<IntPoly> square_free_factors(const IntPoly& p) {
    std::vector<IntPoly> factors;
    IntPoly cur = p.primitive();
    while (cur.degree() >= 1) {
        IntPoly sf = square_free_part(cur);
        factors.push_back(sf);
        cur = cur.div_exact(sf).primitive();
    }
    // factors[k] currently holds the square-free part of the k-th
    // deflation: a root of multiplicity m appears in entries 0..m-1.
    // Convert to exclusive factors: e_k = factors[k] / factors[k+1].
    std::vector<IntPoly> excl;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k + 1 < factors.size()) {
            IntPoly g2 = poly_gcd(factors[k], factors[k + 1]);
            excl.push_back(factors[k].div_exact(g2).primitive());
        } else {
            excl.push_back(factors[k]);
        }
    }
    return excl;  // excl[i] = roots of multiplicity exactly i+1
}

} // namespace detail

// All eigenvalues as isolating rational enclosures of width <= tol, with
// multiplicities read off the square-free decomposition.
inline std::vector<EigenvalueEnclosure> numeric_spectrum(const SignedGraph& g, const Rat& tol) {
    if (sgn(tol) <= 0) throw std::invalid_argument("tolerance must be positive");
    IntPoly phi = char_poly(g);
    std::vector<EigenvalueEnclosure> out;
    auto factors = detail::square_free_factors(phi);
    for (std::size_t mi = 0; mi < factors.size(); ++mi) {
        const IntPoly& f = factors[mi];
        if (f.degree() < 1) continue;
        SturmChain chain(f);
        // Cauchy bound
        Rat bound(1);
        for (const auto& c : f.coeffs()) {
            Rat t = abs(Rat(c) / Rat(f.leading()));
            if (t + 1 > bound) bound = t + 1;
        }
        struct Seg { Rat a, b; int count; };
        std::vector<Seg> work{{-bound, bound,
                               chain.count_roots(SturmEndpoint(Rat(-bound)), SturmEndpoint(Rat(bound)))}};
        while (!work.empty()) {
            Seg s = work.back();
            work.pop_back();
            if (s.count == 0) continue;
            if (s.count == 1 && s.b - s.a <= tol) {
                out.push_back({s.a, s.b, static_cast<int>(mi) + 1});
                continue;
            }
            Rat m = (s.a + s.b) / 2;
            int left = chain.count_roots(SturmEndpoint(s.a), SturmEndpoint(m));
            work.push_back({s.a, m, left});
            work.push_back({m, s.b, s.count - left});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const EigenvalueEnclosure& x, const EigenvalueEnclosure& y) { return x.lo < y.lo; });
    return out;
}

// Sanity oracle for eigenvalue interlacing of an induced subgraph; returns
// false only on a certified violation.
inline bool check_interlacing(const SignedGraph& g, const VertexSet& u) {
    if (u.empty() || static_cast<int>(u.size()) >= g.n())
        throw std::invalid_argument("interlacing check needs a proper non-empty subset");
    Rat tol = make_rat(1, 1 << 20);
    auto expand = [](const std::vector<EigenvalueEnclosure>& enc) {
        std::vector<EigenvalueEnclosure> all;
        for (const auto& e : enc)
            for (int i = 0; i < e.multiplicity; ++i) all.push_back(e);
        return all;
    };
    auto lam = expand(numeric_spectrum(g, tol));                       // size n, ascending
    auto mu = expand(numeric_spectrum(induced_subgraph(g, u), tol));   // size m
    int n = static_cast<int>(lam.size()), m = static_cast<int>(mu.size());
    // descending convention: lambda_i >= mu_i >= lambda_{i+n-m}
    std::reverse(lam.begin(), lam.end());
    std::reverse(mu.begin(), mu.end());
    for (int i = 0; i < m; ++i) {
        if (mu[static_cast<std::size_t>(i)].lo > lam[static_cast<std::size_t>(i)].hi) return false;
        if (mu[static_cast<std::size_t>(i)].hi < lam[static_cast<std::size_t>(i + n - m)].lo) return false;
    }
    return true;
}

} // namespace sgspec
