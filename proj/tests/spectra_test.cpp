#include <catch2/catch_amalgamated.hpp>

#include <sgspec/charpoly.hpp>
#include <sgspec/families.hpp>
#include <sgspec/graph.hpp>
#include <sgspec/recurrences.hpp>

using namespace sgspec;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {
    IntPoly p;
    std::size_t k = 0;
    for (long c : coeffs) p = p + IntPoly::monomial(Int(c), k++);
    return p;
}

} // namespace

TEST_CASE("characteristic polynomials of small graphs") {
    REQUIRE(char_poly(SignedGraph(1)) == poly({0, 1}));
    REQUIRE(char_poly(SignedGraph::build(2, {{0, 1, 1}})) == poly({-1, 0, 1}));
    REQUIRE(char_poly(SignedGraph::build(2, {{0, 1, -1}})) == poly({-1, 0, 1}));
    // P3: x^3 - 2x
    REQUIRE(char_poly(make_path(3)) == poly({0, -2, 0, 1}));
    // balanced C3: (x-2)(x+1)^2
    SignedGraph c3 = SignedGraph::build(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    REQUIRE(char_poly(c3) == poly({-2, -3, 0, 1}));
    // unbalanced C4: x^4 - 4x^2 + 4 = (x^2-2)^2
    SignedGraph c4m = make_cycle(4, false);
    REQUIRE(char_poly(c4m) == poly({4, 0, -4, 0, 1}));
    // charpoly only sees the switching class
    REQUIRE(char_poly(switch_at(c4m, {0, 2})) == char_poly(c4m));
}

TEST_CASE("five-way verdicts") {
    REQUIRE(rho_verdict(SignedGraph::build(2, {{0, 1, 1}})).verdict == RhoVerdict::Below2);
    REQUIRE(rho_verdict(make_path(5)).verdict == RhoVerdict::Below2);
    REQUIRE(rho_verdict(make_T(1, 2, 5)).verdict == RhoVerdict::Exactly2);
    REQUIRE(rho_verdict(make_cycle(6, true)).verdict == RhoVerdict::Exactly2);
    REQUIRE(rho_verdict(make_theta(8, 2, 0)).verdict == RhoVerdict::Between2AndLambdaStar);
    REQUIRE(rho_verdict(make_T(2, 3, 4)).verdict == RhoVerdict::AboveLambdaStar);
    REQUIRE(rho_verdict(make_star14()).verdict == RhoVerdict::Exactly2);
}

TEST_CASE("verdict at the algebraic boundary") {
    // no graph at hand with rho exactly lambda*, but the verdict logic is
    // polynomial-level: feed the minimal polynomial itself
    RhoResult r = rho_verdict_poly(poly({-1, 0, -4, 0, 1}));
    REQUIRE(r.verdict == RhoVerdict::ExactlyLambdaStar);
    // and scaled or multiplied by clean factors it must not change
    RhoResult r2 = rho_verdict_poly(poly({-1, 0, -4, 0, 1}) * poly({-1, 0, 1}));
    REQUIRE(r2.verdict == RhoVerdict::ExactlyLambdaStar);
    RhoResult r3 = rho_verdict_poly(poly({-1, 0, -4, 0, 1}) * poly({-9, 0, 1}));
    REQUIRE(r3.verdict == RhoVerdict::AboveLambdaStar);
}

TEST_CASE("verdict five-way is exhaustive on the band boundaries") {
    // x^2 - 4 has roots exactly +-2
    REQUIRE(rho_verdict_poly(poly({-4, 0, 1})).verdict == RhoVerdict::Exactly2);
    // sqrt(17)/2 = 2.0616 already exceeds lambda*: 17/4 > 2 + sqrt(5)
    REQUIRE(rho_verdict_poly(poly({-17, 0, 4})).verdict == RhoVerdict::AboveLambdaStar);
    // 41/20 = 2.05 sits strictly inside (2, lambda*)
    REQUIRE(rho_verdict_poly(poly({-1681, 0, 400})).verdict ==
            RhoVerdict::Between2AndLambdaStar);
    // just above lambda*: x^2 - 9/2
    REQUIRE(rho_verdict_poly(poly({-9, 0, 2})).verdict == RhoVerdict::AboveLambdaStar);
    // negative spectral side decides too: (x+3)(x-1)...
    REQUIRE(rho_verdict_poly(poly({-3, 2, 1})).verdict == RhoVerdict::AboveLambdaStar);
}

TEST_CASE("witness polynomial is the characteristic polynomial") {
    SignedGraph g = make_theta(6, 2, 0);
    RhoResult r = rho_verdict(g);
    REQUIRE(r.witness == char_poly(g));
    REQUIRE(r.verdict == RhoVerdict::Between2AndLambdaStar);
}

TEST_CASE("verdict helpers") {
    REQUIRE(verdict_at_most_lambda_star(RhoVerdict::Below2));
    REQUIRE(verdict_at_most_lambda_star(RhoVerdict::ExactlyLambdaStar));
    REQUIRE_FALSE(verdict_at_most_lambda_star(RhoVerdict::AboveLambdaStar));
    REQUIRE_FALSE(verdict_above_2(RhoVerdict::Exactly2));
    REQUIRE(verdict_above_2(RhoVerdict::Between2AndLambdaStar));
    REQUIRE(std::string(to_string(RhoVerdict::Between2AndLambdaStar)) ==
            "Between2AndLambdaStar");
}

TEST_CASE("numeric spectrum encloses eigenvalues with multiplicity") {
    // unbalanced C4 has eigenvalues +-sqrt2, each twice
    auto enc = numeric_spectrum(make_cycle(4, false), make_rat(1, 1000000));
    REQUIRE(enc.size() == 2);
    REQUIRE(enc[0].multiplicity == 2);
    REQUIRE(enc[1].multiplicity == 2);
    REQUIRE(enc[0].hi < Rat(0));
    REQUIRE(enc[1].lo > Rat(0));
    // the negative bracket flips under squaring: lo is the farther endpoint
    REQUIRE(enc[0].lo * enc[0].lo >= Rat(2));
    REQUIRE(enc[0].hi * enc[0].hi <= Rat(2));
    REQUIRE(enc[1].lo * enc[1].lo <= Rat(2));
    REQUIRE(enc[1].hi * enc[1].hi >= Rat(2));
    REQUIRE(enc[1].hi - enc[1].lo <= make_rat(1, 1000000));

    // P2: +-1 exactly
    auto p2 = numeric_spectrum(SignedGraph::build(2, {{0, 1, -1}}), make_rat(1, 1024));
    REQUIRE(p2.size() == 2);
    REQUIRE(p2[0].lo <= Rat(-1));
    REQUIRE(p2[0].hi >= Rat(-1));

    REQUIRE_THROWS_AS(numeric_spectrum(make_path(3), Rat(0)), std::invalid_argument);
}

TEST_CASE("interlacing check") {
    SignedGraph c6 = make_cycle(6, true);
    REQUIRE(check_interlacing(c6, {0, 1, 2}));
    REQUIRE(check_interlacing(c6, {0, 2, 4}));
    for (int v = 0; v < 6; ++v) REQUIRE(check_interlacing(c6, {v}));
    SignedGraph t = make_T(2, 3, 4);
    REQUIRE(check_interlacing(t, {0, 1, 2, 3}));
    REQUIRE_THROWS_AS(check_interlacing(c6, {}), std::invalid_argument);
}

TEST_CASE("balanced and unbalanced cycles disagree exactly when odd order would say so") {
    for (long k = 3; k <= 8; ++k) {
        REQUIRE(char_poly(make_cycle(k, true)) == cycle_poly(k));
        REQUIRE(char_poly(make_cycle(k, false)) == unbalanced_cycle_poly(k));
        REQUIRE_FALSE(char_poly(make_cycle(k, true)) == char_poly(make_cycle(k, false)));
    }
}
