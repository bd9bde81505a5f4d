#include <catch2/catch_amalgamated.hpp>

#include <sgspec/canonical.hpp>
#include <sgspec/charpoly.hpp>
#include <sgspec/families.hpp>
#include <sgspec/recurrences.hpp>

using namespace sgspec;

TEST_CASE("path, star and cycle layouts are deterministic") {
    SignedGraph p4 = make_path(4);
    REQUIRE(p4.n() == 4);
    REQUIRE(p4.at(0, 1) == 1);
    REQUIRE(p4.at(1, 2) == 1);
    REQUIRE(p4.at(0, 2) == 0);
    REQUIRE_THROWS_AS(make_path(0), std::invalid_argument);

    SignedGraph s = make_star14();
    REQUIRE(s.n() == 5);
    for (int leaf = 1; leaf <= 4; ++leaf) REQUIRE(s.at(0, leaf) == 1);
    REQUIRE(s.degree(0) == 4);

    SignedGraph c5 = make_cycle(5, false);
    REQUIRE(c5.edge_count() == 5);
    REQUIRE(c5.at(4, 0) == -1);  // the closing edge carries the imbalance
    REQUIRE(is_balanced(make_cycle(5, true)));
    REQUIRE_FALSE(is_balanced(c5));
    REQUIRE_THROWS_AS(make_cycle(2, true), std::invalid_argument);
}

TEST_CASE("cycles with pendants index positions from one") {
    SignedGraph g = make_cycle_with_pendants(6, false, {1, 4});
    REQUIRE(g.n() == 8);
    REQUIRE(g.at(0, 6) == 1);  // pendant for position 1 hangs at vertex 0
    REQUIRE(g.at(3, 7) == 1);
    REQUIRE(g.degree(0) == 3);
    REQUIRE_THROWS_AS(make_cycle_with_pendants(6, false, {0}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_cycle_with_pendants(6, false, {7}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_cycle_with_pendants(6, false, {2, 2}), std::invalid_argument);
}

TEST_CASE("spiders and double spiders") {
    SignedGraph t = make_T(1, 2, 3);
    REQUIRE(t.n() == 7);
    REQUIRE(t.degree(0) == 3);
    REQUIRE(is_balanced(t));
    REQUIRE_THROWS_AS(make_T(0, 1, 1), std::invalid_argument);

    SignedGraph q = make_Q(1, 2, 1);
    REQUIRE(q.n() == 7);  // path on a+b+c+1 vertices plus two pendants
    REQUIRE(q.degree(1) == 3);
    REQUIRE(q.degree(3) == 3);
    REQUIRE_THROWS_AS(make_Q(1, 0, 1), std::invalid_argument);
}

TEST_CASE("theta graphs place one negative edge on the shortest path") {
    SignedGraph g = make_theta(3, 2, 1);
    REQUIRE(g.n() == 2 + 3 + 2 + 1);
    int negatives = 0;
    for (const auto& e : g.edges()) negatives += e.sign < 0 ? 1 : 0;
    REQUIRE(negatives == 1);
    REQUIRE_FALSE(is_balanced(g));
    REQUIRE(g.degree(0) == 3);
    REQUIRE(g.degree(4) == 3);

    // r = 0 degenerates the shortest path to a direct edge
    SignedGraph h = make_theta(6, 2, 0);
    REQUIRE(h.n() == 10);
    REQUIRE(h.at(0, 7) == -1);
    REQUIRE_THROWS_AS(make_theta(2, 3, 1), std::invalid_argument);  // needs p >= q >= r
    REQUIRE_THROWS_AS(make_theta(2, 0, 0), std::invalid_argument);
}

TEST_CASE("two quadrilaterals sharing a vertex or a bridge") {
    SignedGraph b0 = make_B(4, 4, 0);
    REQUIRE(b0.n() == 7);
    REQUIRE(b0.degree(0) == 4);
    REQUIRE_FALSE(is_balanced(b0));

    // the joining path counts r vertices, endpoints on the cycles, so
    // r = 2 is a direct bridge edge and adds no new vertices
    SignedGraph b2 = make_B(4, 4, 2);
    REQUIRE(b2.n() == 8);
    REQUIRE(b2.degree(0) == 3);
    SignedGraph b4 = make_B(4, 4, 4);
    REQUIRE(b4.n() == 10);
    REQUIRE_THROWS_AS(make_B(4, 4, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(make_B(2, 4, 0), std::invalid_argument);
}

TEST_CASE("double cycle frames square to four times the identity") {
    for (long k = 3; k <= 10; ++k) {
        SignedGraph g = make_T2k(k);
        REQUIRE(g.n() == 2 * k);
        for (int v = 0; v < g.n(); ++v) REQUIRE(g.degree(v) == 4);
        // A^2 = 4I, checked entrywise
        for (int i = 0; i < g.n(); ++i)
            for (int j = 0; j < g.n(); ++j) {
                long dot = 0;
                for (int l = 0; l < g.n(); ++l) dot += g.at(i, l) * g.at(l, j);
                REQUIRE(dot == (i == j ? 4 : 0));
            }
    }
    REQUIRE_THROWS_AS(make_T2k(1), std::invalid_argument);
    // no 4-vertex candidate exists: the frame needs degree 4 on 4 vertices
    REQUIRE_THROWS_AS(make_T2k(2), std::domain_error);
}

TEST_CASE("pendant joins label bridge vertices last") {
    SignedGraph a = make_path(3), b = make_path(2);
    SignedGraph j = make_pendant_join(a, 2, b, 0, 2);
    REQUIRE(j.n() == 3 + 2 + 2);
    REQUIRE(j.at(2, 5) == 1);  // a-side attach to first bridge vertex
    REQUIRE(j.at(5, 6) == 1);
    REQUIRE(j.at(6, 3) == 1);  // last bridge vertex to b-side attach
    REQUIRE(is_connected(j));

    SignedGraph direct = make_pendant_join(a, 2, b, 0, 0);
    REQUIRE(direct.n() == 5);
    REQUIRE(direct.at(2, 3) == 1);
    REQUIRE(canonical_code(direct) == canonical_code(make_path(5)));
    REQUIRE_THROWS_AS(make_pendant_join(a, 3, b, 0, 1), std::invalid_argument);
}

TEST_CASE("family grammar round trips") {
    for (const char* text : {
             "P:7",
             "S14",
             "C:6:bal",
             "C:5:unbal",
             "Cp:8:unbal:1,5",
             "T:1,2,5",
             "Q:2,3,4",
             "Theta:6,2,0",
             "B:4,4,2",
             "T2k:4",
             "join:P:4:1:P:4:1:2",
             "join:join:C:4:unbal:0:P:2:0:0:0:P:3:2:1",
         }) {
        FamilySpec spec = parse_family(text);
        REQUIRE(to_text(spec) == text);
        SignedGraph g = realize(spec);
        REQUIRE(g == make_family(text));
    }
}

TEST_CASE("family grammar rejects malformed input") {
    REQUIRE_THROWS_AS(make_family(""), std::invalid_argument);
    REQUIRE_THROWS_AS(make_family("P"), std::invalid_argument);
    REQUIRE_THROWS_AS(make_family("P:x"), std::invalid_argument);
    REQUIRE_THROWS_AS(make_family("C:6"), std::invalid_argument);
    REQUIRE_THROWS_AS(make_family("C:6:maybe"), std::invalid_argument);
    REQUIRE_THROWS_AS(make_family("T:1,2"), std::invalid_argument);
    REQUIRE_THROWS_AS(make_family("Theta:1,2,3,4"), std::invalid_argument);
    REQUIRE_THROWS_AS(make_family("Zz:3"), std::invalid_argument);
    REQUIRE_THROWS_AS(make_family("P:4:junk"), std::invalid_argument);
    REQUIRE_THROWS_AS(make_family("join:P:4:1:P:4:1"), std::invalid_argument);
}

TEST_CASE("join chains reproduce the quadrilateral-with-paths family") {
    for (long n1 = 0; n1 <= 3; ++n1)
        for (long n3 = 0; n3 <= 3; ++n3) {
            SignedGraph direct = make_c4_paths(n1, 1, n3, 1);
            FamilySpec spec = c4_paths_spec(n1, 1, n3, 1);
            REQUIRE(realize(spec) == direct);
            REQUIRE(make_family(to_text(spec)) == direct);
            REQUIRE(direct.n() == 4 + n1 + 1 + n3 + 1);
        }
    // corner pendants at all four positions match the pendant-cycle grammar
    REQUIRE(canonical_code(make_c4_paths(1, 1, 1, 1)) ==
            canonical_code(make_family("Cp:4:unbal:1,2,3,4")));
}

TEST_CASE("theta-with-pendant spec realizes through the grammar") {
    for (long k : {7L, 9L, 12L}) {
        SignedGraph g = make_g0(k);
        REQUIRE(g.n() == k + 2);
        REQUIRE(make_family(to_text(g0_spec(k))) == g);
    }
}

TEST_CASE("realized families carry the expected polynomials") {
    REQUIRE(char_poly(make_family("P:6")) == path_poly(6));
    REQUIRE(char_poly(make_family("C:7:unbal")) == unbalanced_cycle_poly(7));
    REQUIRE(char_poly(make_family("T:2,1,2")) == t_graph_poly(2, 2));
}
