#pragma once

#include "graph.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgspec {

inline SignedGraph make_path(long n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<SignedEdge> edges;
    for (long i = 0; i + 1 < n; ++i) edges.push_back({static_cast<int>(i), static_cast<int>(i + 1), 1});
    return SignedGraph::build(static_cast<int>(n), edges);
}

inline SignedGraph make_star14() {
    std::vector<SignedEdge> edges;
    for (int i = 1; i <= 4; ++i) edges.push_back({0, i, 1});
    return SignedGraph::build(5, edges);
}

inline SignedGraph make_cycle(long k, bool balanced) {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    std::vector<SignedEdge> edges;
    for (long i = 0; i + 1 < k; ++i) edges.push_back({static_cast<int>(i), static_cast<int>(i + 1), 1});
    edges.push_back({static_cast<int>(k - 1), 0, balanced ? 1 : -1});
    return SignedGraph::build(static_cast<int>(k), edges);
}

// Cycle with one pendant vertex per listed position; 1-based position i
// hangs its pendant off cycle vertex i-1, pendants numbered in ascending
// position order.
inline SignedGraph make_cycle_with_pendants(long k, bool balanced, std::vector<long> positions) {
    if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
    std::sort(positions.begin(), positions.end());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 1 || positions[i] > k)
            throw std::invalid_argument("pendant position out of range");
        if (i > 0 && positions[i] == positions[i - 1])
            throw std::invalid_argument("pendant positions must be distinct");
    }
    std::vector<SignedEdge> edges;
    for (long i = 0; i + 1 < k; ++i) edges.push_back({static_cast<int>(i), static_cast<int>(i + 1), 1});
    edges.push_back({static_cast<int>(k - 1), 0, balanced ? 1 : -1});
    long next = k;
    for (long pos : positions)
        edges.push_back({static_cast<int>(pos - 1), static_cast<int>(next++), 1});
    return SignedGraph::build(static_cast<int>(next), edges);
}

// Spider: three all-positive paths with a, b, c edges from a common center.
inline SignedGraph make_T(long a, long b, long c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("spider needs a, b, c >= 1");
    std::vector<SignedEdge> edges;
    long base = 1;
    for (long len : {a, b, c}) {
        edges.push_back({0, static_cast<int>(base), 1});
        for (long i = 0; i + 1 < len; ++i)
            edges.push_back({static_cast<int>(base + i), static_cast<int>(base + i + 1), 1});
        base += len;
    }
    return SignedGraph::build(static_cast<int>(a + b + c + 1), edges);
}

// Path of a+b+c edges with pendant vertices at distances a and a+b.
inline SignedGraph make_Q(long a, long b, long c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("this family needs a, b, c >= 1");
    long len = a + b + c;
    std::vector<SignedEdge> edges;
    for (long i = 0; i < len; ++i) edges.push_back({static_cast<int>(i), static_cast<int>(i + 1), 1});
    edges.push_back({static_cast<int>(a), static_cast<int>(len + 1), 1});
    edges.push_back({static_cast<int>(a + b), static_cast<int>(len + 2), 1});
    return SignedGraph::build(static_cast<int>(len + 3), edges);
}

enum class ThetaPattern { NegativeOnShortest };

// Two branch vertices linked by three internally disjoint paths with p, q,
// r internal vertices (p >= q >= r >= 0, q >= 1); one negative edge on the
// r-path makes the two cycles through it unbalanced.
inline SignedGraph make_theta(long p, long q, long r,
                              ThetaPattern = ThetaPattern::NegativeOnShortest) {
    if (!(p >= q && q >= r && r >= 0)) throw std::invalid_argument("theta needs p >= q >= r >= 0");
    if (q < 1) throw std::invalid_argument("only one branch path may have zero internal vertices");
    int x = 0, y = static_cast<int>(p + 1);
    std::vector<SignedEdge> edges;
    auto chain = [&edges](int from, long first, long count, int to, int last_sign) {
        if (count == 0) {
            edges.push_back({from, to, last_sign});
            return;
        }
        edges.push_back({from, static_cast<int>(first), 1});
        for (long i = 0; i + 1 < count; ++i)
            edges.push_back({static_cast<int>(first + i), static_cast<int>(first + i + 1), 1});
        edges.push_back({static_cast<int>(first + count - 1), to, last_sign});
    };
    chain(x, 1, p, y, 1);
    chain(x, p + 2, q, y, 1);
    chain(x, p + q + 2, r, y, -1);
    return SignedGraph::build(static_cast<int>(p + q + r + 2), edges);
}

// Two unbalanced cycles of lengths a and b sharing one vertex (r = 0) or
// joined by a path on r vertices counting both endpoints (r >= 2).
inline SignedGraph make_B(long a, long b, long r) {
    if (a < 3 || b < 3) throw std::invalid_argument("both cycle lengths must be >= 3");
    if (r == 1 || r < 0) throw std::invalid_argument("the joining path needs r = 0 or r >= 2");
    std::vector<SignedEdge> edges;
    for (long i = 0; i + 1 < a; ++i) edges.push_back({static_cast<int>(i), static_cast<int>(i + 1), 1});
    edges.push_back({0, static_cast<int>(a - 1), -1});
    if (r == 0) {
        long first = a;  // cycle through the shared vertex 0
        edges.push_back({0, static_cast<int>(first), 1});
        for (long i = 0; i + 2 < b; ++i)
            edges.push_back({static_cast<int>(first + i), static_cast<int>(first + i + 1), 1});
        edges.push_back({static_cast<int>(first + b - 2), 0, -1});
        return SignedGraph::build(static_cast<int>(a + b - 1), edges);
    }
    long anchor = 0;
    for (long i = 0; i + 2 < r; ++i) {
        edges.push_back({static_cast<int>(anchor), static_cast<int>(a + i), 1});
        anchor = a + i;
    }
    long start = a + r - 2;  // first vertex of the second cycle
    edges.push_back({static_cast<int>(anchor), static_cast<int>(start), 1});
    for (long i = 0; i + 1 < b; ++i)
        edges.push_back({static_cast<int>(start + i), static_cast<int>(start + i + 1), 1});
    edges.push_back({static_cast<int>(start + b - 1), static_cast<int>(start), -1});
    return SignedGraph::build(static_cast<int>(a + b + r - 2), edges);
}

// Double cycle on 2k vertices with signed rungs chosen so that A^2 = 4I:
// positive k-cycle v_0..v_{k-1}, negative k-cycle u_0..u_{k-1}, positive
// rungs v_i - u_i, negative skew rungs v_i - u_{i+2 mod k}.
inline SignedGraph make_T2k(long k) {
    if (k < 2) throw std::invalid_argument("the double-cycle tower needs k >= 2");
    if (k == 2)
        throw std::domain_error(
            "no signed graph on 4 vertices satisfies A^2 = 4I: the diagonal of A^2 forces "
            "every vertex degree to be 4, which exceeds the 3 possible neighbors");
    std::vector<SignedEdge> edges;
    int n = static_cast<int>(2 * k);
    for (long i = 0; i < k; ++i) {
        long j = (i + 1) % k;
        edges.push_back({static_cast<int>(i), static_cast<int>(j), 1});
        edges.push_back({static_cast<int>(k + i), static_cast<int>(k + j), -1});
        edges.push_back({static_cast<int>(i), static_cast<int>(k + i), 1});
        edges.push_back({static_cast<int>(i), static_cast<int>(k + (i + 2) % k), -1});
    }
    return SignedGraph::build(n, edges);
}

// Disjoint copies of G and H linked by a path of s new vertices from v in
// G to u in H; s = 0 joins them by a single edge. All new edges positive.
inline SignedGraph make_pendant_join(const SignedGraph& g, long v, const SignedGraph& h, long u,
                                     long s) {
    if (v < 0 || v >= g.n() || u < 0 || u >= h.n())
        throw std::invalid_argument("join vertex out of range");
    if (s < 0) throw std::invalid_argument("bridge length must be >= 0");
    int ng = g.n(), nh = h.n();
    std::vector<SignedEdge> edges = g.edges();
    for (const auto& e : h.edges()) edges.push_back({e.u + ng, e.v + ng, e.sign});
    int prev = static_cast<int>(v);
    for (long i = 0; i < s; ++i) {
        int b = ng + nh + static_cast<int>(i);
        edges.push_back({prev, b, 1});
        prev = b;
    }
    edges.push_back({prev, ng + static_cast<int>(u), 1});
    return SignedGraph::build(ng + nh + static_cast<int>(s), edges);
}

// Parsed form of the CLI family syntax; Join nodes nest full sub-specs.
struct FamilySpec {
    enum class Kind { Path, Star14, Cycle, CycleWithPendants, T, Q, Theta, B, T2k, Join };
    Kind kind{};
    std::vector<long> args;
    bool balanced = false;
    std::shared_ptr<FamilySpec> left, right;
    long attach_left = 0, attach_right = 0, bridge = 0;
};

inline SignedGraph realize(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::Path: return make_path(spec.args[0]);
        case K::Star14: return make_star14();
        case K::Cycle: return make_cycle(spec.args[0], spec.balanced);
        case K::CycleWithPendants: {
            std::vector<long> pos(spec.args.begin() + 1, spec.args.end());
            return make_cycle_with_pendants(spec.args[0], spec.balanced, pos);
        }
        case K::T: return make_T(spec.args[0], spec.args[1], spec.args[2]);
        case K::Q: return make_Q(spec.args[0], spec.args[1], spec.args[2]);
        case K::Theta: return make_theta(spec.args[0], spec.args[1], spec.args[2]);
        case K::B: return make_B(spec.args[0], spec.args[1], spec.args[2]);
        case K::T2k: return make_T2k(spec.args[0]);
        case K::Join:
            return make_pendant_join(realize(*spec.left), spec.attach_left, realize(*spec.right),
                                     spec.attach_right, spec.bridge);
    }
    throw std::logic_error("unreachable");
}

namespace family_detail {

inline long parse_long(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("expected a number for ") + what + ", got '" + tok +
                                    "'");
    }
}

inline std::vector<long> parse_list(const std::string& tok, const char* what, std::size_t arity) {
    std::vector<long> out;
    std::stringstream ss(tok);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_long(part, what));
    if (arity != 0 && out.size() != arity)
        throw std::invalid_argument(std::string(what) + " needs " + std::to_string(arity) +
                                    " comma-separated numbers, got '" + tok + "'");
    if (out.empty()) throw std::invalid_argument(std::string(what) + " needs at least one number");
    return out;
}

inline std::string next_token(const std::vector<std::string>& toks, std::size_t& pos,
                              const char* what) {
    if (pos >= toks.size())
        throw std::invalid_argument(std::string("family spec ended while expecting ") + what);
    return toks[pos++];
}

inline FamilySpec parse_spec(const std::vector<std::string>& toks, std::size_t& pos) {
    using K = FamilySpec::Kind;
    FamilySpec s;
    std::string tag = next_token(toks, pos, "a family tag");
    if (tag == "P") {
        s.kind = K::Path;
        s.args = {parse_long(next_token(toks, pos, "path order"), "path order")};
    } else if (tag == "S14") {
        s.kind = K::Star14;
    } else if (tag == "C") {
        s.kind = K::Cycle;
        s.args = {parse_long(next_token(toks, pos, "cycle length"), "cycle length")};
        std::string bal = next_token(toks, pos, "bal|unbal");
        if (bal != "bal" && bal != "unbal") throw std::invalid_argument("expected bal or unbal");
        s.balanced = bal == "bal";
    } else if (tag == "Cp") {
        s.kind = K::CycleWithPendants;
        s.args = {parse_long(next_token(toks, pos, "cycle length"), "cycle length")};
        std::string bal = next_token(toks, pos, "bal|unbal");
        if (bal != "bal" && bal != "unbal") throw std::invalid_argument("expected bal or unbal");
        s.balanced = bal == "bal";
        for (long p : parse_list(next_token(toks, pos, "pendant positions"), "pendant positions", 0))
            s.args.push_back(p);
    } else if (tag == "T" || tag == "Q" || tag == "Theta" || tag == "B") {
        s.kind = tag == "T" ? K::T : tag == "Q" ? K::Q : tag == "Theta" ? K::Theta : K::B;
        s.args = parse_list(next_token(toks, pos, tag.c_str()), tag.c_str(), 3);
    } else if (tag == "T2k") {
        s.kind = K::T2k;
        s.args = {parse_long(next_token(toks, pos, "tower parameter"), "tower parameter")};
    } else if (tag == "join") {
        s.kind = K::Join;
        s.left = std::make_shared<FamilySpec>(parse_spec(toks, pos));
        s.attach_left = parse_long(next_token(toks, pos, "left attach vertex"), "attach vertex");
        s.right = std::make_shared<FamilySpec>(parse_spec(toks, pos));
        s.attach_right = parse_long(next_token(toks, pos, "right attach vertex"), "attach vertex");
        s.bridge = parse_long(next_token(toks, pos, "bridge length"), "bridge length");
    } else {
        throw std::invalid_argument("unknown family tag '" + tag + "'");
    }
    return s;
}

} // namespace family_detail

inline FamilySpec parse_family(const std::string& text) {
    std::vector<std::string> toks;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ':')) toks.push_back(part);
    std::size_t pos = 0;
    FamilySpec s = family_detail::parse_spec(toks, pos);
    if (pos != toks.size()) throw std::invalid_argument("trailing tokens in family spec '" + text + "'");
    return s;
}

inline std::string to_text(const FamilySpec& s) {
    using K = FamilySpec::Kind;
    auto list = [](const std::vector<long>& v, std::size_t from = 0) {
        std::string out;
        for (std::size_t i = from; i < v.size(); ++i) {
            if (i > from) out += ',';
            out += std::to_string(v[i]);
        }
        return out;
    };
    switch (s.kind) {
        case K::Path: return "P:" + std::to_string(s.args[0]);
        case K::Star14: return "S14";
        case K::Cycle:
            return "C:" + std::to_string(s.args[0]) + (s.balanced ? ":bal" : ":unbal");
        case K::CycleWithPendants:
            return "Cp:" + std::to_string(s.args[0]) + (s.balanced ? ":bal:" : ":unbal:") +
                   list(s.args, 1);
        case K::T: return "T:" + list(s.args);
        case K::Q: return "Q:" + list(s.args);
        case K::Theta: return "Theta:" + list(s.args);
        case K::B: return "B:" + list(s.args);
        case K::T2k: return "T2k:" + std::to_string(s.args[0]);
        case K::Join:
            return "join:" + to_text(*s.left) + ":" + std::to_string(s.attach_left) + ":" +
                   to_text(*s.right) + ":" + std::to_string(s.attach_right) + ":" +
                   std::to_string(s.bridge);
    }
    throw std::logic_error("unreachable");
}

inline SignedGraph make_family(const std::string& text) { return realize(parse_family(text)); }

// Convenience builders used by tests and the starter catalog; each is the
// join-chain the family syntax would spell out.

// Unbalanced quadrilateral with hanging paths of n1..n4 vertices at the
// four corners in order.
inline FamilySpec c4_paths_spec(long n1, long n2, long n3, long n4) {
    FamilySpec acc;
    acc.kind = FamilySpec::Kind::Cycle;
    acc.args = {4};
    acc.balanced = false;
    long corner = 0;
    for (long len : {n1, n2, n3, n4}) {
        if (len < 0) throw std::invalid_argument("hanging path lengths must be >= 0");
        if (len == 0) {
            ++corner;
            continue;
        }
        FamilySpec join;
        join.kind = FamilySpec::Kind::Join;
        join.left = std::make_shared<FamilySpec>(std::move(acc));
        join.attach_left = corner++;
        join.right = std::make_shared<FamilySpec>();
        join.right->kind = FamilySpec::Kind::Path;
        join.right->args = {len};
        join.attach_right = 0;
        join.bridge = 0;
        acc = std::move(join);
    }
    return acc;
}

inline SignedGraph make_c4_paths(long n1, long n2, long n3, long n4) {
    return realize(c4_paths_spec(n1, n2, n3, n4));
}

// Unbalanced theta with one internal vertex on two branch paths and k-3 on
// the third, plus one pendant hung off the short branch's internal vertex.
inline FamilySpec g0_spec(long k) {
    if (k < 7) throw std::invalid_argument("this family needs k >= 7");
    FamilySpec theta;
    theta.kind = FamilySpec::Kind::Theta;
    theta.args = {k - 3, 1, 1};
    FamilySpec join;
    join.kind = FamilySpec::Kind::Join;
    join.left = std::make_shared<FamilySpec>(std::move(theta));
    join.attach_left = k;  // the internal vertex of the negative-edge path
    join.right = std::make_shared<FamilySpec>();
    join.right->kind = FamilySpec::Kind::Path;
    join.right->args = {1};
    join.attach_right = 0;
    join.bridge = 0;
    return join;
}

inline SignedGraph make_g0(long k) { return realize(g0_spec(k)); }

} // namespace sgspec
