#pragma once

#include "canonical.hpp"
#include "charpoly.hpp"
#include "graph.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgspec {

inline bool has_triangle(const SignedGraph& g) {
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) {
            if (g.at(i, j) == 0) continue;
            for (int k = j + 1; k < g.n(); ++k)
                if (g.at(i, k) != 0 && g.at(j, k) != 0) return true;
        }
    return false;
}

// All one-vertex extensions of g that keep max degree <= 4 and spectral
// radius <= lambda*, one representative per switching-isomorphism class,
// sorted by canonical code. The new vertex gets between one and four
// signed neighbors; with require_above_2 only extensions with rho
// strictly above 2 are kept.
inline std::vector<SignedGraph> extend_once(const SignedGraph& g, bool require_above_2 = false) {
    if (g.max_degree() > 4)
        throw std::invalid_argument("extension requires max degree <= 4");
    std::vector<int> candidates;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) <= 3) candidates.push_back(v);

    std::map<CanonicalCode, SignedGraph> classes;
    std::vector<int> support;
    std::vector<int8_t> signs;
    auto consider = [&]() {
        std::vector<int8_t> row(static_cast<std::size_t>(g.n()), 0);
        for (std::size_t i = 0; i < support.size(); ++i)
            row[static_cast<std::size_t>(support[i])] = signs[i];
        SignedGraph h = extend_with_row(g, row);
        RhoVerdict v = rho_verdict(h).verdict;
        if (!verdict_at_most_lambda_star(v)) return;
        if (require_above_2 && !verdict_above_2(v)) return;
        classes.emplace(canonical_code(h), std::move(h));
    };
    auto assign_signs = [&](auto&& self, std::size_t i) -> void {
        if (i == support.size()) {
            consider();
            return;
        }
        for (int8_t s : {int8_t(1), int8_t(-1)}) {
            signs.push_back(s);
            self(self, i + 1);
            signs.pop_back();
        }
    };
    auto choose = [&](auto&& self, std::size_t from) -> void {
        if (!support.empty()) assign_signs(assign_signs, 0);
        if (support.size() == 4) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            support.push_back(candidates[i]);
            self(self, i + 1);
            support.pop_back();
        }
    };
    choose(choose, 0);

    std::vector<SignedGraph> out;
    out.reserve(classes.size());
    for (auto& [code, h] : classes) out.push_back(std::move(h));
    return out;
}

inline bool is_maximal(const SignedGraph& g) {
    if (!verdict_at_most_lambda_star(rho_verdict(g).verdict))
        throw std::domain_error("maximality is defined only below the lambda* threshold");
    return extend_once(g, false).empty();
}

struct SearchClass {
    CanonicalCode code;
    SignedGraph graph;
    bool maximal = false;
};

struct SearchLevel {
    std::vector<SearchClass> classes;
};

struct SearchReport {
    CanonicalCode seed_code;
    long depth = 0;
    bool zero_vector_excluded = true;  // extensions always add a connected vertex
    std::vector<SearchLevel> levels;   // levels[0] holds the seed itself
};

class FrontierCapExceeded : public std::runtime_error {
public:
    FrontierCapExceeded(long level_, std::size_t cap_, SearchReport partial)
        : std::runtime_error("frontier at depth " + std::to_string(level_) +
                             " exceeded the cap of " + std::to_string(cap_) + " classes"),
          level(level_), cap(cap_), partial_report(std::move(partial)) {}
    long level;
    std::size_t cap;
    SearchReport partial_report;
};

inline std::size_t frontier_cap() {
    if (const char* env = std::getenv("SG_FRONTIER_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

// Breadth-first iteration of extend_once to depth k with per-level dedup
// by canonical code. Frontiers are built without the above-2 filter so
// that intermediate subgraphs with small spectral radius are not lost.
inline SearchReport search(const SignedGraph& seed, long k, std::size_t cap = frontier_cap()) {
    if (k < 1) throw std::invalid_argument("search depth must be >= 1");
    if (!verdict_at_most_lambda_star(rho_verdict(seed).verdict))
        throw std::domain_error("search seed must have spectral radius <= lambda*");

    SearchReport report;
    report.seed_code = canonical_code(seed);
    report.depth = k;
    report.levels.push_back({{{report.seed_code, seed, false}}});

    for (long level = 1; level <= k; ++level) {
        std::map<CanonicalCode, SignedGraph> next;
        auto& previous = report.levels.back().classes;
        for (auto& cls : previous) {
            std::vector<SignedGraph> children = extend_once(cls.graph, false);
            cls.maximal = children.empty();
            for (auto& h : children) {
                next.emplace(canonical_code(h), std::move(h));
                if (next.size() > cap) throw FrontierCapExceeded(level, cap, report);
            }
        }
        SearchLevel lv;
        lv.classes.reserve(next.size());
        for (auto& [code, h] : next) lv.classes.push_back({code, std::move(h), false});
        report.levels.push_back(std::move(lv));
    }
    for (auto& cls : report.levels.back().classes) cls.maximal = extend_once(cls.graph).empty();
    return report;
}

struct CensusEntry {
    CanonicalCode code;
    SignedGraph graph;
    RhoVerdict verdict;
};

// Every switching-isomorphism class of connected signed graphs on n
// vertices with max degree <= 4, found by repeated one-vertex extension
// from a single vertex with no spectral pruning.
inline std::vector<CensusEntry> classify_all(long n) {
    if (n < 1) throw std::invalid_argument("census order must be >= 1");
    if (n > 8) throw std::invalid_argument("census is gated at n <= 8");

    std::map<CanonicalCode, SignedGraph> frontier;
    SignedGraph k1 = SignedGraph::build(1, {});
    frontier.emplace(canonical_code(k1), k1);
    for (long level = 2; level <= n; ++level) {
        std::map<CanonicalCode, SignedGraph> next;
        for (const auto& [code, g] : frontier) {
            std::vector<int> candidates;
            for (int v = 0; v < g.n(); ++v)
                if (g.degree(v) <= 3) candidates.push_back(v);
            std::vector<int> support;
            std::vector<int8_t> signs;
            auto consider = [&]() {
                std::vector<int8_t> row(static_cast<std::size_t>(g.n()), 0);
                for (std::size_t i = 0; i < support.size(); ++i)
                    row[static_cast<std::size_t>(support[i])] = signs[i];
                SignedGraph h = extend_with_row(g, row);
                next.emplace(canonical_code(h), std::move(h));
            };
            auto assign_signs = [&](auto&& self, std::size_t i) -> void {
                if (i == support.size()) {
                    consider();
                    return;
                }
                for (int8_t s : {int8_t(1), int8_t(-1)}) {
                    signs.push_back(s);
                    self(self, i + 1);
                    signs.pop_back();
                }
            };
            auto choose = [&](auto&& self, std::size_t from) -> void {
                if (!support.empty()) assign_signs(assign_signs, 0);
                if (support.size() == 4) return;
                for (std::size_t i = from; i < candidates.size(); ++i) {
                    support.push_back(candidates[i]);
                    self(self, i + 1);
                    support.pop_back();
                }
            };
            choose(choose, 0);
        }
        frontier = std::move(next);
    }

    std::vector<CensusEntry> out;
    out.reserve(frontier.size());
    for (auto& [code, g] : frontier) {
        RhoVerdict v = rho_verdict(g).verdict;
        out.push_back({code, std::move(g), v});
    }
    return out;
}

} // namespace sgspec
