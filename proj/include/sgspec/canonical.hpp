#pragma once

#include "graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sgspec {

using CanonicalCode = std::string;

namespace detail {

// Byte encoding for a normalized entry: +1 -> 0, -1 -> 1, none -> 2.
// Edges sort before non-edges, so connected placements win early.
inline char entry_byte(int v) { return v > 0 ? 0 : (v < 0 ? 1 : 2); }

class Canonicalizer {
public:
    explicit Canonicalizer(const SignedGraph& g) : g_(g), n_(g.n()) {}

    CanonicalCode run() {
        placed_.reserve(static_cast<std::size_t>(n_));
        eps_.assign(static_cast<std::size_t>(n_), 0);
        used_.assign(static_cast<std::size_t>(n_), false);
        bytes_.clear();
        best_.clear();
        have_best_ = false;
        dfs(0);
        std::string code;
        code.push_back(static_cast<char>(n_));
        code += best_;
        return code;
    }

private:
    // Row of bytes produced by placing vertex v next, with its switching
    // sign forced so the first edge to an earlier vertex normalizes to +1.
    // This pins a spanning-forest's edges all-positive, making the row a
    // function of the switching class alone.
    std::vector<char> row_for(int v) const {
        std::vector<char> row(placed_.size());
        int eps_v = 0;
        for (std::size_t i = 0; i < placed_.size(); ++i) {
            int raw = g_.at(placed_[i], v);
            if (raw == 0) {
                row[i] = 2;
                continue;
            }
            if (eps_v == 0) eps_v = eps_[static_cast<std::size_t>(placed_[i])] * raw;
            row[i] = entry_byte(eps_[static_cast<std::size_t>(placed_[i])] * eps_v * raw);
        }
        return row;
    }

    int forced_eps(int v) const {
        for (std::size_t i = 0; i < placed_.size(); ++i) {
            int raw = g_.at(placed_[i], v);
            if (raw != 0) return eps_[static_cast<std::size_t>(placed_[i])] * raw;
        }
        return 1;  // component root
    }

    void dfs(std::size_t level) {
        if (level == static_cast<std::size_t>(n_)) {
            if (!have_best_ || bytes_ < best_) {
                best_ = bytes_;
                have_best_ = true;
            }
            return;
        }
        // minimal candidate row given the current prefix; only candidates
        // achieving it can start a minimal completion
        std::vector<int> cands;
        std::vector<char> best_row;
        for (int v = 0; v < n_; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            std::vector<char> row = row_for(v);
            if (cands.empty() || row < best_row) {
                best_row = std::move(row);
                cands.assign(1, v);
            } else if (row == best_row) {
                cands.push_back(v);
            }
        }
        std::size_t saved = bytes_.size();
        bytes_.append(best_row.begin(), best_row.end());
        // prune any branch whose prefix already exceeds the incumbent
        if (have_best_ &&
            bytes_.compare(0, bytes_.size(), best_, 0, bytes_.size()) > 0) {
            bytes_.resize(saved);
            return;
        }
        for (int v : cands) {
            int e = forced_eps(v);
            used_[static_cast<std::size_t>(v)] = true;
            eps_[static_cast<std::size_t>(v)] = e;
            placed_.push_back(v);
            dfs(level + 1);
            placed_.pop_back();
            eps_[static_cast<std::size_t>(v)] = 0;
            used_[static_cast<std::size_t>(v)] = false;
        }
        bytes_.resize(saved);
    }

    const SignedGraph& g_;
    int n_;
    std::vector<int> placed_;
    std::vector<int> eps_;
    std::vector<bool> used_;
    std::string bytes_;
    std::string best_;
    bool have_best_;
};

} // namespace detail

inline CanonicalCode canonical_code(const SignedGraph& g, int limit = 14) {
    if (g.n() > limit)
        throw std::invalid_argument("canonicalization limit exceeded: n=" + std::to_string(g.n()) +
                                    " > " + std::to_string(limit));
    return detail::Canonicalizer(g).run();
}

inline std::string code_hex(const CanonicalCode& code) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(code.size() * 2);
    for (unsigned char c : code) {
        s.push_back(digits[c >> 4]);
        s.push_back(digits[c & 0xF]);
    }
    return s;
}

// True iff some vertex subset U of G induces a subgraph switching
// isomorphic to H. Backtracking over assignments in a connected order of
// H, with switching signs forced along a spanning forest.
inline bool is_induced_sub_up_to_switching(const SignedGraph& h, const SignedGraph& g) {
    if (h.n() > g.n()) return false;
    int hn = h.n(), gn = g.n();

    // order H's vertices so non-roots always have an earlier neighbor
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(hn), 0);
    for (int root = 0; root < hn; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = 1;
        order.push_back(root);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            int u = order[head];
            for (int v = 0; v < hn; ++v)
                if (h.at(u, v) != 0 && !seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    order.push_back(v);
                }
        }
    }

    std::vector<int> map(static_cast<std::size_t>(hn), -1);
    std::vector<int> eps(static_cast<std::size_t>(hn), 0);
    std::vector<char> taken(static_cast<std::size_t>(gn), 0);

    std::vector<int> hdeg(static_cast<std::size_t>(hn)), gdeg(static_cast<std::size_t>(gn));
    for (int v = 0; v < hn; ++v) hdeg[static_cast<std::size_t>(v)] = h.degree(v);
    for (int v = 0; v < gn; ++v) gdeg[static_cast<std::size_t>(v)] = g.degree(v);

    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == order.size()) return true;
        int v = order[idx];
        for (int cand = 0; cand < gn; ++cand) {
            if (taken[static_cast<std::size_t>(cand)]) continue;
            if (gdeg[static_cast<std::size_t>(cand)] < hdeg[static_cast<std::size_t>(v)]) continue;
            int eps_v = 0;
            bool ok = true;
            for (std::size_t k = 0; k < idx && ok; ++k) {
                int w = order[k];
                int hw = h.at(w, v);
                int gw = g.at(map[static_cast<std::size_t>(w)], cand);
                if (hw == 0) {
                    if (gw != 0) ok = false;
                    continue;
                }
                if (gw == 0) {
                    ok = false;
                    continue;
                }
                int need = eps[static_cast<std::size_t>(w)] * hw * gw;  // candidate eps_v
                if (eps_v == 0)
                    eps_v = need;
                else if (eps_v != need)
                    ok = false;
            }
            if (!ok) continue;
            if (eps_v == 0) eps_v = 1;  // component root
            map[static_cast<std::size_t>(v)] = cand;
            eps[static_cast<std::size_t>(v)] = eps_v;
            taken[static_cast<std::size_t>(cand)] = 1;
            if (self(self, idx + 1)) return true;
            taken[static_cast<std::size_t>(cand)] = 0;
            map[static_cast<std::size_t>(v)] = -1;
            eps[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace sgspec
