#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace sgspec {

using VertexSet = std::vector<int>;  // sorted, distinct, in [0, n)

struct SignedEdge {
    int u, v;
    int sign;
};

// Simple signed graph: symmetric adjacency over {-1, 0, +1}, zero diagonal.
class SignedGraph {
public:
    explicit SignedGraph(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 1) throw std::invalid_argument("vertex count must be at least 1");
    }

    static SignedGraph build(int n, const std::vector<SignedEdge>& edges) {
        SignedGraph g(n);
        for (const auto& e : edges) {
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                            ") has an endpoint out of range");
            if (e.u == e.v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
            if (e.sign != 1 && e.sign != -1)
                throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                            ") has sign outside {-1,+1}");
            if (g.at(e.u, e.v) != 0)
                throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + ")");
            g.set(e.u, e.v, static_cast<int8_t>(e.sign));
        }
        return g;
    }

    int n() const { return n_; }
    int8_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, int8_t s) {
        a_[static_cast<std::size_t>(i) * n_ + j] = s;
        a_[static_cast<std::size_t>(j) * n_ + i] = s;
    }

    int edge_count() const {
        int m = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != 0) ++m;
        return m;
    }

    std::vector<SignedEdge> edges() const {
        std::vector<SignedEdge> es;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != 0) es.push_back({i, j, at(i, j)});
        return es;
    }

    int degree(int v) const {
        int d = 0;
        for (int j = 0; j < n_; ++j)
            if (at(v, j) != 0) ++d;
        return d;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> ds(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) ds[static_cast<std::size_t>(v)] = degree(v);
        std::sort(ds.begin(), ds.end());
        return ds;
    }

    friend bool operator==(const SignedGraph& g, const SignedGraph& h) {
        return g.n_ == h.n_ && g.a_ == h.a_;
    }

private:
    int n_;
    std::vector<int8_t> a_;
};

inline void check_vertex_set(const SignedGraph& g, const VertexSet& u) {
    int prev = -1;
    for (int v : u) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex index out of range");
        if (v <= prev) throw std::invalid_argument("vertex set not strictly increasing");
        prev = v;
    }
}

inline SignedGraph induced_subgraph(const SignedGraph& g, const VertexSet& u) {
    if (u.empty()) throw std::invalid_argument("induced subgraph of empty vertex set");
    check_vertex_set(g, u);
    SignedGraph h(static_cast<int>(u.size()));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            h.set(static_cast<int>(i), static_cast<int>(j), g.at(u[i], u[j]));
    return h;
}

inline SignedGraph switch_at(const SignedGraph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
    for (int v : s) in[static_cast<std::size_t>(v)] = 1;
    SignedGraph h = g;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.at(i, j) != 0 && (in[static_cast<std::size_t>(i)] ^ in[static_cast<std::size_t>(j)]))
                h.set(i, j, static_cast<int8_t>(-g.at(i, j)));
    return h;
}

inline int cycle_sign(const SignedGraph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    int s = 1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        int8_t e = g.at(u, v);
        if (e == 0)
            throw std::invalid_argument("consecutive cycle vertices " + std::to_string(u) + "," +
                                        std::to_string(v) + " are not adjacent");
        s *= e;
    }
    return s;
}

// Balanced iff switching-equivalent to the all-positive signature;
// decided by a spanning-forest potential assignment.
inline bool is_balanced(const SignedGraph& g) {
    std::vector<int> pot(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> stack;
    for (int root = 0; root < g.n(); ++root) {
        if (pot[static_cast<std::size_t>(root)] != 0) continue;
        pot[static_cast<std::size_t>(root)] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < g.n(); ++v) {
                int8_t e = g.at(u, v);
                if (e == 0) continue;
                int want = pot[static_cast<std::size_t>(u)] * e;
                if (pot[static_cast<std::size_t>(v)] == 0) {
                    pot[static_cast<std::size_t>(v)] = want;
                    stack.push_back(v);
                } else if (pot[static_cast<std::size_t>(v)] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_connected(const SignedGraph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < g.n(); ++v)
            if (g.at(u, v) != 0 && !seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == g.n();
}

// G with one extra vertex whose connections are given by a border row.
inline SignedGraph extend_with_row(const SignedGraph& g, const std::vector<int8_t>& row) {
    if (static_cast<int>(row.size()) != g.n()) throw std::invalid_argument("border row size mismatch");
    for (int8_t s : row)
        if (s < -1 || s > 1) throw std::invalid_argument("border row entry outside {-1,0,+1}");
    SignedGraph h(g.n() + 1);
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.at(i, j) != 0) h.set(i, j, g.at(i, j));
    for (int i = 0; i < g.n(); ++i)
        if (row[static_cast<std::size_t>(i)] != 0) h.set(i, g.n(), row[static_cast<std::size_t>(i)]);
    return h;
}

} // namespace sgspec
