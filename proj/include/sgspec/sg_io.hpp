#pragma once

#include "graph.hpp"
#include "poly.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgspec {

// sg format: a header line "n m", then m lines "u v s" with 0-based
// endpoints and s one of '+', '-'. Lines starting with '#' are comments.
inline SignedGraph read_sg(std::istream& in) {
    long line_no = 0;
    std::string line;
    auto next_line = [&](const char* expecting) -> std::string {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t first = line.find_first_not_of(" \t");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            return line;
        }
        throw std::invalid_argument("sg input ended early at line " + std::to_string(line_no) +
                                    ", expected " + expecting);
    };

    std::istringstream header(next_line("the header"));
    long n = 0, m = 0;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("sg header must be 'n m' (line " + std::to_string(line_no) + ")");
    std::string extra;
    if (header >> extra)
        throw std::invalid_argument("trailing token '" + extra + "' in sg header (line " +
                                    std::to_string(line_no) + ")");

    std::vector<SignedEdge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        std::istringstream row(next_line("an edge line"));
        long u = 0, v = 0;
        std::string s;
        if (!(row >> u >> v >> s))
            throw std::invalid_argument("sg edge line must be 'u v s' (line " +
                                        std::to_string(line_no) + ")");
        if (row >> extra)
            throw std::invalid_argument("trailing token '" + extra + "' on sg edge line " +
                                        std::to_string(line_no));
        if (s != "+" && s != "-")
            throw std::invalid_argument("sg sign must be '+' or '-', got '" + s + "' (line " +
                                        std::to_string(line_no) + ")");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), s == "+" ? 1 : -1});
    }
    try {
        return SignedGraph::build(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("invalid sg data: ") + e.what());
    }
}

inline SignedGraph read_sg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open sg file '" + path + "'");
    return read_sg(in);
}

inline void write_sg(std::ostream& out, const SignedGraph& g) {
    auto edges = g.edges();
    out << g.n() << ' ' << edges.size() << '\n';
    for (const auto& e : edges) out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
}

inline std::string sg_string(const SignedGraph& g) {
    std::ostringstream out;
    write_sg(out, g);
    return out.str();
}

inline void write_sg_file(const std::string& path, const SignedGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    write_sg(out, g);
}

inline std::string poly_pretty(const IntPoly& p) {
    if (p.degree() < 0) return "0";
    std::string out;
    for (long d = p.degree(); d >= 0; --d) {
        const Int& c = p.coeffs()[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        Int a = c;
        if (out.empty()) {
            if (a < 0) {
                out += '-';
                a = -a;
            }
        } else {
            out += a < 0 ? '-' : '+';
            if (a < 0) a = -a;
        }
        bool unit = a == 1 && d > 0;
        if (!unit) out += a.get_str();
        if (d > 0) {
            out += 'x';
            if (d > 1) out += '^' + std::to_string(d);
        }
    }
    return out;
}

inline std::string poly_coeff_list(const IntPoly& p) {
    if (p.degree() < 0) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ' ';
        out += p.coeffs()[i].get_str();
    }
    return out;
}

} // namespace sgspec
