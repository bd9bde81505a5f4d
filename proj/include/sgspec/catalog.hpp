#pragma once

#include "canonical.hpp"
#include "charpoly.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "search.hpp"
#include "sg_io.hpp"
#include "tables.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgspec {

using json = nlohmann::ordered_json;

namespace catalog_detail {

inline Rat rat_from_decimal(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) negative = text[pos++] == '-';
    std::string digits;
    long frac_digits = -1;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.') {
            if (frac_digits >= 0) throw std::invalid_argument("bad decimal '" + text + "'");
            frac_digits = 0;
        } else if (c >= '0' && c <= '9') {
            digits += c;
            if (frac_digits >= 0) ++frac_digits;
        } else {
            throw std::invalid_argument("bad decimal '" + text + "'");
        }
    }
    if (digits.empty()) throw std::invalid_argument("bad decimal '" + text + "'");
    Int num(digits, 10);  // explicit base; the default re-reads leading zeros as octal
    if (negative) num = -num;
    Int den = 1;
    for (long i = 0; i < std::max<long>(frac_digits, 0); ++i) den *= 10;
    return make_rat(num, den);
}

} // namespace catalog_detail

struct TableClaim {
    std::string row;
    std::map<std::string, long> params;
    int sign = 0;
    std::optional<Rat> approx;  // printed value the enclosure must straddle
    Rat tol = make_rat(5, 1000);
    std::optional<std::string> approx_text, tol_text;  // original spellings, kept for round-trips
};

struct CatalogClaims {
    std::optional<std::string> verdict;
    std::optional<bool> maximal;
    std::vector<TableClaim> tables;
};

struct CatalogEntry {
    std::string name;
    std::string source;  // text-constructed | figure-data | search-derived
    std::optional<std::string> family;
    std::optional<std::string> note;
    std::optional<int> n;
    std::vector<SignedEdge> edges;
    CatalogClaims claims;

    bool has_graph_data() const { return n.has_value(); }
    SignedGraph graph() const {
        if (!n) throw std::logic_error("entry '" + name + "' has no graph data");
        return SignedGraph::build(*n, edges);
    }
};

struct Catalog {
    long version = 1;
    std::vector<CatalogEntry> entries;
};

enum class VerifyStatus { Confirmed, Refuted, SkippedMissingData };

inline std::string to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Confirmed: return "confirmed";
        case VerifyStatus::Refuted: return "refuted";
        case VerifyStatus::SkippedMissingData: return "skipped-missing-data";
    }
    return "?";
}

struct VerificationResult {
    std::string claim_id;
    VerifyStatus status;
    std::string witness;
};

namespace catalog_detail {

inline const json& expect(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw std::invalid_argument("catalog schema: missing key '" + std::string(key) + "' in " +
                                    where);
    return *it;
}

inline void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok)
            throw std::invalid_argument("catalog schema: unknown key '" + it.key() + "' in " + where);
    }
}

inline TableClaim table_claim_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw std::invalid_argument("catalog schema: " + where + " must be an object");
    check_keys(j, {"row", "params", "sign", "approx", "tol"}, where);
    TableClaim c;
    c.row = expect(j, "row", where).get<std::string>();
    if (j.contains("params")) {
        const json& p = j.at("params");
        if (!p.is_object())
            throw std::invalid_argument("catalog schema: params must be an object in " + where);
        for (auto it = p.begin(); it != p.end(); ++it)
            c.params[it.key()] = it.value().get<long>();
    }
    c.sign = expect(j, "sign", where).get<int>();
    if (c.sign < -1 || c.sign > 1)
        throw std::invalid_argument("catalog schema: sign must be -1, 0 or 1 in " + where);
    if (j.contains("approx")) {
        c.approx_text = j.at("approx").get<std::string>();
        c.approx = rat_from_decimal(*c.approx_text);
    }
    if (j.contains("tol")) {
        c.tol_text = j.at("tol").get<std::string>();
        c.tol = rat_from_decimal(*c.tol_text);
    }
    return c;
}

inline json table_claim_to_json(const TableClaim& c) {
    json j = json::object();
    j["row"] = c.row;
    if (!c.params.empty()) {
        json p = json::object();
        for (const auto& [k, v] : c.params) p[k] = v;
        j["params"] = p;
    }
    j["sign"] = c.sign;
    if (c.approx) j["approx"] = c.approx_text ? *c.approx_text : decimal_digits(*c.approx, 6);
    if (c.tol_text) j["tol"] = *c.tol_text;
    return j;
}

} // namespace catalog_detail

inline Catalog catalog_from_json(const json& root) {
    using catalog_detail::check_keys;
    using catalog_detail::expect;
    if (!root.is_object()) throw std::invalid_argument("catalog schema: top level must be an object");
    check_keys(root, {"version", "entries"}, "catalog");
    Catalog cat;
    cat.version = expect(root, "version", "catalog").get<long>();
    const json& entries = expect(root, "entries", "catalog");
    if (!entries.is_array())
        throw std::invalid_argument("catalog schema: entries must be an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const json& e = entries[i];
        std::string where = "entries[" + std::to_string(i) + "]";
        if (!e.is_object()) throw std::invalid_argument("catalog schema: " + where + " must be an object");
        check_keys(e, {"name", "source", "family", "note", "n", "edges", "claims"}, where);
        CatalogEntry entry;
        entry.name = expect(e, "name", where).get<std::string>();
        where = "entry '" + entry.name + "'";
        entry.source = expect(e, "source", where).get<std::string>();
        if (entry.source != "text-constructed" && entry.source != "figure-data" &&
            entry.source != "search-derived")
            throw std::invalid_argument("catalog schema: bad source '" + entry.source + "' in " +
                                        where);
        if (e.contains("family")) entry.family = e.at("family").get<std::string>();
        if (e.contains("note")) entry.note = e.at("note").get<std::string>();
        if (e.contains("n") != e.contains("edges"))
            throw std::invalid_argument("catalog schema: n and edges must appear together in " +
                                        where);
        if (e.contains("n")) {
            entry.n = e.at("n").get<int>();
            const json& edges = e.at("edges");
            if (!edges.is_array())
                throw std::invalid_argument("catalog schema: edges must be an array in " + where);
            for (const json& ej : edges) {
                if (!ej.is_array() || ej.size() != 3)
                    throw std::invalid_argument("catalog schema: each edge must be [u,v,sign] in " +
                                                where);
                std::string s = ej[2].get<std::string>();
                if (s != "+" && s != "-")
                    throw std::invalid_argument("catalog schema: edge sign must be '+' or '-', got '" +
                                                s + "' in " + where);
                entry.edges.push_back({ej[0].get<int>(), ej[1].get<int>(), s == "+" ? 1 : -1});
            }
        }
        if (e.contains("claims")) {
            const json& c = e.at("claims");
            if (!c.is_object())
                throw std::invalid_argument("catalog schema: claims must be an object in " + where);
            check_keys(c, {"verdict", "maximal", "tables"}, where + " claims");
            if (c.contains("verdict")) entry.claims.verdict = c.at("verdict").get<std::string>();
            if (c.contains("maximal")) entry.claims.maximal = c.at("maximal").get<bool>();
            if (c.contains("tables")) {
                const json& t = c.at("tables");
                if (!t.is_array())
                    throw std::invalid_argument("catalog schema: tables must be an array in " + where);
                for (std::size_t k = 0; k < t.size(); ++k)
                    entry.claims.tables.push_back(catalog_detail::table_claim_from_json(
                        t[k], where + " tables[" + std::to_string(k) + "]"));
            }
        }
        cat.entries.push_back(std::move(entry));
    }
    std::map<std::string, int> seen;
    for (const auto& e : cat.entries)
        if (++seen[e.name] > 1)
            throw std::invalid_argument("catalog schema: duplicate entry name '" + e.name + "'");
    return cat;
}

inline json catalog_to_json(const Catalog& cat) {
    json root = json::object();
    root["version"] = cat.version;
    json entries = json::array();
    for (const auto& e : cat.entries) {
        json j = json::object();
        j["name"] = e.name;
        j["source"] = e.source;
        if (e.family) j["family"] = *e.family;
        if (e.note) j["note"] = *e.note;
        if (e.n) {
            j["n"] = *e.n;
            json edges = json::array();
            for (const auto& ed : e.edges)
                edges.push_back(json::array({ed.u, ed.v, ed.sign > 0 ? "+" : "-"}));
            j["edges"] = edges;
        }
        bool any_claims = e.claims.verdict || e.claims.maximal || !e.claims.tables.empty();
        if (any_claims) {
            json c = json::object();
            if (e.claims.verdict) c["verdict"] = *e.claims.verdict;
            if (e.claims.maximal) c["maximal"] = *e.claims.maximal;
            if (!e.claims.tables.empty()) {
                json t = json::array();
                for (const auto& tc : e.claims.tables)
                    t.push_back(catalog_detail::table_claim_to_json(tc));
                c["tables"] = t;
            }
            j["claims"] = c;
        }
        entries.push_back(std::move(j));
    }
    root["entries"] = std::move(entries);
    return root;
}

inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open catalog file '" + path + "'");
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("catalog parse error in '" + path + "': " + e.what());
    }
    return catalog_from_json(root);
}

inline std::string catalog_string(const Catalog& cat) { return catalog_to_json(cat).dump(2) + "\n"; }

inline void save_catalog(const std::string& path, const Catalog& cat) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out << catalog_string(cat);
}

// Re-checks each entry's claims from scratch. Entries without graph data
// report every claim as skipped rather than silently passing.
inline std::vector<VerificationResult> verify_all(const Catalog& cat) {
    std::vector<const CatalogEntry*> order;
    for (const auto& e : cat.entries) order.push_back(&e);
    std::sort(order.begin(), order.end(),
              [](const CatalogEntry* a, const CatalogEntry* b) { return a->name < b->name; });

    std::vector<VerificationResult> results;
    for (const CatalogEntry* pe : order) {
        const CatalogEntry& e = *pe;
        if (!e.has_graph_data()) {
            std::string why = e.note ? *e.note : "no edge data in this catalog";
            results.push_back({e.name + ":data", VerifyStatus::SkippedMissingData, why});
            if (e.claims.verdict)
                results.push_back({e.name + ":verdict", VerifyStatus::SkippedMissingData, why});
            if (e.claims.maximal)
                results.push_back({e.name + ":maximal", VerifyStatus::SkippedMissingData, why});
        } else {
            SignedGraph g = e.graph();
            if (e.family) {
                bool same = false;
                std::string witness;
                try {
                    SignedGraph rebuilt = make_family(*e.family);
                    same = rebuilt == g;
                    if (!same) witness = "realized family differs from stored edges";
                } catch (const std::exception& ex) {
                    witness = std::string("family spec failed: ") + ex.what();
                }
                results.push_back({e.name + ":family",
                                   same ? VerifyStatus::Confirmed : VerifyStatus::Refuted,
                                   same ? to_text(parse_family(*e.family)) : witness});
            }

            RhoResult rho = rho_verdict(g);
            if (e.claims.verdict) {
                bool ok = to_string(rho.verdict) == *e.claims.verdict;
                results.push_back({e.name + ":verdict",
                                   ok ? VerifyStatus::Confirmed : VerifyStatus::Refuted,
                                   "charpoly " + poly_pretty(rho.witness) + " gives " +
                                       to_string(rho.verdict)});
            }
            if (e.claims.maximal) {
                if (!verdict_at_most_lambda_star(rho.verdict)) {
                    results.push_back({e.name + ":maximal", VerifyStatus::Refuted,
                                       "spectral radius already exceeds the threshold"});
                } else {
                    auto extensions = extend_once(g, false);
                    bool maximal = extensions.empty();
                    bool ok = maximal == *e.claims.maximal;
                    std::string witness =
                        maximal ? "no admissible one-vertex extension"
                                : "extends to class " + code_hex(canonical_code(extensions.front()));
                    results.push_back({e.name + ":maximal",
                                       ok ? VerifyStatus::Confirmed : VerifyStatus::Refuted, witness});
                }
            }
        }

        // Table claims evaluate closed-form expressions at the given
        // parameters; they never need the entry's edge list.
        for (const auto& tc : e.claims.tables) {
            std::string id = e.name + ":table:" + tc.row;
            try {
                const TableRow* row = find_table_row(tc.row);
                if (!row) throw std::domain_error("unknown table row id '" + tc.row + "'");
                TableEval ev = table_expr_eval(*row, tc.params);
                bool ok = ev.sign == tc.sign;
                std::string witness = "sign " + std::to_string(ev.sign) + " enclosure [" +
                                      decimal_digits(ev.enclosure.lo, 6) + ", " +
                                      decimal_digits(ev.enclosure.hi, 6) + "]";
                if (ok && tc.approx) {
                    Rat lo = *tc.approx - tc.tol, hi = *tc.approx + tc.tol;
                    ok = ev.enclosure.lo >= lo && ev.enclosure.hi <= hi;
                    if (!ok) witness += " outside the printed value's band";
                }
                results.push_back({id, ok ? VerifyStatus::Confirmed : VerifyStatus::Refuted, witness});
            } catch (const std::exception& ex) {
                results.push_back({id, VerifyStatus::Refuted, ex.what()});
            }
        }
    }
    return results;
}

} // namespace sgspec
