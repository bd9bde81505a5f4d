#pragma once

#include "catalog.hpp"
#include "charpoly.hpp"
#include "families.hpp"
#include "search.hpp"
#include "sg_io.hpp"
#include "tables.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace sgspec {

namespace cli_detail {

inline SignedGraph load_graph(const std::string& arg, std::istream& in) {
    if (arg == "-") return read_sg(in);
    std::ifstream f(arg);
    if (f) return read_sg(f);
    if (arg.find(':') != std::string::npos || arg == "S14") return make_family(arg);
    throw std::invalid_argument("cannot open '" + arg +
                                "' as an sg file and it does not parse as a family spec");
}

inline ParamMap parse_params(const std::vector<std::string>& kvs) {
    ParamMap params;
    for (const std::string& kv : kvs) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("parameter must be name=value, got '" + kv + "'");
        std::string name = kv.substr(0, eq);
        std::string value = kv.substr(eq + 1);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(value, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != value.size())
            throw std::invalid_argument("parameter value must be an integer, got '" + kv + "'");
        params[name] = v;
    }
    return params;
}

inline json report_to_json(const SearchReport& report, bool band_only) {
    json j = json::object();
    j["seed"] = code_hex(report.seed_code);
    j["depth"] = report.depth;
    j["zero_vector_excluded"] = report.zero_vector_excluded;
    json levels = json::array();
    for (const SearchLevel& level : report.levels) {
        json classes = json::array();
        for (const SearchClass& cls : level.classes) {
            if (band_only && !verdict_above_2(rho_verdict(cls.graph).verdict)) continue;
            json c = json::object();
            c["code"] = code_hex(cls.code);
            c["sg"] = sg_string(cls.graph);
            c["maximal"] = cls.maximal;
            classes.push_back(std::move(c));
        }
        json lv = json::object();
        lv["size"] = classes.size();
        lv["classes"] = std::move(classes);
        levels.push_back(std::move(lv));
    }
    j["levels"] = std::move(levels);
    return j;
}

} // namespace cli_detail

// In-process entry point behind the sgtool binary; args excludes the
// program name. Exit codes: 0 ok/confirmed, 1 refuted or failed check,
// 2 usage or malformed input.
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"signed graph spectral toolkit"};
    app.require_subcommand(1);

    std::string graph_arg = "-";
    std::string embed_h, embed_g, family_spec, seed_arg, catalog_path, table_row;
    long depth = 1, census_n = 0;
    int digits = 8;
    bool coeff_list = false, table_list = false;
    std::string band;
    std::size_t cap = frontier_cap();
    std::vector<std::string> param_kvs;

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalue enclosures of a signed graph");
    spectrum->add_option("graph", graph_arg, "sg file, family spec, or - for stdin");
    spectrum->add_option("--digits", digits, "decimal places of enclosure width");

    CLI::App* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial");
    charpoly_cmd->add_option("graph", graph_arg, "sg file, family spec, or - for stdin");
    charpoly_cmd->add_flag("--coeffs", coeff_list, "print the raw coefficient list instead");

    CLI::App* verdict_cmd =
        app.add_subcommand("verdict", "spectral radius against 2 and the limit value");
    verdict_cmd->add_option("graph", graph_arg, "sg file, family spec, or - for stdin");

    CLI::App* canon = app.add_subcommand("canon", "canonical switching-class code");
    canon->add_option("graph", graph_arg, "sg file, family spec, or - for stdin");

    CLI::App* embed = app.add_subcommand("embed", "test induced containment up to switching");
    embed->add_option("H", embed_h, "candidate subgraph")->required();
    embed->add_option("G", embed_g, "host graph")->required();

    CLI::App* family = app.add_subcommand("family", "realize a family spec as an sg file");
    family->add_option("spec", family_spec, "family spec text")->required();

    CLI::App* search_cmd = app.add_subcommand("search", "breadth-first one-vertex extensions");
    search_cmd->add_option("seed", seed_arg, "sg file, family spec, or - for stdin")->required();
    search_cmd->add_option("--depth", depth, "number of extension rounds")->required();
    search_cmd->add_option("--band", band, "above2 restricts the report to 2 < rho")
        ->check(CLI::IsMember({"above2"}));
    search_cmd->add_option("--cap", cap, "frontier class cap per level");

    CLI::App* maximal_cmd = app.add_subcommand("maximal", "certify no admissible extension exists");
    maximal_cmd->add_option("graph", graph_arg, "sg file, family spec, or - for stdin");

    CLI::App* classify = app.add_subcommand("classify", "census of connected classes of order n");
    classify->add_option("--n", census_n, "order")->required();

    CLI::App* table = app.add_subcommand("table", "evaluate a registered sign-table row");
    table->add_option("--row", table_row, "row id, e.g. table3:1");
    table->add_flag("--list", table_list, "list all registered rows");
    table->add_option("--param", param_kvs, "row parameter name=value");

    CLI::App* verify = app.add_subcommand("verify", "re-check every claim in a catalog file");
    verify->add_option("catalog", catalog_path, "catalog JSON path")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(spectrum)) {
            SignedGraph g = cli_detail::load_graph(graph_arg, in);
            if (digits < 1 || digits > 60) throw std::invalid_argument("digits must be in 1..60");
            Rat tol = make_rat(1, 1);
            for (int i = 0; i < digits; ++i) tol /= 10;
            for (const auto& ev : numeric_spectrum(g, tol))
                out << decimal_digits(ev.lo, digits) << ' ' << decimal_digits(ev.hi, digits) << ' '
                    << ev.multiplicity << '\n';
            return 0;
        }
        if (app.got_subcommand(charpoly_cmd)) {
            SignedGraph g = cli_detail::load_graph(graph_arg, in);
            IntPoly phi = char_poly(g);
            out << (coeff_list ? poly_coeff_list(phi) : poly_pretty(phi)) << '\n';
            return 0;
        }
        if (app.got_subcommand(verdict_cmd)) {
            SignedGraph g = cli_detail::load_graph(graph_arg, in);
            RhoResult r = rho_verdict(g);
            out << graph_arg << ' ' << to_string(r.verdict) << ' ' << poly_pretty(r.witness) << '\n';
            return 0;
        }
        if (app.got_subcommand(canon)) {
            SignedGraph g = cli_detail::load_graph(graph_arg, in);
            out << code_hex(canonical_code(g)) << '\n';
            return 0;
        }
        if (app.got_subcommand(embed)) {
            SignedGraph h = cli_detail::load_graph(embed_h, in);
            SignedGraph g = cli_detail::load_graph(embed_g, in);
            bool ok = is_induced_sub_up_to_switching(h, g);
            out << (ok ? "yes" : "no") << '\n';
            return ok ? 0 : 1;
        }
        if (app.got_subcommand(family)) {
            write_sg(out, make_family(family_spec));
            return 0;
        }
        if (app.got_subcommand(search_cmd)) {
            SignedGraph seed = cli_detail::load_graph(seed_arg, in);
            bool band_only = band == "above2";
            try {
                SearchReport report = search(seed, depth, cap);
                out << cli_detail::report_to_json(report, band_only).dump(2) << '\n';
                return 0;
            } catch (const FrontierCapExceeded& e) {
                out << cli_detail::report_to_json(e.partial_report, band_only).dump(2) << '\n';
                err << "error: " << e.what() << " (partial report above)" << '\n';
                return 1;
            }
        }
        if (app.got_subcommand(maximal_cmd)) {
            SignedGraph g = cli_detail::load_graph(graph_arg, in);
            bool ok = is_maximal(g);
            out << (ok ? "maximal" : "extendable") << '\n';
            return ok ? 0 : 1;
        }
        if (app.got_subcommand(classify)) {
            auto census = classify_all(census_n);
            for (const auto& entry : census)
                out << code_hex(entry.code) << ' ' << to_string(entry.verdict) << '\n';
            out << "total " << census.size() << '\n';
            return 0;
        }
        if (app.got_subcommand(table)) {
            if (table_list) {
                for (const TableRow& row : all_table_rows()) {
                    out << row.id;
                    for (const ParamSpec& p : row.params) {
                        out << ' ' << p.name << ">=" << p.min;
                        if (p.even) out << ",even";
                    }
                    out << " asserted " << row.asserted_sign << '\n';
                }
                return 0;
            }
            if (table_row.empty())
                throw std::invalid_argument("table needs --row <id> or --list");
            const TableRow* row = find_table_row(table_row);
            if (!row) throw std::invalid_argument("unknown table row id '" + table_row + "'");
            TableEval ev = table_expr_eval(*row, cli_detail::parse_params(param_kvs));
            out << row->id << ' ' << ev.sign << ' ' << decimal_digits(ev.enclosure.lo, 12) << ' '
                << decimal_digits(ev.enclosure.hi, 12) << '\n';
            return 0;
        }
        if (app.got_subcommand(verify)) {
            Catalog cat = load_catalog(catalog_path);
            auto results = verify_all(cat);
            bool any_refuted = false;
            for (const auto& r : results) {
                out << to_string(r.status) << ' ' << r.claim_id << ": " << r.witness << '\n';
                any_refuted = any_refuted || r.status == VerifyStatus::Refuted;
            }
            out << "entries " << cat.entries.size() << " results " << results.size() << '\n';
            return any_refuted ? 1 : 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand" << '\n';
    return 2;
}

} // namespace sgspec
