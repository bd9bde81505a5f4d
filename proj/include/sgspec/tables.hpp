#pragma once

#include "expr.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgspec {

using ParamMap = std::map<std::string, long>;

struct ParamSpec {
    std::string name;
    long min;
    bool even = false;
};

// One evaluable closed-form row: phi(lambda*) for a named family, the
// parameters it takes, and the sign the source table prints for it
// (0 when the table prints no inequality).
struct TableRow {
    std::string id;
    std::vector<ParamSpec> params;
    int asserted_sign;
    std::function<Expr(const ParamMap&)> build;
};

struct TableEval {
    int sign;
    RatInterval enclosure;
};

namespace table_detail {

inline Expr K(long v) { return Expr::integer(v); }
inline Expr S5() { return sqrt(K(5)); }
inline Expr SP1() { return S5() + K(1); }  // sqrt5 + 1

// base^(twice_e/2) with half-integer exponents spelled as pow * sqrt
inline Expr half_pow(const Expr& base, long twice_e) {
    if (twice_e % 2 == 0) return pow(base, twice_e / 2);
    return pow(base, (twice_e - 1) / 2) * sqrt(base);
}

inline Expr a_const(int i) {
    Expr s5 = S5();
    switch (i) {
        case 1: return K(2) * sqrt(s5 - K(1));
        case 2: return sqrt(s5 - K(2));
        case 3: return sqrt(s5 - K(1));
        case 4: return sqrt(K(17) * s5 + K(22));
        case 5: return sqrt(K(73) * s5 + K(151));
        case 6: return sqrt(K(17) * s5 - K(22));
        case 7: return sqrt(K(5) * s5 - K(11));
        case 8: return sqrt(K(73) * s5 - K(151));
        case 9: return sqrt(K(5) * s5 - K(11));
        case 10: return sqrt(K(185) * s5 - K(409));
        case 11: return K(2) / sqrt(K(13) * s5 + K(29));
        case 12: return K(31) / sqrt(K(337) * s5 + K(751));
    }
    throw std::logic_error("no such named constant");
}

inline std::vector<TableRow> make_rows() {
    std::vector<TableRow> rows;
    auto add = [&rows](std::string id, std::vector<ParamSpec> ps, int sign,
                       std::function<Expr(const ParamMap&)> f) {
        rows.push_back({std::move(id), std::move(ps), sign, std::move(f)});
    };

    // ---- cycles, trees, and bridge joins known in closed form ----
    add("table1:ck_pendants", {{"k", 4, true}}, +1, [](const ParamMap& p) {
        long k = p.at("k");
        return (S5() + K(3)) * half_pow(K(2), k) * half_pow(SP1(), 2 - k);
    });
    add("table1:c4_paths", {{"n1", 1}, {"n3", 1}}, +1, [](const ParamMap& p) {
        long n1 = p.at("n1"), n3 = p.at("n3");
        return half_pow(K(2), n1 + n3 + 2) * half_pow(SP1(), -n1 - n3 + 2);
    });
    add("table1:u6", {{"n1", 1}, {"n2", 1}}, +1, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        return half_pow(K(2), n1 + n2 + 2) * half_pow(SP1(), -n1 - n2 + 2);
    });
    add("table1:g0k", {{"k", 12, true}}, +1, [](const ParamMap& p) {
        long k = p.at("k");
        return K(2) * (K(1) - pow(K(2) / SP1(), k / 2));
    });
    add("table1:s1n", {{"n", 8}}, +1, [](const ParamMap& p) {
        long n = p.at("n");
        return sqrt(K(5) * S5() + K(11)) * half_pow(K(2), n + 4) * half_pow(SP1(), -n - 1);
    });
    add("table1:s2n", {{"n", 10}}, +1, [](const ParamMap& p) {
        long n = p.at("n");
        return half_pow(K(2), n + 4) * half_pow(SP1(), -n);
    });
    add("table1:g4_qprime", {{"n1", 1}}, +1, [](const ParamMap& p) {
        long n1 = p.at("n1");
        Expr num = (K(3194) * S5() - K(7142)) * pow(SP1(), n1) +
                   (K(1292) * S5() - K(2889)) * pow(K(2), n1 + 3);
        return num / (pow(SP1(), n1 + 1) * half_pow(S5() - K(2), 5));
    });
    add("table1:g2_qprime", {{"n1", 1}}, +1, [](const ParamMap& p) {
        long n1 = p.at("n1");
        Expr num = (K(9) - K(4) * S5()) * pow(SP1(), n1) + (K(29) - K(13) * S5()) * pow(K(2), n1);
        return K(4) * num / pow(SP1(), n1 + 1);
    });
    add("table1:g5_qprime", {{"n1", 1}}, +1, [](const ParamMap& p) {
        long n1 = p.at("n1");
        Expr num = K(2) * pow(SP1(), n1 + 1) - pow(K(2), n1 + 3);
        return num / (sqrt(K(305) * S5() + K(682)) * pow(SP1(), n1 + 1));
    });
    add("table1:qprime_qprime", {{"n1", 1}, {"n2", 1}}, +1, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        Expr num = half_pow(SP1(), 2 * (n1 + n2) + 1) -
                   a_const(1) * (pow(SP1(), n1) * pow(K(2), n2) + pow(K(2), n1) * pow(SP1(), n2)) +
                   a_const(2) * half_pow(K(2), 2 * (n1 + n2) + 5);
        return K(8) * num / half_pow(SP1(), 2 * (n1 + n2) + 7);
    });
    add("table1:t_qprime", {{"a", 3}, {"n1", 1}}, +1, [](const ParamMap& p) {
        long a = p.at("a"), n1 = p.at("n1");
        return pow(K(2), a + 2) * (pow(SP1(), n1) - (S5() - K(1)) * pow(K(2), n1)) *
               pow(SP1(), -a - n1 - 1);
    });
    add("table1:p4_qprime", {{"n1", 1}}, +1, [](const ParamMap& p) {
        long n1 = p.at("n1");
        Expr num = K(2) * (K(3) - S5()) * pow(SP1(), n1) - (S5() - K(2)) * pow(K(2), n1 + 3);
        return num / pow(SP1(), n1 + 1);
    });
    add("table1:g4_t", {{"a", 3}}, +1, [](const ParamMap& p) {
        return Expr::constant(make_rat(669, 10000)) * pow(K(2) / SP1(), p.at("a"));
    });
    add("table1:g2_t", {{"a", 3}}, +1, [](const ParamMap& p) {
        long a = p.at("a");
        return (K(5) * S5() - K(11)) * pow(K(2), a + 1) * pow(SP1(), -a);
    });
    add("table1:g5_t", {{"a", 3}}, +1, [](const ParamMap& p) {
        return Expr::constant(make_rat(28, 100)) * pow(K(2) / SP1(), p.at("a"));
    });
    add("table1:t_t", {{"a", 3}, {"b", 3}}, +1, [](const ParamMap& p) {
        long a = p.at("a"), b = p.at("b");
        return pow(K(2), a + b + 1) * pow(SP1(), -a - b + 1);
    });
    add("table1:p4_t", {{"a", 3}}, +1, [](const ParamMap& p) {
        long a = p.at("a");
        return pow(K(2), a + 3) * pow(SP1(), -a - 1);
    });

    // ---- printed approximate values for the ten gadget bridge joins ----
    auto approx = [&add](const char* id, long num, long den) {
        add(id, {}, +1,
            [num, den](const ParamMap&) { return Expr::constant(make_rat(num, den)); });
    };
    approx("table2:g4_g4", 7, 10000);
    approx("table2:g4_g2", 4, 1000);
    approx("table2:g4_g5", 3, 1000);
    approx("table2:g4_p4", 6, 1000);
    approx("table2:g2_g2", 2, 100);
    approx("table2:g2_g5", 15, 1000);
    approx("table2:g2_p4", 33, 1000);
    approx("table2:g5_g5", 1, 100);
    approx("table2:g5_p4", 3, 100);
    approx("table2:p4_p4", 5, 100);

    // ---- seventeen closed forms with the signs the source prints ----
    add("table3:1", {{"n1", 2}}, -1, [](const ParamMap& p) {
        long n1 = p.at("n1");
        return -(sqrt(S5() - K(1)) * half_pow(K(2), 2 * n1 + 1) * pow(SP1(), -n1));
    });
    add("table3:2", {{"n1", 4}}, +1, [](const ParamMap& p) {
        long n1 = p.at("n1");
        return K(2) * sqrt(K(2)) * half_pow(SP1(), -2 * n1 - 3) *
               (pow(SP1(), n1) - S5() * pow(K(2), n1 + 1));
    });
    add("table3:3", {{"n2", 1}}, +1, [](const ParamMap& p) {
        long n2 = p.at("n2");
        return sqrt(S5() - K(1)) * half_pow(K(2), 2 * n2 + 3) / pow(SP1(), n2) +
               K(3) * sqrt(S5() + K(2)) - sqrt(K(2) * SP1());
    });
    add("table3:4", {{"n1", 3}}, -1, [](const ParamMap& p) {
        long n1 = p.at("n1");
        return -((K(2) * S5() + K(3)) * pow(K(2), n1 + 5) * pow(SP1(), -n1 - 4)) - S5() + K(2);
    });
    add("table3:5", {{"n1", 3}}, +1, [](const ParamMap& p) {
        long n1 = p.at("n1");
        return half_pow(SP1(), -2 * n1 - 3) *
               (K(2) * sqrt(K(10)) * pow(SP1(), n1) + (S5() - K(4)) * half_pow(K(2), 2 * n1 + 5));
    });
    add("table3:6", {{"n1", 3}}, -1, [](const ParamMap& p) {
        long n1 = p.at("n1");
        return (K(5) * S5() - K(13)) * pow(K(2) / SP1(), n1) + S5() - K(2);
    });
    add("table3:7", {{"n1", 3}}, +1, [](const ParamMap& p) {
        long n1 = p.at("n1");
        return (S5() - K(7)) * half_pow(SP1() / K(2), -2 * n1 - 5) + K(3) * sqrt(S5() - K(2));
    });
    add("table3:8", {{"n1", 0}, {"n2", 0}}, 0, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        Expr num = a_const(3) * pow(K(2), n1) * pow(SP1(), n2) +
                   a_const(4) * half_pow(K(2), 2 * (n1 + n2) + 3) -
                   a_const(5) * pow(SP1(), n1) * pow(K(2), n2);
        return num / (half_pow(K(2), n1 + n2 + 2) * half_pow(SP1(), n1 + n2 - 1));
    });
    add("table3:9", {{"n1", 0}, {"n2", 0}}, 0, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        Expr num = ((K(4) * S5() + K(7)) * pow(SP1(), n1) + (K(5) * S5() + K(1)) * pow(K(2), n1)) *
                       pow(K(2), n2 + 8) -
                   pow(K(2), n1 + 8) * pow(SP1(), n2);
        return num / ((S5() - K(3)) * half_pow(K(2) * SP1(), n1 + n2 + 7));
    });
    add("table3:10", {{"n1", 0}, {"n2", 0}}, 0, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        Expr num = (S5() - K(1)) * pow(K(2), n1 + 1) * pow(SP1(), n2) +
                   K(3) * ((S5() - K(1)) * pow(K(2), n1) - pow(SP1(), n1)) * pow(K(2), n2 + 2);
        return num / ((S5() - K(1)) * half_pow(K(2) * SP1(), n1 + n2));
    });
    add("table3:11", {{"n1", 0}, {"n2", 0}}, 0, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        Expr num = (S5() - K(1)) * pow(K(2), n1 + 4) * pow(SP1(), n2) +
                   K(3) * ((S5() - K(3)) * pow(K(2), n1) - pow(SP1(), n1)) * pow(K(2), n2 + 5);
        return num / ((S5() - K(1)) * half_pow(K(2) * SP1(), n1 + n2 + 3));
    });
    add("table3:12", {{"n1", 0}, {"n2", 0}}, 0, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        Expr num = K(3) * pow(SP1(), n1 + 1) * pow(K(2), n2 + 5) -
                   pow(K(2), n1 + 6) * pow(SP1(), n2) - K(3) * pow(K(2), n1 + n2 + 7);
        return num / ((S5() - K(3)) * half_pow(K(2) * SP1(), n1 + n2 + 5));
    });
    add("table3:13", {{"n1", 0}, {"n2", 0}}, 0, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        Expr num = a_const(3) * pow(K(2), n1) * pow(SP1(), n2) -
                   K(3) *
                       (half_pow(SP1(), 2 * n1 + 1) +
                        sqrt(S5() - K(2)) * half_pow(K(2), 2 * n1 + 3)) *
                       pow(K(2), n2);
        return num / (half_pow(K(2), n1 + n2 - 2) * half_pow(SP1(), n1 + n2 + 3));
    });
    add("table3:14", {{"n1", 0}, {"n2", 0}}, 0, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        Expr num = a_const(6) * pow(SP1(), n1) * (-pow(K(2), n2 + 1)) +
                   a_const(7) * half_pow(K(2), 2 * n1 + 1) * pow(SP1(), n2) +
                   a_const(8) * half_pow(K(2), 2 * (n1 + n2) + 3);
        return -(num / ((S5() - K(3)) * half_pow(K(2) * SP1(), n1 + n2)));
    });
    add("table3:15", {{"n1", 0}, {"n2", 0}}, 0, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        Expr num = a_const(6) * pow(SP1(), n1) * pow(K(2), n2 + 4) -
                   a_const(9) * half_pow(K(2), 2 * n1 + 7) * pow(SP1(), n2) +
                   a_const(10) * half_pow(K(2), 2 * (n1 + n2) + 9);
        return num / ((S5() - K(3)) * half_pow(K(2) * SP1(), n1 + n2 + 3));
    });
    add("table3:16", {{"n1", 0}, {"n2", 0}}, 0, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        Expr num = (K(4) * S5() + K(7)) * pow(SP1(), n1) * (-pow(K(2), n2)) +
                   pow(K(2), n1) * pow(SP1(), n2) + (K(3) * S5() + K(13)) * pow(K(2), n1 + n2);
        return (S5() - K(2)) * num / half_pow(K(2) * SP1(), n1 + n2);
    });
    add("table3:17", {{"n1", 0}, {"n2", 0}}, 0, [](const ParamMap& p) {
        long n1 = p.at("n1"), n2 = p.at("n2");
        Expr num = a_const(11) * K(2) *
                       (pow(K(2), n1) * pow(SP1(), n2) -
                        (K(4) * S5() + K(7)) * pow(SP1(), n1) * pow(K(2), n2)) -
                   a_const(12) * pow(K(2), n1 + n2 + 2);
        return num / (half_pow(K(2), n1 + n2 - 1) * half_pow(SP1(), n1 + n2 + 2));
    });

    return rows;
}

} // namespace table_detail

inline const std::vector<TableRow>& all_table_rows() {
    static const std::vector<TableRow> rows = table_detail::make_rows();
    return rows;
}

inline const TableRow* find_table_row(const std::string& id) {
    for (const auto& r : all_table_rows())
        if (r.id == id) return &r;
    return nullptr;
}

inline void validate_table_params(const TableRow& row, const ParamMap& params) {
    for (const auto& spec : row.params) {
        auto it = params.find(spec.name);
        if (it == params.end())
            throw std::domain_error(row.id + ": missing parameter " + spec.name);
        if (it->second < spec.min) {
            std::ostringstream os;
            os << row.id << ": " << spec.name << " must be >= " << spec.min;
            throw std::domain_error(os.str());
        }
        if (spec.even && it->second % 2 != 0)
            throw std::domain_error(row.id + ": " + spec.name + " must be even");
    }
    for (const auto& [name, value] : params) {
        (void)value;
        bool known = false;
        for (const auto& spec : row.params) known = known || spec.name == name;
        if (!known) throw std::domain_error(row.id + ": unknown parameter " + name);
    }
}

// Sign and enclosure for a table row at given parameters. Sign 0 means
// the value could not be certified nonzero down to a very fine width.
inline TableEval table_expr_eval(const TableRow& row, const ParamMap& params) {
    validate_table_params(row, params);
    Expr e = row.build(params);
    RatInterval v = e.eval(64);
    Rat tiny = make_rat(1, 1) / Rat(pow_int(Int(2), 160));
    for (unsigned prec = 64; prec <= (1u << 16); prec *= 2) {
        v = e.eval(prec);
        int s = v.sign();
        if (s != 0) return {s, v};
        if (v.width() < tiny) break;
    }
    return {0, v};
}

} // namespace sgspec
