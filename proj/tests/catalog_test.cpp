#include <catch2/catch_amalgamated.hpp>

#include <sgspec/catalog.hpp>

#include <cstdio>
#include <fstream>
#include <map>

using namespace sgspec;

namespace {

json minimal_catalog() {
    return json::parse(R"({
      "version": 1,
      "entries": [
        {
          "name": "edge",
          "source": "text-constructed",
          "family": "P:2",
          "n": 2,
          "edges": [[0, 1, "+"]],
          "claims": {"verdict": "Below2"}
        }
      ]
    })");
}

} // namespace

TEST_CASE("decimal literals parse exactly") {
    using catalog_detail::rat_from_decimal;
    REQUIRE(rat_from_decimal("0.033") == make_rat(33, 1000));
    REQUIRE(rat_from_decimal("0.0007") == make_rat(7, 10000));
    REQUIRE(rat_from_decimal("-1.5") == make_rat(-3, 2));
    REQUIRE(rat_from_decimal("12") == Rat(12));
    REQUIRE(rat_from_decimal("+0.25") == make_rat(1, 4));
    REQUIRE_THROWS_AS(rat_from_decimal("1.2.3"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_decimal("abc"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_decimal(""), std::invalid_argument);
}

TEST_CASE("catalog loads and saves byte-identically") {
    Catalog cat = catalog_from_json(minimal_catalog());
    REQUIRE(cat.entries.size() == 1);
    REQUIRE(cat.entries[0].graph().n() == 2);
    std::string once = catalog_string(cat);
    Catalog again = catalog_from_json(json::parse(once));
    REQUIRE(catalog_string(again) == once);
}

TEST_CASE("shipped catalog round trips byte-identically") {
    Catalog cat = load_catalog("data/catalog.json");
    REQUIRE(cat.entries.size() >= 50);
    std::ifstream in("data/catalog.json", std::ios::binary);
    std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    REQUIRE(catalog_string(cat) == raw);

    std::map<std::string, int> sources;
    for (const auto& e : cat.entries) sources[e.source]++;
    REQUIRE(sources["text-constructed"] > 0);
    REQUIRE(sources["figure-data"] > 0);
    REQUIRE(sources["search-derived"] > 0);
}

TEST_CASE("schema violations carry their location") {
    auto expect_error = [](json j, const char* needle) {
        REQUIRE_THROWS_WITH(catalog_from_json(j), Catch::Matchers::ContainsSubstring(needle));
    };

    json bad = minimal_catalog();
    bad["entries"][0]["extra"] = 1;
    expect_error(bad, "unknown key 'extra'");

    bad = minimal_catalog();
    bad["entries"][0]["edges"][0][2] = "*";
    expect_error(bad, "'*'");

    bad = minimal_catalog();
    bad["entries"][0].erase("edges");
    expect_error(bad, "together");

    bad = minimal_catalog();
    bad["entries"].push_back(bad["entries"][0]);
    expect_error(bad, "duplicate entry name 'edge'");

    bad = minimal_catalog();
    bad["entries"][0]["source"] = "rumor";
    expect_error(bad, "bad source 'rumor'");

    bad = minimal_catalog();
    bad["entries"][0].erase("name");
    expect_error(bad, "missing key 'name'");

    bad = minimal_catalog();
    bad["entries"][0]["claims"]["tables"] = json::array({json{{"row", "table3:1"}, {"sign", 5}}});
    expect_error(bad, "sign must be -1, 0 or 1");
}

TEST_CASE("verification confirms honest claims") {
    Catalog cat = catalog_from_json(minimal_catalog());
    auto results = verify_all(cat);
    REQUIRE(results.size() == 2);  // family reconstruction + verdict
    for (const auto& r : results) REQUIRE(r.status == VerifyStatus::Confirmed);
    REQUIRE(results[0].claim_id == "edge:family");
    REQUIRE(results[1].claim_id == "edge:verdict");
}

TEST_CASE("verification refutes a wrong radius claim with a witness") {
    json j = minimal_catalog();
    // T(2,3,4) lies above the threshold; claim the opposite on purpose
    j["entries"][0]["name"] = "liar";
    j["entries"][0]["family"] = "T:2,3,4";
    j["entries"][0]["n"] = 10;
    json edges = json::array();
    SignedGraph t = make_family("T:2,3,4");
    for (const auto& e : t.edges()) edges.push_back(json::array({e.u, e.v, "+"}));
    j["entries"][0]["edges"] = edges;
    j["entries"][0]["claims"]["verdict"] = "Between2AndLambdaStar";

    Catalog cat = catalog_from_json(j);
    auto results = verify_all(cat);
    bool saw_refutation = false;
    for (const auto& r : results)
        if (r.claim_id == "liar:verdict") {
            REQUIRE(r.status == VerifyStatus::Refuted);
            REQUIRE(r.witness.find("AboveLambdaStar") != std::string::npos);
            saw_refutation = true;
        }
    REQUIRE(saw_refutation);
}

TEST_CASE("verification refutes a wrong maximality claim") {
    json j = minimal_catalog();
    j["entries"][0]["name"] = "stuck";
    j["entries"][0]["family"] = "B:4,4,0";
    SignedGraph b = make_family("B:4,4,0");
    j["entries"][0]["n"] = b.n();
    json edges = json::array();
    for (const auto& e : b.edges())
        edges.push_back(json::array({e.u, e.v, e.sign > 0 ? "+" : "-"}));
    j["entries"][0]["edges"] = edges;
    j["entries"][0]["claims"] = json{{"maximal", true}};

    auto results = verify_all(catalog_from_json(j));
    bool saw = false;
    for (const auto& r : results)
        if (r.claim_id == "stuck:maximal") {
            REQUIRE(r.status == VerifyStatus::Refuted);
            REQUIRE(r.witness.find("extends") != std::string::npos);
            saw = true;
        }
    REQUIRE(saw);
}

TEST_CASE("verification refutes a family string that mismatches the edges") {
    json j = minimal_catalog();
    j["entries"][0]["family"] = "P:3";
    auto results = verify_all(catalog_from_json(j));
    REQUIRE(results[0].claim_id == "edge:family");
    REQUIRE(results[0].status == VerifyStatus::Refuted);
}

TEST_CASE("entries without edge data skip graph claims but evaluate table claims") {
    json j = json::parse(R"({
      "version": 1,
      "entries": [
        {
          "name": "ghost",
          "source": "figure-data",
          "note": "kept for the record",
          "claims": {
            "verdict": "Exactly2",
            "tables": [
              {"row": "table1:u6", "params": {"n1": 1, "n2": 1}, "sign": 1}
            ]
          }
        }
      ]
    })");
    auto results = verify_all(catalog_from_json(j));
    std::map<std::string, VerifyStatus> by_id;
    for (const auto& r : results) by_id[r.claim_id] = r.status;
    REQUIRE(by_id.at("ghost:data") == VerifyStatus::SkippedMissingData);
    REQUIRE(by_id.at("ghost:verdict") == VerifyStatus::SkippedMissingData);
    REQUIRE(by_id.at("ghost:table:table1:u6") == VerifyStatus::Confirmed);
}

TEST_CASE("table claims catch wrong signs and drifted values") {
    json j = json::parse(R"({
      "version": 1,
      "entries": [
        {
          "name": "offkey",
          "source": "figure-data",
          "claims": {
            "tables": [
              {"row": "table3:1", "params": {"n1": 3}, "sign": 1},
              {"row": "table2:p4_p4", "sign": 1, "approx": "0.20", "tol": "0.005"},
              {"row": "table9:none", "sign": 1}
            ]
          }
        }
      ]
    })");
    auto results = verify_all(catalog_from_json(j));
    std::map<std::string, VerificationResult> by_id;
    for (const auto& r : results) by_id[r.claim_id] = r;
    // row 1 is certified negative, so a positive claim is refuted
    REQUIRE(by_id.at("offkey:table:table3:1").status == VerifyStatus::Refuted);
    REQUIRE(by_id.at("offkey:table:table2:p4_p4").status == VerifyStatus::Refuted);
    REQUIRE(by_id.at("offkey:table:table9:none").status == VerifyStatus::Refuted);
    REQUIRE(by_id.at("offkey:table:table9:none").witness.find("unknown table row") !=
            std::string::npos);
}

TEST_CASE("verification output is ordered by entry name and deterministic") {
    json j = minimal_catalog();
    j["entries"].push_back(json{{"name", "awl"}, {"source", "figure-data"}});
    Catalog cat = catalog_from_json(j);
    auto r1 = verify_all(cat);
    auto r2 = verify_all(cat);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        REQUIRE(r1[i].claim_id == r2[i].claim_id);
        REQUIRE(r1[i].status == r2[i].status);
        REQUIRE(r1[i].witness == r2[i].witness);
    }
    REQUIRE(r1.front().claim_id.rfind("awl", 0) == 0);
}

TEST_CASE("status names") {
    REQUIRE(std::string(to_string(VerifyStatus::Confirmed)) == "confirmed");
    REQUIRE(std::string(to_string(VerifyStatus::Refuted)) == "refuted");
    REQUIRE(std::string(to_string(VerifyStatus::SkippedMissingData)) == "skipped-missing-data");
}

TEST_CASE("load failures name the file") {
    REQUIRE_THROWS_WITH(load_catalog("data/no_such_catalog.json"),
                        Catch::Matchers::ContainsSubstring("no_such_catalog"));
    const char* path = "/tmp/sgspec_bad_catalog.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    REQUIRE_THROWS_WITH(load_catalog(path), Catch::Matchers::ContainsSubstring("parse error"));
    std::remove(path);
}
