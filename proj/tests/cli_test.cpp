#include <catch2/catch_amalgamated.hpp>

#include <sgspec/cli.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace sgspec;

namespace {

struct CliRun {
    int exit_code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("verdict on a family spec") {
    CliRun r = run({"verdict", "T:2,2,2"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out == "T:2,2,2 Exactly2 x^7-6x^5+9x^3-4x\n");
}

TEST_CASE("verdict reads sg text from stdin") {
    CliRun fam = run({"family", "Theta:8,2,0"});
    REQUIRE(fam.exit_code == 0);
    CliRun r = run({"verdict", "-"}, fam.out);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("Between2AndLambdaStar") != std::string::npos);
}

TEST_CASE("charpoly output modes") {
    CliRun pretty = run({"charpoly", "C:4:unbal"});
    REQUIRE(pretty.exit_code == 0);
    REQUIRE(pretty.out == "x^4-4x^2+4\n");
    CliRun coeffs = run({"charpoly", "--coeffs", "C:4:unbal"});
    REQUIRE(coeffs.out == "4 0 -4 0 1\n");
}

TEST_CASE("canon is stable across relabelings of the same class") {
    CliRun a = run({"canon", "T:1,2,3"});
    CliRun b = run({"canon", "T:2,1,3"});
    CliRun c = run({"canon", "T:3,2,1"});
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(a.out == c.out);
    CliRun d = run({"canon", "T:1,2,4"});
    REQUIRE(a.out != d.out);
}

TEST_CASE("embed answers yes and no with matching exit codes") {
    CliRun yes = run({"embed", "P:3", "C:5:unbal"});
    REQUIRE(yes.exit_code == 0);
    REQUIRE(yes.out == "yes\n");
    CliRun no = run({"embed", "C:4:bal", "C:4:unbal"});
    REQUIRE(no.exit_code == 1);
    REQUIRE(no.out == "no\n");
}

TEST_CASE("spectrum prints enclosures with multiplicities") {
    CliRun r = run({"spectrum", "--digits", "6", "C:4:unbal"});
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);  // +-sqrt2, each double
    for (const std::string& line : lines) {
        std::istringstream row(line);
        std::string lo, hi;
        int mult = 0;
        REQUIRE((row >> lo >> hi >> mult));
        REQUIRE(mult == 2);
    }
    REQUIRE(lines[0].substr(0, 7) == "-1.4142");
    REQUIRE(lines[1].substr(0, 6) == "1.4142");
    CliRun bad = run({"spectrum", "--digits", "99", "P:2"});
    REQUIRE(bad.exit_code == 2);
}

TEST_CASE("classify prints one line per class plus a total") {
    CliRun r = run({"classify", "--n", "3"});
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 4);
    REQUIRE(lines.back() == "total 3");
}

TEST_CASE("maximal subcommand") {
    CliRun max = run({"maximal", "Theta:8,2,0"});
    REQUIRE(max.exit_code == 0);
    REQUIRE(max.out == "maximal\n");
    CliRun ext = run({"maximal", "P:3"});
    REQUIRE(ext.exit_code == 1);
    REQUIRE(ext.out == "extendable\n");
    CliRun over = run({"maximal", "T:2,3,4"});
    REQUIRE(over.exit_code == 1);
    REQUIRE(over.err.rfind("error:", 0) == 0);
}

TEST_CASE("search emits a JSON report") {
    CliRun r = run({"search", "Theta:8,2,0", "--depth", "1"});
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    REQUIRE(rep.at("depth") == 1);
    REQUIRE(rep.at("zero_vector_excluded") == true);
    REQUIRE(rep.at("levels").size() == 2);
    REQUIRE(rep.at("levels")[0].at("classes").size() == 1);
    REQUIRE(rep.at("levels")[0].at("classes")[0].at("maximal") == true);
    REQUIRE(rep.at("levels")[1].at("size") == 0);
    REQUIRE(rep.at("seed") == rep.at("levels")[0].at("classes")[0].at("code"));
}

TEST_CASE("search cap failure still prints the partial report") {
    CliRun r = run({"search", "P:1", "--depth", "4", "--cap", "2"});
    REQUIRE(r.exit_code == 1);
    REQUIRE(r.err.find("exceeded the cap") != std::string::npos);
    json rep = json::parse(r.out);
    REQUIRE(rep.at("levels").size() >= 1);
}

TEST_CASE("table rows evaluate from the command line") {
    CliRun r = run({"table", "--row", "table3:1", "--param", "n1=2"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.rfind("table3:1 -1 ", 0) == 0);

    CliRun list = run({"table", "--list"});
    REQUIRE(list.exit_code == 0);
    REQUIRE(list.out.find("table1:g0k k>=12,even asserted 1") != std::string::npos);
    REQUIRE(list.out.find("table2:p4_p4 asserted 1") != std::string::npos);

    CliRun missing = run({"table", "--row", "table3:1"});
    REQUIRE(missing.exit_code == 1);  // the row requires n1
    CliRun unknown = run({"table", "--row", "nope:1"});
    REQUIRE(unknown.exit_code == 2);
    CliRun neither = run({"table"});
    REQUIRE(neither.exit_code == 2);
    CliRun below_min = run({"table", "--row", "table1:g0k", "--param", "k=11"});
    REQUIRE(below_min.exit_code == 1);
}

TEST_CASE("verify walks the shipped catalog") {
    CliRun r = run({"verify", "data/catalog.json"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("confirmed Theta_8_2_0:verdict") != std::string::npos);
    REQUIRE(r.out.find("skipped-missing-data H1:data") != std::string::npos);
    REQUIRE(r.out.find("confirmed Coupled_P4_P4:table:table2:p4_p4") != std::string::npos);
    auto lines = lines_of(r.out);
    REQUIRE(lines.back().rfind("entries ", 0) == 0);
}

TEST_CASE("usage errors exit with two") {
    REQUIRE(run({}).exit_code == 2);
    REQUIRE(run({"bogus"}).exit_code == 2);
    REQUIRE(run({"classify"}).exit_code == 2);         // missing --n
    REQUIRE(run({"search", "P:2"}).exit_code == 2);    // missing --depth
    REQUIRE(run({"embed", "P:2"}).exit_code == 2);     // missing host
    REQUIRE(run({"verdict", "Zz:1"}).exit_code == 2);  // unparsable graph arg
    REQUIRE(run({"classify", "--n", "99"}).exit_code == 2);
}

TEST_CASE("help exits cleanly") {
    CliRun r = run({"--help"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("verdict") != std::string::npos);
}

TEST_CASE("verdict agrees between a file and the family spec behind it") {
    CliRun fam = run({"family", "C:4:unbal"});
    const char* path = "/tmp/sgspec_cli_test.sg";
    {
        std::ofstream f(path);
        f << fam.out;
    }
    CliRun from_file = run({"verdict", path});
    CliRun from_spec = run({"verdict", "C:4:unbal"});
    REQUIRE(from_file.exit_code == 0);
    // same verdict and witness, different echo of the argument
    REQUIRE(from_file.out.substr(from_file.out.find(' ')) ==
            from_spec.out.substr(from_spec.out.find(' ')));
    std::remove(path);
}
