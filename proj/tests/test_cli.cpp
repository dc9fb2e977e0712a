#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pue/cli.hpp"
#include "pue/channel_sim.hpp"
#include "pue/constructions.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pue;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "pue");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& body) {
    const fs::path dir = fs::temp_directory_path() / "pue_cli_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << body;
    return p;
}

void check_parse_error(const std::string& body, std::size_t line, std::size_t column) {
    std::istringstream in(body);
    try {
        cli::parse_matrix(in);
        FAIL("no error for: " << body);
    } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == column);
    }
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) break;
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("matrix parsing") {
    std::istringstream ok("2 3 2\n1 0 1\n\n0 1 0\n");
    CHECK(to_string(cli::parse_matrix(ok)) == "1 0 1;0 1 0");
    check_parse_error("", 1, 0);
    check_parse_error("2 3\n", 1, 0);
    check_parse_error("6 3 2\n1 0 1\n0 1 0\n", 1, 1);
    check_parse_error("2 3 4\n", 1, 5);
    check_parse_error("2 x 2\n", 1, 3);
    check_parse_error("2 3 2\n1 0 1\n0 2 0\n", 3, 3);
    check_parse_error("2 3 2\n1 0 1\n0 1\n", 3, 4);
    check_parse_error("2 3 2\n1 0 1\n0 1 0 1\n", 3, 7);
    check_parse_error("2 3 2\n1 0 1\n", 3, 0);
    check_parse_error("2 3 1\n1 0 1\n0 1 0\n", 3, 1);
    std::istringstream dup("2 3 2\n1 0 1\n1 0 1\n");
    CHECK_THROWS_AS(cli::parse_matrix(dup), RankDeficient);
}

TEST_CASE("construct") {
    auto c = run({"construct", "C", "3", "2", "-q", "2"});
    CHECK(c.code == 0);
    CHECK(c.out == "2 3 2\n1 0 0\n0 1 0\n");
    CHECK(run({"construct", "D", "3", "2"}).out == "2 3 2\n1 0 1\n0 1 0\n");
    CHECK(run({"construct", "E", "3", "2", "--v", "1,1"}).out == "2 3 2\n1 0 1\n0 1 1\n");
    CHECK(run({"construct", "E", "4", "2", "-q", "3", "--v", "1,2"}).out == "3 4 2\n1 0 1 0\n0 1 2 0\n");
    CHECK(run({"construct", "D", "3", "2", "--v", "0"}).code == cli::kUsageError);
    CHECK(run({"construct", "X", "3", "2"}).code == cli::kUsageError);
    CHECK(run({"construct", "C", "3"}).code == cli::kUsageError);
    CHECK(run({"construct", "C", "3", "2", "-q", "6"}).code == cli::kUsageError);
}

TEST_CASE("analyze reports and extremal equality columns") {
    const auto d = temp_file("d.txt", run({"construct", "D", "3", "2"}).out);
    const auto r = run({"analyze", d.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("support: 1 2 3\n") != std::string::npos);
    CHECK(r.out.find("full_support: true\n") != std::string::npos);
    CHECK(r.out.find("min_distance: 1\n") != std::string::npos);
    CHECK(r.out.find("weight_distribution: 1 1 1 1\n") != std::string::npos);
    const auto csv = parse_csv(r.out.substr(r.out.find("\n\n") + 2));
    REQUIRE(csv.size() == 102);
    CHECK(csv[0] == std::vector<std::string>{"p", "p_ue", "general_bound", "full_support_bound", "improvement"});
    for (std::size_t i = 1; i < csv.size(); ++i) CHECK(csv[i][1] == csv[i][3]);

    const auto c = temp_file("c.txt", run({"construct", "C", "3", "2"}).out);
    const auto rc = run({"analyze", c.string(), "--grid", "11"});
    CHECK(rc.out.find("support_size: 2\n") != std::string::npos);
    CHECK(rc.out.find("full_support: false\n") != std::string::npos);
    const auto ccsv = parse_csv(rc.out.substr(rc.out.find("\n\n") + 2));
    REQUIRE(ccsv.size() == 12);
    for (std::size_t i = 1; i < ccsv.size(); ++i) CHECK(ccsv[i][1] == ccsv[i][2]);

    const auto bad = temp_file("bad.txt", "2 3 2\n1 0 1\n0 1 7\n");
    const auto rb = run({"analyze", bad.string()});
    CHECK(rb.code == cli::kUsageError);
    CHECK(rb.err.find("line 3, column 5") != std::string::npos);
    CHECK(run({"analyze", "/nonexistent/file"}).code == cli::kUsageError);
}

TEST_CASE("construct then analyze round trip") {
    for (auto [fam, n, k, q] : {std::tuple{"D", "5", "2", "3"}, std::tuple{"E", "5", "3", "2"}, std::tuple{"E", "4", "2", "4"}}) {
        const auto out_file = fs::temp_directory_path() / "pue_cli_tests" / "rt.txt";
        REQUIRE(run({"construct", fam, n, k, "-q", q, "--out", out_file.string()}).code == 0);
        const auto r = run({"analyze", out_file.string()});
        REQUIRE(r.code == 0);
        const std::size_t nn = std::stoul(n), kk = std::stoul(k);
        const unsigned qq = static_cast<unsigned>(std::stoul(q));
        CHECK(r.out.find("q: " + std::string(q) + "\nn: " + n + "\nk: " + k + "\n") == 0);
        const auto w = std::string(fam) == "D" ? weights_D_closed(nn, kk, qq) : weights_E_closed(nn, kk, qq);
        std::string expect = "weight_distribution:";
        for (auto a : w.counts) expect += ' ' + std::to_string(a);
        CHECK(r.out.find(expect + "\n") != std::string::npos);
    }
}

TEST_CASE("verify exit codes") {
    const auto r = run({"verify", "4", "-q", "2", "-n", "3", "-k", "2"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("1 code, 0 violations, 1 equality case") != std::string::npos);
    CHECK(run({"verify", "2", "-q", "2", "-n", "4", "-k", "2", "--workers", "2"}).code == cli::kSuccess);
    CHECK(run({"verify", "4", "-q", "2", "-n", "20", "-k", "10"}).code == cli::kBudgetExceeded);
    CHECK(run({"verify", "3", "-q", "2", "-n", "3", "-k", "2"}).code == cli::kUsageError);
    CHECK(run({"verify", "2", "-q", "2", "-n", "3", "-k", "3"}).code == cli::kUsageError);

    const auto lines = fs::temp_directory_path() / "pue_cli_tests" / "cert.txt";
    REQUIRE(run({"verify", "4", "-q", "3", "-n", "4", "-k", "2", "--out", lines.string()}).code == 0);
    std::ifstream in(lines);
    std::string first;
    std::getline(in, first);
    CHECK(first.rfind("CERT\ttheorem=4\tq=3\tn=4\tk=2\t", 0) == 0);
}

TEST_CASE("simulate") {
    const auto d = temp_file("d_sim.txt", "2 3 2\n1 0 1\n0 1 0\n");
    const auto a = run({"simulate", d.string(), "-p", "0.1", "--trials", "200000", "--seed", "3"});
    const auto b = run({"simulate", d.string(), "-p", "0.1", "--trials", "200000", "--seed", "3", "--workers", "3"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind(SimulationReport::csv_header() + "\n", 0) == 0);
    const auto z = run({"simulate", d.string(), "-p", "0", "--trials", "1000"});
    CHECK(z.out.find(",1000,0,0,0,1,") != std::string::npos);
    CHECK(run({"simulate", d.string(), "-p", "0.7"}).code == cli::kUsageError);
    CHECK(run({"simulate", d.string(), "-p", "0.1", "--trials", "0"}).code == cli::kUsageError);
}

TEST_CASE("bounds") {
    auto csv_z = [](const Result& r) { return parse_csv(r.out.substr(r.out.find("\n\n") + 2)); };
    for (auto [q, k] : {std::pair{"5", "1"}, std::pair{"2", "2"}}) {
        const auto r = run({"bounds", "-q", q, "-n", "4", "-k", k});
        REQUIRE(r.code == 0);
        const auto z = csv_z(r);
        REQUIRE(z.size() == 102);
        CHECK(z[0] == std::vector<std::string>{"z", "f", "g", "g_minus_f"});
        for (std::size_t i = 1; i < z.size(); ++i) CHECK(z[i][1] == z[i][2]);
    }
    const auto r = run({"bounds", "-q", "3", "-n", "5", "-k", "3", "--grid", "21"});
    const auto z = csv_z(r);
    REQUIRE(z.size() == 22);
    for (std::size_t i = 2; i + 1 < z.size(); ++i) CHECK(std::stod(z[i][2]) > std::stod(z[i][1]));
    const auto p = parse_csv(r.out);
    CHECK(p[0] == std::vector<std::string>{"p", "general_bound", "full_support_bound", "improvement"});
    CHECK(run({"bounds", "-q", "3", "-n", "2", "-k", "3"}).code == cli::kUsageError);

    const auto prefix = (fs::temp_directory_path() / "pue_cli_tests" / "b").string();
    REQUIRE(run({"bounds", "-q", "2", "-n", "3", "-k", "2", "--out", prefix}).code == 0);
    CHECK(fs::exists(prefix + "_p.csv"));
    CHECK(fs::exists(prefix + "_z.csv"));
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"--help"}).code == cli::kSuccess);
}
