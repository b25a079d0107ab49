// Integration tests driving the installed CLI binary. The binary path and
// the repo data directory arrive as --cli=... and --data=... arguments;
// everything else is forwarded to the test framework.
#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "doctest.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string g_cli;
std::string g_data;
fs::path g_tmp;

struct CmdResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

CmdResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    static int serial = 0;
    const fs::path out = g_tmp / ("out" + std::to_string(serial));
    const fs::path err = g_tmp / ("err" + std::to_string(serial));
    const fs::path in = g_tmp / ("in" + std::to_string(serial));
    ++serial;
    spit(in, stdin_data);
    const std::string cmd = "'" + g_cli + "' " + args + " <'" + in.string() + "' >'" +
                            out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    CmdResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string karate() { return (fs::path(g_data) / "karate.txt").string(); }

// drop the wall_ms line so timing noise does not break byte comparisons
std::string strip_wall(const std::string& report) {
    std::istringstream in(report);
    std::string line, out;
    while (std::getline(in, line))
        if (line.find("\"wall_ms\"") == std::string::npos) out += line + "\n";
    return out;
}

}  // namespace

TEST_CASE("gen emits deterministic edge lists of the documented size") {
    const CmdResult ring = run_cli("gen ring 30 5");
    CHECK(ring.exit_code == 0);
    CHECK(std::count(ring.out.begin(), ring.out.end(), '\n') == 330);
    const CmdResult again = run_cli("gen ring 30 5");
    CHECK(again.out == ring.out);

    const CmdResult bridged = run_cli("gen bridged 20 5");
    CHECK(bridged.exit_code == 0);
    CHECK(std::count(bridged.out.begin(), bridged.out.end(), '\n') == 404);

    const CmdResult small = run_cli("gen ring 3 3");
    CHECK(std::count(small.out.begin(), small.out.end(), '\n') == 12);
}

TEST_CASE("gen rejects bad parameters with a usage exit") {
    CHECK(run_cli("gen ring 2 3").exit_code == 1);
    CHECK(run_cli("gen bridged 3 9").exit_code == 1);
    CHECK(run_cli("gen").exit_code == 1);
}

TEST_CASE("run produces the documented report shape") {
    const CmdResult r = run_cli("run " + karate() + " --algorithm fpgreed --partition-out '" +
                                (g_tmp / "k.part").string() + "'");
    REQUIRE(r.exit_code == 0);
    // ordered_json preserves emission order, which is part of the output contract.
    const nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.out);
    const std::vector<std::string> keys{"dataset",    "algorithm", "parameters", "nodes",
                                        "edges",      "fp",        "fp_exact",   "modularity",
                                        "modules",    "module_sizes", "wall_ms"};
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        REQUIRE(i < keys.size());
        CHECK(it.key() == keys[i]);
    }
    CHECK(i == keys.size());
    CHECK(j["dataset"] == "karate");
    CHECK(j["algorithm"] == "fpgreed");
    CHECK(j["parameters"]["order"] == "ascending");
    CHECK(j["parameters"]["seed"] == 0);
    CHECK(j["nodes"] == 34);
    CHECK(j["edges"] == 78);
    CHECK(j["fp"].is_number());
    CHECK(j["fp_exact"]["correct"].is_number_integer());
    CHECK(j["fp_exact"]["total"] == 561);
    CHECK(j["modularity"].is_number());
    CHECK(j["modules"].is_number_integer());
    for (const auto& bucket : j["module_sizes"]) {
        REQUIRE(bucket.size() == 2);
        CHECK(bucket[0].is_number_integer());
        CHECK(bucket[1].is_number_integer());
    }
    CHECK(j["wall_ms"].is_number());
    CHECK(fs::exists(g_tmp / "k.part"));
}

TEST_CASE("run on stdin accepts piped generator output") {
    const std::string edges = run_cli("gen ring 12 4").out;
    const CmdResult r = run_cli("run - --algorithm fpgreed", edges);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["dataset"] == "stdin");
    CHECK(j["nodes"] == 48);
    CHECK(j["modules"] == 12);
}

TEST_CASE("run both emits an array with one report per algorithm") {
    const CmdResult r = run_cli("run " + karate() + " --algorithm both --partition-out '" +
                                (g_tmp / "b.part").string() + "'");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["algorithm"] == "fpgreed");
    CHECK(j[1]["algorithm"] == "fastfp");
    CHECK(j[1]["parameters"]["threshold"] == 3);
    CHECK(fs::exists(g_tmp / "b.part.fpgreed"));
    CHECK(fs::exists(g_tmp / "b.part.fastfp"));
}

TEST_CASE("fastfp reproduces the published Karate score") {
    const CmdResult r = run_cli("run " + karate() + " --algorithm fastfp --partition-out '" +
                                (g_tmp / "ff.part").string() + "'");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["fp_exact"]["correct"] == 381);
    CHECK(j["fp_exact"]["total"] == 561);
    CHECK(j["fp"] == doctest::Approx(0.6791));
}

TEST_CASE("csv format matches the documented header") {
    const CmdResult r = run_cli("run " + karate() + " --algorithm both --format csv");
    REQUIRE(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "dataset,algorithm,threshold,order,seed,nodes,edges,fp,fp_correct,fp_total,"
          "modularity,modules,wall_ms");
    std::string row;
    int rows = 0;
    while (std::getline(in, row))
        if (!row.empty()) ++rows;
    CHECK(rows == 2);
}

TEST_CASE("score reproduces run's values exactly") {
    const fs::path part = g_tmp / "round.part";
    const CmdResult run = run_cli("run " + karate() +
                                  " --algorithm fpgreed --partition-out '" + part.string() + "'");
    REQUIRE(run.exit_code == 0);
    const json run_j = json::parse(run.out);

    const CmdResult score = run_cli("score " + karate() + " '" + part.string() + "'");
    REQUIRE(score.exit_code == 0);
    const json score_j = json::parse(score.out);
    CHECK(score_j["fp"] == run_j["fp"]);
    CHECK(score_j["fp_exact"] == run_j["fp_exact"]);
    CHECK(score_j["modularity"] == run_j["modularity"]);
    CHECK(score_j["modules"] == run_j["modules"]);
    CHECK(score_j["module_sizes"] == run_j["module_sizes"]);
}

TEST_CASE("score names the offending nodes") {
    const fs::path part = g_tmp / "bad.part";
    spit(part, "0 0\n1 0\n2 1\n");  // karate has 34 nodes; most are missing
    const CmdResult r = run_cli("score " + karate() + " '" + part.string() + "'");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("missing") != std::string::npos);
    CHECK(r.err.find("3") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    const fs::path part1 = g_tmp / "det1.part";
    const fs::path part2 = g_tmp / "det2.part";
    const CmdResult a =
        run_cli("run " + karate() + " --algorithm both --partition-out '" + part1.string() + "'");
    const CmdResult b =
        run_cli("run " + karate() + " --algorithm both --partition-out '" + part2.string() + "'");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(strip_wall(a.out) == strip_wall(b.out));
    CHECK(slurp(fs::path(part1.string() + ".fpgreed")) ==
          slurp(fs::path(part2.string() + ".fpgreed")));
    CHECK(slurp(fs::path(part1.string() + ".fastfp")) ==
          slurp(fs::path(part2.string() + ".fastfp")));
}

TEST_CASE("oracle reports all optima") {
    const fs::path path_graph = g_tmp / "path.txt";
    spit(path_graph, "0 1\n1 2\n");
    const CmdResult r = run_cli("oracle '" + path_graph.string() + "'");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["best_fp_exact"]["correct"] == 2);
    CHECK(j["best_fp_exact"]["total"] == 3);
    CHECK(j["partitions_enumerated"] == 5);
    CHECK(j["optimum_count"] == 3);
    CHECK(j["best_partitions"].size() == 3);

    const CmdResult too_big = run_cli("oracle " + karate());
    CHECK(too_big.exit_code == 2);
}

TEST_CASE("bench runs a manifest and keeps going past missing data") {
    const fs::path edges = g_tmp / "ring.txt";
    spit(edges, run_cli("gen ring 6 4").out);
    const fs::path manifest = g_tmp / "manifest.json";
    spit(manifest, R"({
  "repetitions": 3,
  "datasets": [
    {"path": "ring.txt", "algorithms": ["fpgreed", "fastfp"]},
    {"path": "missing.txt", "name": "ghost", "algorithms": ["fpgreed"]}
  ]
})");
    const CmdResult r = run_cli("bench '" + manifest.string() + "' --jobs 2");
    REQUIRE(r.exit_code == 0);
    const json rows = json::parse(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["status"] == "ok");
    CHECK(rows[0]["repetitions"] == 3);
    CHECK(rows[0].contains("wall_ms_median"));
    CHECK_FALSE(rows[0].contains("wall_ms"));
    CHECK(rows[1]["status"] == "ok");
    CHECK(rows[2]["status"] == "failed");
    CHECK(rows[2]["dataset"] == "ghost");
    CHECK(rows[2].contains("error"));

    const CmdResult csv = run_cli("bench '" + manifest.string() + "' --format csv");
    REQUIRE(csv.exit_code == 0);
    std::istringstream lines(csv.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header.find("wall_ms_median,status,error") != std::string::npos);
}

TEST_CASE("malformed input exits with a data error naming the line") {
    const fs::path bad = g_tmp / "bad.txt";
    spit(bad, "0 1\nnot numbers\n");
    const CmdResult r = run_cli("run '" + bad.string() + "'");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("run").exit_code == 1);
    CHECK(run_cli("run x --algorithm nope").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("--version").exit_code == 0);
    CHECK(run_cli("--help").exit_code == 0);
}

int main(int argc, char** argv) {
    doctest::Context context;
    std::vector<char*> rest;
    for (int i = 0; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg.rfind("--cli=", 0) == 0)
            g_cli = arg.substr(6);
        else if (arg.rfind("--data=", 0) == 0)
            g_data = arg.substr(7);
        else
            rest.push_back(argv[i]);
    }
    if (g_cli.empty() || g_data.empty()) {
        std::fprintf(stderr, "usage: cli_tests --cli=<fpcd binary> --data=<data dir>\n");
        return 1;
    }
    g_tmp = fs::temp_directory_path() /
            ("fpcd_cli_tests_" + std::to_string(static_cast<long>(::getpid())));
    fs::create_directories(g_tmp);
    context.applyCommandLine(static_cast<int>(rest.size()), rest.data());
    const int rc = context.run();
    fs::remove_all(g_tmp);
    return rc;
}
