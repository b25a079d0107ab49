#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpcd/edge_list.hpp"
#include "fpcd/fast_fp.hpp"
#include "fpcd/fp_greedy.hpp"
#include "fpcd/generators.hpp"
#include "fpcd/oracle.hpp"
#include "fpcd/partition_io.hpp"
#include "fpcd/quality.hpp"
#include "fpcd/report.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

double round4(double v) { return std::round(v * 10000.0) / 10000.0; }

std::string dataset_name(const std::string& input) {
    if (input == "-") return "stdin";
    return std::filesystem::path(input).stem().string();
}

fpcd::LoadedGraph load_input(const std::string& input) {
    if (input == "-") return fpcd::load_edge_list(std::cin);
    return fpcd::load_edge_list_file(input);
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
        return kExitOk;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << '\n';
        return kExitData;
    }
    f << text << '\n';
    f.flush();
    if (!f) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return kExitData;
    }
    return kExitOk;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_fixed(double v, int digits) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(digits);
    out << v;
    return out.str();
}

ordered_json report_to_json(const fpcd::RunReport& r) {
    ordered_json params;
    if (r.algorithm == "fastfp") {
        params["threshold"] = r.threshold;
    } else {
        params["order"] = r.sweep_order;
        params["seed"] = r.seed;
    }
    ordered_json sizes = ordered_json::array();
    for (auto [size, count] : r.size_histogram) sizes.push_back({size, count});
    ordered_json j;
    j["dataset"] = r.dataset;
    j["algorithm"] = r.algorithm;
    j["parameters"] = params;
    j["nodes"] = r.nodes;
    j["edges"] = r.edges;
    j["fp"] = round4(r.fp_score.value());
    j["fp_exact"] = {{"correct", r.fp_score.correct}, {"total", r.fp_score.total}};
    j["modularity"] = r.modularity_score;
    j["modules"] = r.modules;
    j["module_sizes"] = sizes;
    j["wall_ms"] = r.wall_ms;
    return j;
}

const char* kRunCsvHeader =
    "dataset,algorithm,threshold,order,seed,nodes,edges,fp,fp_correct,fp_total,modularity,"
    "modules,wall_ms";

std::string report_to_csv(const fpcd::RunReport& r) {
    std::ostringstream out;
    out << csv_quote(r.dataset) << ',' << r.algorithm << ',';
    if (r.algorithm == "fastfp")
        out << r.threshold << ",,,";
    else
        out << ',' << r.sweep_order << ',' << r.seed << ',';
    out << r.nodes << ',' << r.edges << ',' << format_fixed(r.fp_score.value(), 4) << ','
        << r.fp_score.correct << ',' << r.fp_score.total << ','
        << format_fixed(r.modularity_score, 4) << ',' << r.modules << ','
        << format_fixed(r.wall_ms, 3);
    return out.str();
}

// ---------------------------------------------------------------------------
// run

struct RunArgs {
    std::string input;
    std::string algorithm = "fpgreed";
    std::int64_t threshold = 3;
    std::string order = "ascending";
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "json";
    std::string partition_out;
};

fpcd::RunReport run_fpgreed(const fpcd::LoadedGraph& lg, const std::string& order,
                            std::uint64_t seed, fpcd::Partition* out_partition) {
    fpcd::FpGreedyOptions opt;
    opt.order = order == "random" ? fpcd::SweepOrder::Random : fpcd::SweepOrder::Ascending;
    opt.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    auto result = fpcd::fp_greedy(lg.graph, opt);
    const auto t1 = std::chrono::steady_clock::now();
    fpcd::RunReport r;
    r.algorithm = "fpgreed";
    r.sweep_order = order;
    r.seed = seed;
    r.nodes = lg.graph.node_count();
    r.edges = static_cast<std::int64_t>(lg.graph.edge_count());
    r.fp_score = result.stats.final_fp;
    r.modularity_score =
        lg.graph.edge_count() ? fpcd::modularity(lg.graph, result.partition) : 0.0;
    r.modules = static_cast<std::int64_t>(result.partition.community_count());
    r.size_histogram = fpcd::module_size_histogram(result.partition);
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (out_partition) *out_partition = std::move(result.partition);
    return r;
}

fpcd::RunReport run_fastfp(const fpcd::LoadedGraph& lg, std::int64_t threshold,
                           fpcd::Partition* out_partition) {
    fpcd::FastFpOptions opt;
    opt.threshold = threshold;
    auto result = fpcd::fast_fp(lg.graph, opt);
    if (out_partition) *out_partition = std::move(result.partition);
    return std::move(result.report);
}

std::string partition_path(const RunArgs& a, const std::string& alg, bool both) {
    if (!a.partition_out.empty()) return both ? a.partition_out + "." + alg : a.partition_out;
    if (a.input == "-") return {};  // stdin input: write only on request
    return a.input + "." + alg + ".part";
}

int cmd_run(const RunArgs& a) {
    const fpcd::LoadedGraph lg = load_input(a.input);
    const bool both = a.algorithm == "both";
    std::vector<std::string> algorithms =
        both ? std::vector<std::string>{"fpgreed", "fastfp"}
             : std::vector<std::string>{a.algorithm};
    std::vector<fpcd::RunReport> reports;
    for (const std::string& alg : algorithms) {
        fpcd::Partition p;
        fpcd::RunReport r = alg == "fpgreed" ? run_fpgreed(lg, a.order, a.seed, &p)
                                             : run_fastfp(lg, a.threshold, &p);
        r.dataset = dataset_name(a.input);
        const std::string ppath = partition_path(a, alg, both);
        if (!ppath.empty()) fpcd::write_partition_file(ppath, lg, p);
        reports.push_back(std::move(r));
    }
    if (a.format == "csv") {
        std::string text = kRunCsvHeader;
        for (const auto& r : reports) text += "\n" + report_to_csv(r);
        return emit(text, a.out);
    }
    if (reports.size() == 1) return emit(report_to_json(reports.front()).dump(2), a.out);
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    return emit(arr.dump(2), a.out);
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const std::string& topology, std::uint32_t a, std::uint32_t b,
            const std::string& out_path) {
    fpcd::Graph g;
    try {
        g = topology == "ring" ? fpcd::ring_of_cliques(a, b) : fpcd::bridged_cliques(a, b);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::ostringstream text;
    for (auto [u, v] : g.edges()) text << u << ' ' << v << '\n';
    if (out_path.empty()) {
        std::cout << text.str();
        return kExitOk;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << '\n';
        return kExitData;
    }
    f << text.str();
    f.flush();
    return f ? kExitOk : kExitData;
}

// ---------------------------------------------------------------------------
// score

int cmd_score(const std::string& input, const std::string& partition, const std::string& format,
              const std::string& out) {
    const fpcd::LoadedGraph lg = load_input(input);
    const fpcd::Partition p = partition == "-" ? fpcd::read_partition(std::cin, lg)
                                               : fpcd::read_partition_file(partition, lg);
    const fpcd::FpScore score = fpcd::fp(lg.graph, p);
    const double mod = lg.graph.edge_count() ? fpcd::modularity(lg.graph, p) : 0.0;
    const auto sizes = fpcd::module_size_histogram(p);
    if (format == "csv") {
        std::ostringstream text;
        text << "dataset,nodes,edges,fp,fp_correct,fp_total,modularity,modules\n"
             << csv_quote(dataset_name(input)) << ',' << lg.graph.node_count() << ','
             << lg.graph.edge_count() << ',' << format_fixed(score.value(), 4) << ','
             << score.correct << ',' << score.total << ',' << format_fixed(mod, 4) << ','
             << p.community_count();
        return emit(text.str(), out);
    }
    ordered_json j;
    j["dataset"] = dataset_name(input);
    j["nodes"] = lg.graph.node_count();
    j["edges"] = lg.graph.edge_count();
    j["fp"] = round4(score.value());
    j["fp_exact"] = {{"correct", score.correct}, {"total", score.total}};
    j["modularity"] = mod;
    j["modules"] = p.community_count();
    ordered_json hist = ordered_json::array();
    for (auto [size, count] : sizes) hist.push_back({size, count});
    j["module_sizes"] = hist;
    return emit(j.dump(2), out);
}

// ---------------------------------------------------------------------------
// oracle

int cmd_oracle(const std::string& input, std::size_t max_n, const std::string& out) {
    const fpcd::LoadedGraph lg = load_input(input);
    const fpcd::OracleResult res = fpcd::exhaustive_best_fp(lg.graph, max_n);
    ordered_json j;
    j["dataset"] = dataset_name(input);
    j["nodes"] = lg.graph.node_count();
    j["edges"] = lg.graph.edge_count();
    j["best_fp"] = round4(res.best_fp.value());
    j["best_fp_exact"] = {{"correct", res.best_fp.correct}, {"total", res.best_fp.total}};
    j["partitions_enumerated"] = res.partitions_enumerated;
    j["optimum_count"] = res.best_partitions.size();
    ordered_json parts = ordered_json::array();
    for (const auto& partition : res.best_partitions) {
        ordered_json blocks = ordered_json::array();
        for (const auto& block : partition) {
            ordered_json labels = ordered_json::array();
            for (fpcd::NodeId u : block) labels.push_back(lg.labels[u]);
            blocks.push_back(labels);
        }
        parts.push_back(blocks);
    }
    j["best_partitions"] = parts;
    return emit(j.dump(2), out);
}

// ---------------------------------------------------------------------------
// bench

struct BenchTask {
    std::string name;
    std::filesystem::path path;
    std::string algorithm;
    std::int64_t threshold = 3;
    std::string order = "ascending";
    std::uint64_t seed = 0;
    int repetitions = 1;
};

ordered_json run_bench_task(const BenchTask& task) {
    try {
        const fpcd::LoadedGraph lg = fpcd::load_edge_list_file(task.path);
        std::vector<double> times;
        fpcd::RunReport report;
        for (int rep = 0; rep < task.repetitions; ++rep) {
            fpcd::RunReport r = task.algorithm == "fpgreed"
                                    ? run_fpgreed(lg, task.order, task.seed, nullptr)
                                    : run_fastfp(lg, task.threshold, nullptr);
            times.push_back(r.wall_ms);
            if (rep == 0) report = std::move(r);
        }
        std::sort(times.begin(), times.end());
        const std::size_t mid = times.size() / 2;
        const double median = times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2.0;
        report.dataset = task.name;
        ordered_json row = report_to_json(report);
        row.erase("wall_ms");
        row["wall_ms_median"] = median;
        row["repetitions"] = task.repetitions;
        row["status"] = "ok";
        return row;
    } catch (const std::exception& e) {
        ordered_json row;
        row["dataset"] = task.name;
        row["algorithm"] = task.algorithm;
        row["status"] = "failed";
        row["error"] = e.what();
        return row;
    }
}

std::string bench_row_to_csv(const ordered_json& row) {
    std::ostringstream out;
    if (row["status"] == "failed") {
        out << csv_quote(row["dataset"].get<std::string>()) << ','
            << row["algorithm"].get<std::string>() << ",,,,,,,,,,,,failed,"
            << csv_quote(row["error"].get<std::string>());
        return out.str();
    }
    out << csv_quote(row["dataset"].get<std::string>()) << ','
        << row["algorithm"].get<std::string>() << ',';
    const auto& params = row["parameters"];
    if (params.contains("threshold"))
        out << params["threshold"].get<std::int64_t>() << ",,,";
    else
        out << ',' << params["order"].get<std::string>() << ','
            << params["seed"].get<std::uint64_t>() << ',';
    out << row["nodes"].get<std::int64_t>() << ',' << row["edges"].get<std::int64_t>() << ','
        << format_fixed(row["fp"].get<double>(), 4) << ','
        << row["fp_exact"]["correct"].get<std::int64_t>() << ','
        << row["fp_exact"]["total"].get<std::int64_t>() << ','
        << format_fixed(row["modularity"].get<double>(), 4) << ','
        << row["modules"].get<std::int64_t>() << ','
        << format_fixed(row["wall_ms_median"].get<double>(), 3) << ",ok,";
    return out.str();
}

int cmd_bench(const std::string& manifest_path, int jobs, const std::string& format,
              const std::string& out) {
    std::ifstream in(manifest_path);
    if (!in) throw fpcd::ParseError(0, "cannot open " + manifest_path);
    ordered_json manifest;
    try {
        manifest = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw fpcd::ParseError(0, std::string("manifest: ") + e.what());
    }
    if (!manifest.is_object() || !manifest.contains("datasets") ||
        !manifest["datasets"].is_array())
        throw fpcd::ParseError(0, "manifest: expected an object with a datasets array");
    int repetitions = manifest.value("repetitions", 1);
    if (repetitions < 1) throw fpcd::ParseError(0, "manifest: repetitions must be >= 1");

    const std::filesystem::path base = std::filesystem::path(manifest_path).parent_path();
    std::vector<BenchTask> tasks;
    for (const auto& entry : manifest["datasets"]) {
        if (!entry.is_object() || !entry.contains("path"))
            throw fpcd::ParseError(0, "manifest: every dataset needs a path");
        const auto rel = std::filesystem::path(entry["path"].get<std::string>());
        BenchTask base_task;
        base_task.path = rel.is_absolute() ? rel : base / rel;
        base_task.name = entry.value("name", rel.stem().string());
        base_task.threshold = entry.value("threshold", std::int64_t{3});
        base_task.order = entry.value("order", std::string("ascending"));
        base_task.seed = entry.value("seed", std::uint64_t{0});
        base_task.repetitions = repetitions;
        std::vector<std::string> algorithms =
            entry.value("algorithms", std::vector<std::string>{"fpgreed", "fastfp"});
        for (const auto& alg : algorithms) {
            if (alg != "fpgreed" && alg != "fastfp")
                throw fpcd::ParseError(0, "manifest: unknown algorithm " + alg);
            BenchTask task = base_task;
            task.algorithm = alg;
            tasks.push_back(std::move(task));
        }
    }

    std::vector<ordered_json> rows(tasks.size());
    const int workers = std::min<int>(jobs, static_cast<int>(tasks.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) rows[i] = run_bench_task(tasks[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    rows[i] = run_bench_task(tasks[i]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    if (format == "csv") {
        std::string text =
            "dataset,algorithm,threshold,order,seed,nodes,edges,fp,fp_correct,fp_total,"
            "modularity,modules,wall_ms_median,status,error";
        for (const auto& row : rows) text += "\n" + bench_row_to_csv(row);
        return emit(text, out);
    }
    ordered_json arr = ordered_json::array();
    for (auto& row : rows) arr.push_back(std::move(row));
    return emit(arr.dump(2), out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community detection by greedy optimization of the performance (fp) measure"};
    app.set_version_flag("--version", "fpcd 0.1.0");
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Detect communities in an edge-list graph");
    run->add_option("input", run_args.input, "Edge-list file, or - for stdin")->required();
    run->add_option("--algorithm", run_args.algorithm, "Algorithm to run")
        ->check(CLI::IsMember({"fpgreed", "fastfp", "both"}))
        ->capture_default_str();
    run->add_option("--threshold", run_args.threshold, "Candidate-pair weight threshold (fastfp)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run->add_option("--order", run_args.order, "Node sweep order (fpgreed)")
        ->check(CLI::IsMember({"ascending", "random"}))
        ->capture_default_str();
    run->add_option("--seed", run_args.seed, "Seed for --order random")->capture_default_str();
    run->add_option("--out", run_args.out, "Write the report here instead of stdout");
    run->add_option("--format", run_args.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    run->add_option("--partition-out", run_args.partition_out,
                    "Partition file path (default: <input>.<algorithm>.part)");

    std::uint32_t gen_a = 0, gen_b = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a synthetic clique topology as an edge list");
    gen->require_subcommand(1);
    gen->fallthrough();
    auto* gen_ring = gen->add_subcommand("ring", "Cliques in a cycle, one bridge between neighbors");
    gen_ring->add_option("num_cliques", gen_a, "Number of cliques (>= 3)")->required();
    gen_ring->add_option("clique_size", gen_b, "Nodes per clique (>= 3)")->required();
    auto* gen_bridged =
        gen->add_subcommand("bridged", "Two big and two small cliques joined by four bridges");
    gen_bridged->add_option("big", gen_a, "Size of the two big cliques")->required();
    gen_bridged->add_option("small", gen_b, "Size of the two small cliques (>= 3)")->required();
    gen->add_option("--out", gen_out, "Write the edge list here instead of stdout");

    std::string score_input, score_partition, score_format = "json", score_out;
    auto* score = app.add_subcommand("score", "Score an existing partition of a graph");
    score->add_option("input", score_input, "Edge-list file, or - for stdin")->required();
    score->add_option("partition", score_partition, "Partition file, or - for stdin")->required();
    score->add_option("--format", score_format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    score->add_option("--out", score_out, "Write the report here instead of stdout");

    std::string oracle_input, oracle_out;
    std::size_t oracle_max_n = 12;
    auto* oracle = app.add_subcommand("oracle", "Exhaustively find the best-fp partitions");
    oracle->add_option("input", oracle_input, "Edge-list file, or - for stdin")->required();
    oracle->add_option("--max-n", oracle_max_n, "Refuse graphs larger than this")
        ->capture_default_str();
    oracle->add_option("--out", oracle_out, "Write the report here instead of stdout");

    std::string bench_manifest, bench_format = "json", bench_out;
    int bench_jobs = 1;
    auto* bench = app.add_subcommand("bench", "Run a manifest of datasets and algorithms");
    bench->add_option("manifest", bench_manifest, "JSON manifest path")->required();
    bench->add_option("--jobs", bench_jobs, "Parallel worker count")
        ->check(CLI::Range(1, 1024))
        ->capture_default_str();
    bench->add_option("--format", bench_format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    bench->add_option("--out", bench_out, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(run_args);
        if (gen->parsed())
            return cmd_gen(gen_ring->parsed() ? "ring" : "bridged", gen_a, gen_b, gen_out);
        if (score->parsed()) return cmd_score(score_input, score_partition, score_format, score_out);
        if (oracle->parsed()) return cmd_oracle(oracle_input, oracle_max_n, oracle_out);
        if (bench->parsed()) return cmd_bench(bench_manifest, bench_jobs, bench_format, bench_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
