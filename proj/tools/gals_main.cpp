#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "gals/benchgen.hpp"
#include "gals/engine.hpp"
#include "gals/graph.hpp"
#include "gals/modularity.hpp"
#include "gals/nmi.hpp"
#include "gals/partition.hpp"
#include "gals/rng.hpp"

namespace {

// Flag combinations CLI11 cannot express declaratively.
class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::string fmt(double v) {
    std::ostringstream ss;
    ss << std::setprecision(12) << v;
    return ss.str();
}

std::uint64_t random_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

struct GaOptions {
    int iterations = 500;
    int mu = 80;
    int lambda = 60;
    int trace_every = 1;
    int stagnation = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

void add_ga_options(CLI::App* cmd, GaOptions& opt, CLI::Option*& seed_opt) {
    cmd->add_option("--iterations,-L", opt.iterations,
                    "Generations to evolve")
        ->capture_default_str();
    cmd->add_option("--mu", opt.mu, "Population size")->capture_default_str();
    cmd->add_option("--lambda", opt.lambda, "Offspring per generation")
        ->capture_default_str();
    cmd->add_option("--trace-every", opt.trace_every,
                    "Record the best score every this many generations")
        ->capture_default_str();
    cmd->add_option("--stagnation", opt.stagnation,
                    "Stop after this many generations without improvement");
    seed_opt = cmd->add_option("--seed", opt.seed,
                               "Random seed (default: drawn from the OS)");
}

gals::GaConfig make_config(const GaOptions& opt) {
    gals::GaConfig cfg;
    cfg.iterations = opt.iterations;
    cfg.mu = opt.mu;
    cfg.lambda = opt.lambda;
    cfg.trace_every = opt.trace_every;
    if (opt.stagnation > 0) cfg.stagnation = opt.stagnation;
    cfg.seed = opt.seed_given ? opt.seed : random_seed();
    return cfg;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out.good())
        throw std::invalid_argument("cannot write " + path);
    return out;
}

gals::Partition load_partition(const std::string& path,
                               const gals::Network& net) {
    std::ifstream in(path);
    if (!in.good()) throw gals::ParseError("cannot open " + path);
    try {
        return gals::parse_ground_truth(in, net);
    } catch (const gals::ParseError& e) {
        throw gals::ParseError(path + ": " + e.what());
    }
}

struct DetectOptions {
    std::string network;
    std::string format;
    std::string out_path;
    std::string truth_path;
    GaOptions ga;
    int runs = 1;
    bool json = false;
};

void print_run(const gals::Network& net, const gals::RunResult& res) {
    std::cout << "seed " << res.seed << "\n"
              << "q " << fmt(res.q) << "\n"
              << "communities " << res.best.community_count() << "\n"
              << "generations " << res.generations << "\n"
              << "elapsed_ms " << fmt(res.elapsed_ms) << "\n";
    (void)net;
}

int run_detect(const DetectOptions& opt) {
    gals::Network net = gals::load_network(opt.network, opt.format);
    gals::GaConfig cfg = make_config(opt.ga);
    gals::RunResult best;
    if (opt.runs == 1) {
        best = gals::run_gals(net, cfg);
        if (opt.json) {
            std::cout << gals::run_result_json(net, best) << "\n";
        } else {
            std::cout << "nodes " << net.node_count() << "\n"
                      << "edges " << net.edge_count() << "\n";
            print_run(net, best);
        }
    } else {
        gals::MultiRunSummary sum = gals::run_many(net, cfg, opt.runs);
        best = sum.runs[static_cast<std::size_t>(sum.best_run)];
        if (opt.json) {
            std::cout << gals::run_result_json(net, best) << "\n";
        } else {
            std::cout << "nodes " << net.node_count() << "\n"
                      << "edges " << net.edge_count() << "\n";
            for (std::size_t i = 0; i < sum.runs.size(); ++i) {
                const gals::RunResult& r = sum.runs[i];
                std::cout << "run " << i << " seed " << r.seed << " q "
                          << fmt(r.q) << " generations " << r.generations
                          << " elapsed_ms " << fmt(r.elapsed_ms) << "\n";
            }
            std::cout << "runs " << opt.runs << "\n"
                      << "mean_q " << fmt(sum.mean_q) << "\n"
                      << "min_q " << fmt(sum.min_q) << "\n"
                      << "max_q " << fmt(sum.max_q) << "\n"
                      << "stddev_q " << fmt(sum.stddev_q) << "\n"
                      << "mean_elapsed_ms " << fmt(sum.mean_elapsed_ms) << "\n"
                      << "best_run " << sum.best_run << "\n"
                      << "best_q " << fmt(best.q) << "\n";
        }
    }
    if (!opt.truth_path.empty()) {
        gals::Partition truth = load_partition(opt.truth_path, net);
        std::cout << "nmi " << fmt(gals::nmi(best.best, truth)) << "\n";
    }
    if (!opt.out_path.empty()) {
        std::ofstream out = open_output(opt.out_path);
        gals::write_partition(out, net, best.best);
    }
    return 0;
}

struct EvalOptions {
    std::string network;
    std::string partition;
    std::string format;
};

int run_eval(const EvalOptions& opt) {
    gals::Network net = gals::load_network(opt.network, opt.format);
    gals::Partition part = load_partition(opt.partition, net);
    std::cout << "nodes " << net.node_count() << "\n"
              << "edges " << net.edge_count() << "\n"
              << "communities " << part.community_count() << "\n"
              << "q " << fmt(gals::modularity_q(net, part)) << "\n";
    return 0;
}

struct NmiOptions {
    std::string network;
    std::string part_a;
    std::string part_b;
    std::string format;
};

int run_nmi(const NmiOptions& opt) {
    gals::Network net = gals::load_network(opt.network, opt.format);
    gals::Partition a = load_partition(opt.part_a, net);
    gals::Partition b = load_partition(opt.part_b, net);
    std::cout << "nmi " << fmt(gals::nmi(a, b)) << "\n";
    return 0;
}

struct GenOptions {
    int groups = 4;
    int group_size = 32;
    double z_in = 0.0;
    double z_out = 0.0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string prefix;
};

int run_gen(const GenOptions& opt) {
    std::uint64_t seed = opt.seed_given ? opt.seed : random_seed();
    gals::RngStream rng(seed);
    gals::NewmanParams params;
    params.groups = opt.groups;
    params.group_size = opt.group_size;
    params.z_in = opt.z_in;
    params.z_out = opt.z_out;
    gals::PlantedGraph planted = gals::newman_graph(params, rng);
    std::string edges_path = opt.prefix + ".edges";
    std::string truth_path = opt.prefix + ".gt";
    {
        std::ofstream out = open_output(edges_path);
        gals::write_edge_list(out, planted.net);
    }
    {
        std::ofstream out = open_output(truth_path);
        gals::write_partition(out, planted.net, planted.truth);
    }
    std::cout << "seed " << seed << "\n"
              << "nodes " << planted.net.node_count() << "\n"
              << "edges " << planted.net.edge_count() << "\n"
              << "communities " << planted.truth.community_count() << "\n"
              << "edges_file " << edges_path << "\n"
              << "truth_file " << truth_path << "\n";
    return 0;
}

struct BenchOptions {
    std::string mode;
    int graphs = 10;
    int runs = 3;
    int z_out_max = 8;
    std::vector<int> sizes = {5, 10, 20, 40};
    GaOptions ga;
    std::string out_path;
};

struct BenchPoint {
    int point;
    gals::NewmanParams params;
};

// One CSV row per (point, graph, run). Graph and run seeds derive from the
// master seed so a whole sweep replays from the seed line alone.
void write_bench_csv(std::ostream& csv, const std::vector<BenchPoint>& points,
                     const BenchOptions& opt, const gals::GaConfig& base) {
    gals::RngStream master(base.seed);
    csv << "point,graph_idx,run_idx,nmi,q,elapsed_ms,n,m\n";
    for (std::size_t p = 0; p < points.size(); ++p) {
        for (int g = 0; g < opt.graphs; ++g) {
            gals::RngStream graph_rng =
                master.substream(p, static_cast<std::uint64_t>(g));
            gals::PlantedGraph planted =
                gals::newman_graph(points[p].params, graph_rng);
            gals::RngStream seed_rng = master.substream(
                p, static_cast<std::uint64_t>(opt.graphs + g));
            for (int r = 0; r < opt.runs; ++r) {
                gals::GaConfig cfg = base;
                cfg.seed = seed_rng.next_u64();
                gals::RunResult res = gals::run_gals(planted.net, cfg);
                csv << points[p].point << "," << g << "," << r << ","
                    << fmt(gals::nmi(res.best, planted.truth)) << ","
                    << fmt(res.q) << "," << fmt(res.elapsed_ms) << ","
                    << planted.net.node_count() << ","
                    << planted.net.edge_count() << "\n";
            }
        }
    }
}

// Aggregates the file as written rather than values still in memory, so the
// summary also validates that the CSV parses back.
void summarize_bench_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("cannot reopen " + path);
    std::string line;
    std::getline(in, line);
    struct Agg {
        int point = 0;
        long long rows = 0;
        double nmi = 0.0, q = 0.0, elapsed = 0.0;
    };
    std::vector<Agg> aggs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (cells.size() != 8)
            throw std::runtime_error("malformed row in " + path + ": " + line);
        int point = std::stoi(cells[0]);
        Agg* agg = nullptr;
        for (Agg& a : aggs)
            if (a.point == point) agg = &a;
        if (agg == nullptr) {
            aggs.push_back(Agg{point, 0, 0.0, 0.0, 0.0});
            agg = &aggs.back();
        }
        agg->rows += 1;
        agg->nmi += std::stod(cells[3]);
        agg->q += std::stod(cells[4]);
        agg->elapsed += std::stod(cells[5]);
    }
    for (const Agg& a : aggs) {
        double k = static_cast<double>(a.rows);
        std::cout << "point " << a.point << " rows " << a.rows << " mean_nmi "
                  << fmt(a.nmi / k) << " mean_q " << fmt(a.q / k)
                  << " mean_elapsed_ms " << fmt(a.elapsed / k) << "\n";
    }
}

int run_bench(const BenchOptions& opt) {
    std::vector<BenchPoint> points;
    if (opt.mode == "accuracy") {
        // Four planted groups of 32 with total expected degree 16; the sweep
        // shifts degree from inside the group to outside it.
        for (int z = 0; z <= opt.z_out_max; ++z) {
            gals::NewmanParams params;
            params.groups = 4;
            params.group_size = 32;
            params.z_in = 16.0 - z;
            params.z_out = z;
            points.push_back(BenchPoint{z, params});
        }
    } else {
        // Growing number of groups at fixed group size and mixing, for
        // runtime-versus-size measurements.
        if (opt.sizes.empty())
            throw UsageError("scaling mode needs at least one --sizes value");
        for (int groups : opt.sizes) {
            gals::NewmanParams params;
            params.groups = groups;
            params.group_size = 100;
            params.z_in = 10.0;
            params.z_out = 6.0;
            points.push_back(BenchPoint{groups, params});
        }
    }
    if (opt.graphs < 1 || opt.runs < 1)
        throw std::invalid_argument("--graphs and --runs must be positive");
    gals::GaConfig base = make_config(opt.ga);
    std::cout << "seed " << base.seed << "\n";
    {
        std::ofstream csv = open_output(opt.out_path);
        write_bench_csv(csv, points, opt, base);
    }
    summarize_bench_csv(opt.out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community detection by evolutionary modularity search"};
    app.require_subcommand(1);

    DetectOptions detect;
    CLI::App* detect_cmd = app.add_subcommand(
        "detect", "Find a high-modularity partition of a network");
    detect_cmd->add_option("network", detect.network, "Graph file")
        ->required();
    detect_cmd
        ->add_option("--format", detect.format,
                     "Force the input format instead of using the extension")
        ->check(CLI::IsMember({"edgelist", "gml"}));
    CLI::Option* detect_seed = nullptr;
    add_ga_options(detect_cmd, detect.ga, detect_seed);
    detect_cmd->add_option("--runs", detect.runs, "Independent restarts")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    detect_cmd->add_option("--out", detect.out_path,
                           "Write the best partition to this file");
    CLI::Option* detect_json = detect_cmd->add_flag(
        "--json", detect.json, "Print the best run as JSON and nothing else");
    CLI::Option* detect_truth = detect_cmd->add_option(
        "--ground-truth", detect.truth_path,
        "Score the best partition against this reference partition");
    detect_json->excludes(detect_truth);

    EvalOptions eval;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Score an existing partition of a network");
    eval_cmd->add_option("network", eval.network, "Graph file")->required();
    eval_cmd->add_option("partition", eval.partition, "Partition file")
        ->required();
    eval_cmd
        ->add_option("--format", eval.format,
                     "Force the input format instead of using the extension")
        ->check(CLI::IsMember({"edgelist", "gml"}));

    NmiOptions nmi;
    CLI::App* nmi_cmd = app.add_subcommand(
        "nmi", "Compare two partitions of the same network");
    nmi_cmd->add_option("network", nmi.network, "Graph file")->required();
    nmi_cmd->add_option("partition_a", nmi.part_a, "First partition file")
        ->required();
    nmi_cmd->add_option("partition_b", nmi.part_b, "Second partition file")
        ->required();
    nmi_cmd
        ->add_option("--format", nmi.format,
                     "Force the input format instead of using the extension")
        ->check(CLI::IsMember({"edgelist", "gml"}));

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand(
        "gen", "Generate a planted-partition benchmark graph");
    gen_cmd->add_option("--groups", gen.groups, "Number of planted groups")
        ->capture_default_str();
    gen_cmd->add_option("--group-size", gen.group_size, "Nodes per group")
        ->capture_default_str();
    gen_cmd->add_option("--z-in", gen.z_in, "Expected in-group degree")
        ->required();
    gen_cmd->add_option("--z-out", gen.z_out, "Expected cross-group degree")
        ->required();
    CLI::Option* gen_seed = gen_cmd->add_option(
        "--seed", gen.seed, "Random seed (default: drawn from the OS)");
    gen_cmd
        ->add_option("--out", gen.prefix,
                     "Output prefix; writes PREFIX.edges and PREFIX.gt")
        ->required();

    BenchOptions bench;
    CLI::App* bench_cmd = app.add_subcommand(
        "bench", "Sweep planted benchmarks and write per-run results as CSV");
    bench_cmd->add_option("--mode", bench.mode, "Benchmark family to sweep")
        ->required()
        ->check(CLI::IsMember({"accuracy", "scaling"}));
    bench_cmd->add_option("--graphs", bench.graphs, "Graphs per sweep point")
        ->capture_default_str();
    bench_cmd->add_option("--runs", bench.runs, "Detector runs per graph")
        ->capture_default_str();
    bench_cmd
        ->add_option("--z-out-max", bench.z_out_max,
                     "Accuracy mode: sweep cross-group degree 0..this")
        ->capture_default_str();
    bench_cmd
        ->add_option("--sizes", bench.sizes,
                     "Scaling mode: comma-separated group counts")
        ->delimiter(',');
    CLI::Option* bench_seed = nullptr;
    add_ga_options(bench_cmd, bench.ga, bench_seed);
    bench_cmd->add_option("--out", bench.out_path, "CSV output path")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    detect.ga.seed_given = detect_seed->count() > 0;
    gen.seed_given = gen_seed->count() > 0;
    bench.ga.seed_given = bench_seed->count() > 0;

    try {
        if (*detect_cmd) return run_detect(detect);
        if (*eval_cmd) return run_eval(eval);
        if (*nmi_cmd) return run_nmi(nmi);
        if (*gen_cmd) return run_gen(gen);
        if (*bench_cmd) return run_bench(bench);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const gals::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
