#include "gals/engine.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "gals/modularity.hpp"
#include "gals/rng.hpp"
#include "json.hpp"

namespace gals {

namespace {

void validate(const GaConfig& cfg) {
    if (cfg.iterations < 0) throw std::invalid_argument("iterations < 0");
    if (cfg.mu < 1) throw std::invalid_argument("mu < 1");
    if (cfg.lambda < 1) throw std::invalid_argument("lambda < 1");
    if (cfg.trace_every < 1) throw std::invalid_argument("trace_every < 1");
    if (cfg.stagnation && *cfg.stagnation < 1)
        throw std::invalid_argument("stagnation < 1");
}

void check_safe(const Network& net, const Individual& ind, long long& count) {
    ++count;
    if (!is_safe(ind.chrom, net))
        throw std::logic_error("unsafe chromosome produced during the run");
}

} // namespace

RunResult run_gals(const Network& net, const GaConfig& cfg) {
    validate(cfg);
    auto start = std::chrono::steady_clock::now();

    RunResult res;
    res.seed = cfg.seed;
    RngStream master(cfg.seed);

    Population pop;
    pop.reserve(cfg.mu);
    for (int p = 0; p < cfg.mu; ++p) {
        RngStream stream = master.substream(0, p);
        pop.push_back(make_individual(net, mrw_chromosome(net, stream)));
        if (cfg.verify_safety) check_safe(net, pop.back(), res.safety_checks);
    }
    // Rank the initial population so the front is always the incumbent.
    pop = mu_plus_lambda_select(std::move(pop), {}, cfg.mu);

    double best_q = pop[0].q;
    res.trace.push_back({0, best_q});

    int since_improved = 0;
    int gen = 0;
    while (gen < cfg.iterations) {
        ++gen;
        Population offspring;
        offspring.reserve(cfg.lambda);
        for (int j = 0; j < cfg.lambda; ++j) {
            RngStream stream = master.substream(gen, j);
            // Both parents are drawn uniformly and may coincide.
            const Chromosome& pa = pop[stream.uniform_int(cfg.mu)].chrom;
            const Chromosome& pb = pop[stream.uniform_int(cfg.mu)].chrom;
            Chromosome child = uniform_crossover(pa, pb, stream);
            offspring.push_back(lsma_mutate(net, std::move(child), stream));
            if (cfg.verify_safety)
                check_safe(net, offspring.back(), res.safety_checks);
        }
        pop = mu_plus_lambda_select(std::move(pop), std::move(offspring), cfg.mu);

        // Selection sorts best-first, so the front is the incumbent.
        if (pop[0].q > best_q) {
            best_q = pop[0].q;
            since_improved = 0;
        } else {
            ++since_improved;
        }
        if (gen % cfg.trace_every == 0) res.trace.push_back({gen, best_q});
        if (cfg.stagnation && since_improved >= *cfg.stagnation) break;
    }

    res.generations = gen;
    if (res.trace.back().generation != gen) res.trace.push_back({gen, best_q});
    res.best = pop[0].part;
    res.q = pop[0].q;

    auto end = std::chrono::steady_clock::now();
    res.elapsed_ms =
        std::chrono::duration<double, std::milli>(end - start).count();
    return res;
}

MultiRunSummary run_many(const Network& net, const GaConfig& cfg, int runs) {
    if (runs < 1) throw std::invalid_argument("runs < 1");
    MultiRunSummary sum;
    sum.runs.reserve(runs);
    for (int r = 0; r < runs; ++r) {
        GaConfig one = cfg;
        one.seed = cfg.seed + static_cast<std::uint64_t>(r);
        sum.runs.push_back(run_gals(net, one));
    }

    sum.min_q = sum.max_q = sum.runs[0].q;
    sum.best_run = 0;
    double total_q = 0.0, total_ms = 0.0;
    for (int r = 0; r < runs; ++r) {
        double q = sum.runs[r].q;
        total_q += q;
        total_ms += sum.runs[r].elapsed_ms;
        sum.min_q = std::min(sum.min_q, q);
        if (q > sum.max_q) {
            sum.max_q = q;
            sum.best_run = r;
        }
    }
    sum.mean_q = total_q / runs;
    sum.mean_elapsed_ms = total_ms / runs;
    double var = 0.0;
    for (const RunResult& run : sum.runs)
        var += (run.q - sum.mean_q) * (run.q - sum.mean_q);
    sum.stddev_q = std::sqrt(var / runs);
    return sum;
}

std::string run_result_json(const Network& net, const RunResult& res) {
    nlohmann::json doc;
    doc["q"] = res.q;
    nlohmann::json comms = nlohmann::json::array();
    for (int c = 0; c < res.best.community_count(); ++c) {
        nlohmann::json members = nlohmann::json::array();
        for (int i : res.best.members(c)) members.push_back(net.name(i));
        comms.push_back(std::move(members));
    }
    doc["communities"] = std::move(comms);
    nlohmann::json trace = nlohmann::json::array();
    for (const TracePoint& p : res.trace)
        trace.push_back({{"generation", p.generation}, {"best_q", p.best_q}});
    doc["trace"] = std::move(trace);
    doc["seed"] = res.seed;
    doc["elapsed_ms"] = res.elapsed_ms;
    return doc.dump(2);
}

} // namespace gals
