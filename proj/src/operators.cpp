#include "gals/operators.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "gals/modularity.hpp"

namespace gals {

Chromosome mrw_chromosome(const Network& net, RngStream& rng) {
    const int n = net.node_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.uniform_int(i + 1)]);

    Chromosome chrom;
    chrom.alleles.assign(n, 0);
    for (int v : order) {
        const std::vector<int>& nbrs = net.adj(v);
        chrom.alleles[v] =
            nbrs.empty() ? v : nbrs[rng.uniform_int(static_cast<int>(nbrs.size()))];
    }
    return chrom;
}

Individual make_individual(const Network& net, Chromosome chrom) {
    Partition part = decode(net, chrom);
    double q = modularity_q(net, part);
    return Individual{std::move(chrom), std::move(part), q};
}

Population mrw_population(const Network& net, int mu, RngStream& rng) {
    if (mu < 1) throw std::invalid_argument("population needs mu >= 1");
    Population pop;
    pop.reserve(mu);
    for (int p = 0; p < mu; ++p)
        pop.push_back(make_individual(net, mrw_chromosome(net, rng)));
    return pop;
}

Chromosome uniform_crossover(const Chromosome& a, const Chromosome& b,
                             const std::vector<int>& mask) {
    if (a.size() != b.size())
        throw std::invalid_argument("parents differ in length");
    if (static_cast<int>(mask.size()) != a.size())
        throw std::invalid_argument("mask does not cover the chromosome");
    Chromosome child;
    child.alleles.resize(a.alleles.size());
    for (int g = 0; g < a.size(); ++g)
        child.alleles[g] = mask[g] ? a.alleles[g] : b.alleles[g];
    return child;
}

Chromosome uniform_crossover(const Chromosome& a, const Chromosome& b,
                             RngStream& rng) {
    if (a.size() != b.size())
        throw std::invalid_argument("parents differ in length");
    Chromosome child;
    child.alleles.resize(a.alleles.size());
    for (int g = 0; g < a.size(); ++g)
        child.alleles[g] = rng.coin() ? a.alleles[g] : b.alleles[g];
    return child;
}

Individual lsma_mutate(const Network& net, Chromosome chrom, RngStream& rng) {
    if (!is_safe(chrom, net))
        throw std::invalid_argument("unsafe chromosome");
    const int n = chrom.size();
    Partition part = decode(net, chrom);
    const double two_m = 2.0 * static_cast<double>(net.edge_count());

    // Pointer counts; a gene is marginal while its count is zero. Counts
    // are maintained through the scan so each gene sees the current state.
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i) ++indeg[chrom.alleles[i]];

    std::vector<int> links(part.community_count(), 0);
    std::vector<int> cand;
    std::vector<int> pool;

    for (int g = 0; g < n; ++g) {
        if (indeg[g] != 0) continue;
        // Marginal: g is a leaf of the genotype graph, so re-linking it
        // moves g alone and the community count stays fixed. Its allele is
        // never a self-link here (that would make indeg[g] > 0), so its
        // community keeps at least one other member and no label vanishes.
        const std::vector<int>& nbrs = net.adj(g);
        const int cur = part.label(g);
        const double k_g = net.degree(g);

        cand.clear();
        for (int v : nbrs) {
            int lab = part.label(v);
            if (links[lab] == 0) cand.push_back(lab);
            ++links[lab];
        }
        if (links[cur] == 0) cand.push_back(cur);

        double best_f = -std::numeric_limits<double>::infinity();
        int winner = cur;
        for (int lab : cand) {
            double d = static_cast<double>(part.degree_sum(lab));
            if (lab != cur) d += k_g;
            double f = links[lab] - k_g * d / two_m;
            if (f > best_f) {
                best_f = f;
                winner = lab;
            }
        }

        pool.clear();
        for (int v : nbrs)
            if (part.label(v) == winner) pool.push_back(v);
        for (int lab : cand) links[lab] = 0;
        if (pool.empty())
            throw std::logic_error("marginal gene with no candidate allele");

        int pick = pool[rng.uniform_int(static_cast<int>(pool.size()))];
        int old = chrom.alleles[g];
        if (pick != old) {
            chrom.alleles[g] = pick;
            --indeg[old];
            ++indeg[pick];
        }
        if (winner != cur) part.move_node(net, g, winner);
    }

    // Rebuilding renumbers communities by first appearance, so the cached
    // partition matches a fresh decode of the mutated chromosome exactly.
    Partition canonical(net, part.labels());
    double q = modularity_q(net, canonical);
    return Individual{std::move(chrom), std::move(canonical), q};
}

Population mu_plus_lambda_select(Population parents, Population offspring,
                                 int mu) {
    const int total = static_cast<int>(parents.size() + offspring.size());
    if (mu < 1 || mu > total)
        throw std::invalid_argument("selection needs 1 <= mu <= parents + offspring");

    std::vector<Individual*> ranked;
    ranked.reserve(total);
    for (Individual& ind : parents) ranked.push_back(&ind);
    for (Individual& ind : offspring) ranked.push_back(&ind);
    // Stable ranking: equal scores keep parents ahead of offspring and
    // earlier individuals ahead of later ones.
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const Individual* a, const Individual* b) {
                         return a->q > b->q;
                     });

    Population kept;
    kept.reserve(mu);
    for (int i = 0; i < mu; ++i) kept.push_back(std::move(*ranked[i]));
    return kept;
}

} // namespace gals
