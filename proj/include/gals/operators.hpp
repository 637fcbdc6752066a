#pragma once

#include <vector>

#include "gals/chromosome.hpp"
#include "gals/graph.hpp"
#include "gals/partition.hpp"
#include "gals/rng.hpp"

namespace gals {

// Candidate solution with its decoded partition and cached modularity.
// The cache is kept exact: every operator that edits alleles re-derives
// part and q before the individual is seen by selection.
struct Individual {
    Chromosome chrom;
    Partition part;
    double q;
};

using Population = std::vector<Individual>;

// One chromosome grown by a random walk: the walk visits nodes in a random
// order and each visited node links to a neighbour drawn uniformly from its
// adjacency list. Isolated nodes self-link. The result is always safe.
Chromosome mrw_chromosome(const Network& net, RngStream& rng);

Individual make_individual(const Network& net, Chromosome chrom);

Population mrw_population(const Network& net, int mu, RngStream& rng);

// Gene-wise mix of two parents: each allele comes from parent a when the
// mask bit is 1 and from parent b otherwise. Exposed for testing; the
// random variant draws a fair coin per gene.
Chromosome uniform_crossover(const Chromosome& a, const Chromosome& b,
                             const std::vector<int>& mask);
Chromosome uniform_crossover(const Chromosome& a, const Chromosome& b,
                             RngStream& rng);

// Local search over marginal genes: scans genes in ascending id, and for
// each gene no allele points at, re-links it to the neighbouring community
// with the best local modularity contribution, drawing the concrete allele
// uniformly among that community's members next to the gene. Decoded
// partition and modularity never get worse. Throws std::invalid_argument
// on an unsafe input chromosome.
Individual lsma_mutate(const Network& net, Chromosome chrom, RngStream& rng);

// Keeps the mu best of parents plus offspring by cached q. Ties prefer
// parents, then lower index, so a no-op generation is a no-op population.
Population mu_plus_lambda_select(Population parents, Population offspring,
                                 int mu);

} // namespace gals
