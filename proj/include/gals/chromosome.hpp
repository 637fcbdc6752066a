#pragma once

#include <vector>

#include "gals/graph.hpp"
#include "gals/partition.hpp"

namespace gals {

// Locus-based adjacency genotype: alleles[i] = j declares an undirected
// link i-j in the genotype graph, and the communities it encodes are that
// graph's connected components. alleles[i] == i is a permitted self-link
// meaning "no out-edge".
struct Chromosome {
    std::vector<int> alleles;

    int size() const { return static_cast<int>(alleles.size()); }
};

// Connected components of the undirected genotype graph {(i, alleles[i])},
// labeled 0..k-1 by first appearance over ascending node id. Union-find,
// effectively linear in n.
Partition decode(const Network& net, const Chromosome& chrom);

// True iff every allele stays on the node itself or one of its neighbors,
// i.e. the genotype graph is a spanning subgraph of net (plus self-links).
bool is_safe(const Chromosome& chrom, const Network& net);

// Nodes no allele points at. A self-link alleles[j] == j counts as pointing
// at j, so it keeps j non-marginal. Mutating a marginal node's allele moves
// that node alone: it can never merge or split other communities. O(n).
std::vector<int> marginal_genes(const Chromosome& chrom);

} // namespace gals
