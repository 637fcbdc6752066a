#include "gals/chromosome.hpp"

#include <numeric>

namespace gals {

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

Partition decode(const Network& net, const Chromosome& chrom) {
    const int n = chrom.size();
    if (n != net.node_count())
        throw std::invalid_argument("chromosome does not cover the network");
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < n; ++i) {
        int j = chrom.alleles[i];
        if (j < 0 || j >= n)
            throw std::invalid_argument("allele out of range");
        int a = find_root(parent, i);
        int b = find_root(parent, j);
        if (a != b) parent[b] = a;
    }
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = find_root(parent, i);
    // Partition compacts the root ids by first appearance over ascending i.
    return Partition(net, labels);
}

bool is_safe(const Chromosome& chrom, const Network& net) {
    if (chrom.size() != net.node_count()) return false;
    for (int i = 0; i < chrom.size(); ++i) {
        int j = chrom.alleles[i];
        if (j == i) continue;
        if (j < 0 || j >= net.node_count()) return false;
        if (!net.has_edge(i, j)) return false;
    }
    return true;
}

std::vector<int> marginal_genes(const Chromosome& chrom) {
    const int n = chrom.size();
    std::vector<char> named(n, 0);
    for (int i = 0; i < n; ++i) {
        int j = chrom.alleles[i];
        if (j >= 0 && j < n) named[j] = 1;
    }
    std::vector<int> out;
    for (int j = 0; j < n; ++j)
        if (!named[j]) out.push_back(j);
    return out;
}

} // namespace gals
