#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gals/graph.hpp"

namespace gals {

// A k-way partition of a Network's nodes, with per-community membership and
// degree sums cached so local modularity terms are O(community size).
//
// Invariants: every node has exactly one label in 0..k-1, communities are
// non-empty, and degree_sum(c) == sum of degrees of the members of c.
class Partition {
public:
    Partition() = default;
    // Builds the caches from a label vector (labels may be arbitrary ints;
    // they are compacted to 0..k-1 by first appearance).
    Partition(const Network& net, const std::vector<int>& labels);

    int label(int i) const { return labels_[i]; }
    int community_count() const { return static_cast<int>(members_.size()); }
    const std::vector<int>& members(int c) const { return members_[c]; }
    long long degree_sum(int c) const { return degree_sum_[c]; }
    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }

    // Reassigns node i to new_label, or to a fresh singleton community when
    // new_label is kSingleton. An emptied community is removed by swapping
    // the last community into its slot, so labels stay compact. O(k_i)
    // amortized. Throws std::invalid_argument on invalid node or label.
    void move_node(const Network& net, int i, int new_label);

    static constexpr int kSingleton = -1;

private:
    std::vector<int> labels_;
    std::vector<std::vector<int>> members_;
    std::vector<long long> degree_sum_;
    std::vector<int> pos_; // index of node i inside members_[labels_[i]]
};

// Namespace-level spelling of the fresh-singleton destination.
inline constexpr int kSingleton = Partition::kSingleton;

// Value-semantics wrapper around Partition::move_node.
Partition apply_move(const Network& net, Partition part, int i, int new_label);

// Reads "node_token community_token" lines covering every node of net;
// community ids are assigned 0..k-1 by first appearance. Throws ParseError
// on unknown tokens, duplicate node lines, or missing nodes.
Partition parse_ground_truth(std::istream& in, const Network& net);

// Serialization in the same "node_token community_id" format
// parse_ground_truth reads.
void write_partition(std::ostream& out, const Network& net, const Partition& part);

// JSON form: {"communities": [[tokens...], ...], "q": <q>}.
std::string partition_json(const Network& net, const Partition& part, double q);

} // namespace gals
