#pragma once

#include "gals/graph.hpp"
#include "gals/partition.hpp"

namespace gals {

// Newman-Girvan modularity of a partition, computed from community
// aggregates: Q = sum_c [ e_c/m - (d_c/2m)^2 ] with e_c the within-community
// edge count and d_c the community degree sum. Identical to the pairwise
// double sum on simple graphs, but O(m + k). Throws std::invalid_argument
// when m = 0 (Q undefined) or the partition does not cover the network.
double modularity_q(const Network& net, const Partition& part);

// Node i's local objective over its own community c:
//   f_i = sum_{j in c} (A_ij - k_i k_j / 2m) = links(i,c) - k_i d_c / 2m.
// The j = i term (-k_i^2/2m) is included via d_c. 2m Q = sum_i f_i.
double local_f(const Network& net, const Partition& part, int i);

// Exact modularity change for moving node i alone to new_label
// (Partition::kSingleton detaches i into a fresh community):
//   dQ = (f_i_new - f_i_old) / m,
// where f_i_new is evaluated with i added to the target community. Moving i
// to its current label returns 0. O(k_i).
double delta_q_move(const Network& net, const Partition& part, int i, int new_label);

} // namespace gals
