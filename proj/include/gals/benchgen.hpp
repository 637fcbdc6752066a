#pragma once

#include <utility>

#include "gals/graph.hpp"
#include "gals/partition.hpp"
#include "gals/rng.hpp"

namespace gals {

// Planted-partition graph: `groups` groups of `group_size` nodes; each
// in-group pair gets an edge with probability z_in / (group_size - 1) and
// each cross-group pair with probability z_out / (group_size * (groups - 1)),
// so expected in-group and cross-group degrees are z_in and z_out.
struct NewmanParams {
    int groups = 4;
    int group_size = 32;
    double z_in = 0.0;
    double z_out = 0.0;
};

struct PlantedGraph {
    Network net;
    Partition truth;
};

// Throws std::invalid_argument when a probability leaves [0, 1] or the
// sizes are degenerate. Isolated vertices are kept.
PlantedGraph newman_graph(const NewmanParams& params, RngStream& rng);

} // namespace gals
