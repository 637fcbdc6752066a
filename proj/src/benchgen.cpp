#include "gals/benchgen.hpp"

#include <stdexcept>
#include <vector>

namespace gals {

PlantedGraph newman_graph(const NewmanParams& params, RngStream& rng) {
    if (params.groups < 2) throw std::invalid_argument("need at least 2 groups");
    if (params.group_size < 2)
        throw std::invalid_argument("need group_size >= 2");
    if (params.z_in < 0.0 || params.z_out < 0.0)
        throw std::invalid_argument("negative expected degree");
    const double p_in = params.z_in / (params.group_size - 1);
    const double p_out =
        params.z_out /
        (static_cast<double>(params.group_size) * (params.groups - 1));
    if (p_in > 1.0)
        throw std::invalid_argument("z_in exceeds the in-group capacity");
    if (p_out > 1.0)
        throw std::invalid_argument("z_out exceeds the cross-group capacity");

    const int n = params.groups * params.group_size;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i / params.group_size;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double p = labels[i] == labels[j] ? p_in : p_out;
            if (rng.uniform01() < p) edges.emplace_back(i, j);
        }

    Network net(n, std::move(edges), {});
    Partition truth(net, labels);
    return PlantedGraph{std::move(net), std::move(truth)};
}

} // namespace gals
