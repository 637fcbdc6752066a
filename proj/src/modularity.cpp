#include "gals/modularity.hpp"

namespace gals {

namespace {

void check_domain(const Network& net, const Partition& part) {
    if (net.edge_count() <= 0)
        throw std::invalid_argument("modularity undefined on an edgeless network");
    if (part.size() != net.node_count())
        throw std::invalid_argument("partition does not cover the network");
}

} // namespace

double modularity_q(const Network& net, const Partition& part) {
    check_domain(net, part);
    const double m = static_cast<double>(net.edge_count());
    double q = 0.0;
    for (int c = 0; c < part.community_count(); ++c) {
        long long internal_endpoints = 0;
        for (int i : part.members(c))
            for (int j : net.adj(i))
                if (part.label(j) == c) ++internal_endpoints;
        double e_c = internal_endpoints / 2.0;
        double half_degree = part.degree_sum(c) / (2.0 * m);
        q += e_c / m - half_degree * half_degree;
    }
    return q;
}

double local_f(const Network& net, const Partition& part, int i) {
    check_domain(net, part);
    const double two_m = 2.0 * static_cast<double>(net.edge_count());
    int c = part.label(i);
    long long links = 0;
    for (int j : net.adj(i))
        if (part.label(j) == c) ++links;
    return links - net.degree(i) * part.degree_sum(c) / two_m;
}

double delta_q_move(const Network& net, const Partition& part, int i,
                    int new_label) {
    check_domain(net, part);
    if (i < 0 || i >= part.size())
        throw std::invalid_argument("node out of range");
    if (new_label != kSingleton &&
        (new_label < 0 || new_label >= part.community_count()))
        throw std::invalid_argument("label out of range");

    int old_label = part.label(i);
    if (new_label == old_label) return 0.0;

    const double m = static_cast<double>(net.edge_count());
    const double two_m = 2.0 * m;
    const double k_i = net.degree(i);

    long long links_old = 0, links_new = 0;
    for (int j : net.adj(i)) {
        if (part.label(j) == old_label) ++links_old;
        if (new_label != kSingleton && part.label(j) == new_label) ++links_new;
    }
    double f_old = links_old - k_i * part.degree_sum(old_label) / two_m;
    double d_new = new_label == kSingleton
                       ? 0.0
                       : static_cast<double>(part.degree_sum(new_label));
    // The target side is scored with i already inside the community.
    double f_new = links_new - k_i * (d_new + k_i) / two_m;
    return (f_new - f_old) / m;
}

} // namespace gals
