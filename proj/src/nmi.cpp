#include "gals/nmi.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gals {

ConfusionTable confusion_table(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("partitions cover different node sets");
    if (a.size() == 0) throw std::invalid_argument("empty partitions");
    ConfusionTable t;
    t.n = a.size();
    t.row_sums.assign(a.community_count(), 0);
    t.col_sums.assign(b.community_count(), 0);
    std::map<std::pair<int, int>, long long> cells;
    for (int i = 0; i < t.n; ++i) {
        ++t.row_sums[a.label(i)];
        ++t.col_sums[b.label(i)];
        ++cells[{a.label(i), b.label(i)}];
    }
    t.cells.reserve(cells.size());
    for (const auto& [key, count] : cells)
        t.cells.push_back({key.first, key.second, count});
    return t;
}

namespace {

// Order-independent sum: identical term multisets give bit-identical
// results, which makes the metric exactly symmetric and exactly invariant
// under label renaming.
double stable_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double t : terms) sum += t;
    return sum;
}

} // namespace

double nmi(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("partitions cover different node sets");
    if (a.size() == 0) throw std::invalid_argument("empty partitions");
    // First-appearance labels are canonical, so identical groupings have
    // identical label vectors.
    if (a.labels() == b.labels()) return 1.0;

    ConfusionTable t = confusion_table(a, b);
    const double n = static_cast<double>(t.n);

    std::vector<double> joint_terms;
    joint_terms.reserve(t.cells.size());
    for (const auto& cell : t.cells) {
        double count = static_cast<double>(cell[2]);
        double expected = static_cast<double>(t.row_sums[cell[0]]) *
                          static_cast<double>(t.col_sums[cell[1]]);
        joint_terms.push_back(count * std::log(count * n / expected));
    }
    double numerator = -2.0 * stable_sum(joint_terms);

    std::vector<double> row_terms, col_terms;
    row_terms.reserve(t.row_sums.size());
    col_terms.reserve(t.col_sums.size());
    for (long long r : t.row_sums)
        row_terms.push_back(r * std::log(r / n));
    for (long long c : t.col_sums)
        col_terms.push_back(c * std::log(c / n));
    double denominator = stable_sum(row_terms) + stable_sum(col_terms);

    // A one-community side has zero entropy; against a different partition
    // that is zero shared information.
    if (denominator == 0.0) return 0.0;
    double value = numerator / denominator;
    return std::min(1.0, std::max(0.0, value));
}

} // namespace gals
