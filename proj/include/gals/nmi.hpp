#pragma once

#include <array>
#include <vector>

#include "gals/partition.hpp"

namespace gals {

// Sparse confusion counts between two partitions of the same node set.
struct ConfusionTable {
    int n = 0;
    std::vector<long long> row_sums;
    std::vector<long long> col_sums;
    // (row, col, count) for nonzero cells only.
    std::vector<std::array<long long, 3>> cells;
};

ConfusionTable confusion_table(const Partition& a, const Partition& b);

// Normalized mutual information, natural log convention:
//   -2 sum_xy N_xy ln(N_xy n / (N_x N_y))
//   / (sum_x N_x ln(N_x / n) + sum_y N_y ln(N_y / n)).
// Identical partitions give 1, including the all-one-community pair; when
// exactly one side is degenerate (zero entropy) the result is 0. Exactly
// symmetric in its arguments. Throws std::invalid_argument on size
// mismatch or empty input.
double nmi(const Partition& a, const Partition& b);

} // namespace gals
