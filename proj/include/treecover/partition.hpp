#pragma once

#include <vector>

#include "treecover/core.hpp"

namespace treecover {

/// Degree statistics behind the minimum-partition formula: n_i counts the
/// vertices with ceil(deg(v)/d) = (deg(v)+i)/d, i in [0, d-1].
struct PartitionStats {
    std::vector<long long> n_i;
    std::vector<long long> degree_histogram;
};
PartitionStats partition_stats(const Tree& t, int d);

/// Minimum number of degree-d subtrees partitioning E(T):
/// 1 + sum_v (ceil(deg(v)/d) - 1). Also evaluates the equivalent
/// 1 + 2(n-1)/d - n + sum_i i*n_i/d in exact arithmetic and checks both
/// agree.
long long minpart_size(const Tree& t, int d);

/// A minimum partition into degree-d subtrees, built top-down from the
/// root: at each vertex the incoming part absorbs up to d-1 child edges,
/// the rest are chunked into stars of at most d edges in neighbor-id order.
SubtreeCover minpart_partition(const Tree& t, int d);

/// A minimum partition containing the given degree-d maximal subtree as a
/// part. seed_edges must induce a connected subtree X with
/// deg_X(v) = min(d, deg_T(v)) for every vertex of X.
SubtreeCover minpart_with_seed(const Tree& t, int d, const std::vector<int>& seed_edges);

} // namespace treecover
