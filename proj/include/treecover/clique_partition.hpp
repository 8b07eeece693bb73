#pragma once

#include <vector>

#include "treecover/core.hpp"

namespace treecover {

/// Class sizes (n_1..n_k) of a complete multipartite graph.
struct MultipartiteSpec {
    std::vector<long long> class_sizes;

    int classes() const { return static_cast<int>(class_sizes.size()); }
    long long total() const;
    long long max_size() const;
};

/// Vertices are (class, index) pairs; each clique holds at most one vertex
/// per class.
struct CliqueVertex {
    int cls;
    long long index;
    bool operator==(const CliqueVertex&) const = default;
};

struct CliquePartition {
    std::vector<std::vector<CliqueVertex>> cliques;

    int size() const { return static_cast<int>(cliques.size()); }
};

/// Minimum partition of K<n_1..n_k> into (<= d)-cliques, of size exactly
/// max(max_i n_i, ceil(sum/d)), greedy over the d largest classes.
CliquePartition cliques_partition(const MultipartiteSpec& spec, int d);
long long cliques_partition_size(const MultipartiteSpec& spec, int d);

/// Balanced class sizes for the Turan graph K<n;k> (larger classes first).
MultipartiteSpec turan_spec(long long n, int k);

/// Partition of K<n;k> into exactly ceil(n/d) (<= d)-cliques.
CliquePartition turan_partition(long long n, int k, int d);

/// Partition of K<n;k> into at most m (<= p)-cliques plus
/// ceil(max(n-mp,0)/q) (<= q)-cliques; the p-capped cliques are peeled
/// from the p largest classes first. When n <= p (and m >= 1) the result
/// is a single clique.
struct TwoSizePartition {
    std::vector<std::vector<CliqueVertex>> p_cliques;
    std::vector<std::vector<CliqueVertex>> q_cliques;
};
TwoSizePartition two_size_partition(long long n, int k, int p, int q, long long m);

} // namespace treecover
