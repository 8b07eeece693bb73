#pragma once

#include <vector>

#include "treecover/core.hpp"

namespace treecover {

int leaf_count(const Tree& t);

/// Number of even-even edges: edges vw where both components of T - vw
/// contain an even number of leaves of T.
long long even_even_count(const Tree& t);

struct PathCoverResult {
    SubtreeCover cover;   // kind = covering, every part a path
    long long total_edges;
    long long ee_count;
};

/// Covering by exactly ceil(l/2) paths. For even l this is the edge-total
/// optimal covering (n - 1 + ee(T) edges); for odd l one part is a pendant
/// path and the rest cover the remainder optimally.
PathCoverResult min_path_cover(const Tree& t);

/// The even-leaf algorithm alone; rejects odd leaf counts.
/// Doubles every even-even edge, pairs edge copies at every vertex across
/// distinct branches, and traces the paired sequences into paths.
PathCoverResult min_path_cover_even(const Tree& t);

/// The guaranteed-achievable total 2n - 2 - l over all coverings by
/// ceil(l/2) paths.
long long cover_edge_budget(const Tree& t);

/// All vertices v such that some covering by ceil(l/2) paths has v on
/// every path: exactly those where every component of T - v holds at most
/// ceil(l/2) leaves of T.
std::vector<int> centroid_set(const Tree& t);

/// Union of all leafy paths between pairs of S (S a set of at least two
/// leaves), as edge ids. The span has exactly |S| leaves.
std::vector<int> span_of_leaves(const Tree& t, const std::vector<int>& s);

/// Covering by exactly ceil(l/d) subtrees, each with at most d leaves.
SubtreeCover cover_few_leaves(const Tree& t, int d);

} // namespace treecover
