#pragma once

#include <vector>

#include "treecover/core.hpp"

namespace treecover {

/// Exact pathwidth of a tree under the recursive peel definition:
/// pw(K1) = 0; pw(T) = min k such that some path P of T leaves only
/// components of pathwidth <= k-1.
int pathwidth(const Tree& t);

/// Witness path for the pathwidth value, as a vertex sequence:
/// removing V(P) leaves components of pathwidth <= pathwidth(T)-1.
std::vector<int> peel_path(const Tree& t);

/// Degree-3 subtree H = P u Q where P is a peel path and Q connects r
/// to P. Returned as an edge-id list plus the vertex set. Guarantees:
/// pathwidth(T - V(H)) < pathwidth(T); r in H with deg_H(r) in {1,2};
/// at most one vertex of H has degree 3, and then deg_H(r) = 1.
struct PeelSubtree {
    std::vector<int> edge_ids;
    std::vector<int> vertices;
};
PeelSubtree rooted_peel_subtree(const Tree& t, int r);

/// Largest minimum rooted degree-d covering size over outdegree-Delta
/// rooted trees of pathwidth k, by the exact three-branch recurrence.
long long pi_recurrence(int delta, int d, int k);

/// Closed-form upper estimate ceil((Delta-2)/d + (2/d)ceil((Delta-1)/(d-1)))^k;
/// equality holds whenever Delta == d^2-2d+2 (mod d^2-d).
long long pi_estimate(int delta, int d, int k);

bool is_caterpillar(const Tree& t);

/// Covering of a caterpillar by ceil((Delta-2)/(d-2)) degree-d subtrees
/// (one subtree when Delta <= d): spine plus per-vertex leaf chunks.
SubtreeCover cover_caterpillar(const Tree& t, int d);

/// Outdegree-d rooted covering of size <= pi(Delta, d, k) built by the
/// peel-and-compose induction (Delta = max outdegree, k = pathwidth).
SubtreeCover cover_rooted_pw(const RootedTree& t, int d);

/// Degree-d covering of size <= ceil((Delta-2)/(d-2) * pi(Delta-1, d-1, k-1)):
/// peel path, per-vertex bounded rooted coverings, merge by index.
SubtreeCover cover_unrooted_pw(const Tree& t, int d);

/// For trees whose internal vertices all have degree >= 4:
/// checks pathwidth(T) <= mincover_3(T) and returns both values.
struct PwUpperResult {
    int pathwidth_value;
    long long mincover3;
    bool holds;
};
PwUpperResult pw_upper_via_cover(const Tree& t);

} // namespace treecover
