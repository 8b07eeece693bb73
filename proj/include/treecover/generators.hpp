#pragma once

#include <cstdint>
#include <vector>

#include "treecover/core.hpp"

namespace treecover {

/// Guard for the exponential-size generators (overridable per call;
/// the CLI maps TREECOVER_VERTEX_LIMIT onto this parameter).
inline constexpr long long kDefaultVertexLimit = 10'000'000;

Tree path_graph(int n);
Tree star_graph(int leaves);

/// Complete Delta-ary rooted tree of height h: every non-leaf vertex has
/// outdegree Delta, every root-to-leaf distance is h. h = 0 gives K1.
/// Vertices in BFS order, root = 0.
RootedTree gen_complete_rooted(int delta, int h, long long limit = kDefaultVertexLimit);

/// Unrooted complete tree: some center r has distance h to every leaf and
/// every non-leaf vertex has degree exactly Delta. Center = vertex 0.
Tree gen_complete_unrooted(int delta, int h, long long limit = kDefaultVertexLimit);

/// Caterpillar on spine (u, v_1..v_n, w) with Delta-2 extra leaves per v_i,
/// so each v_i has degree Delta.
Tree gen_caterpillar_lb(int delta, int n, long long limit = kDefaultVertexLimit);

/// Recursive pathwidth-k lower-bound tree T<n_1..n_k> on the path
/// (v_-n..v_n), n = n_k: v_0 takes Delta-2 child copies of T<n_1..n_{k-1}>
/// (leaves when k = 1), every other v_i takes Delta-1 copies; root v_0.
/// Requires n_i >= pi(Delta, d, i) + 1.
RootedTree gen_pw_lb_rooted(int delta, int d, int k, const std::vector<long long>& n_list,
                            long long limit = kDefaultVertexLimit);

/// Unrooted variant on the path (v_{-n-1}..v_{n+1}): each v_i with |i| <= n
/// takes Delta-2 copies of the rooted lower-bound tree with parameters
/// (Delta-1, d-1, k-1) at minimal admissible sizes (plain leaves when k = 1).
/// k >= 2 requires d >= 4.
Tree gen_pw_lb_unrooted(int delta, int d, int k, long long n, long long limit = kDefaultVertexLimit);

/// Subdivided p-leaf star with legs of the given length, plus two extra
/// leaves on each leg end; every minimum path covering needs 2n-2-l edges.
Tree gen_subdivided_star_lb(int p, int leg, long long limit = kDefaultVertexLimit);

/// 2-connected outerplanar graph with maximum degree 3 that needs at least
/// k degree-2 connected subgraphs in every covering: a cycle of length 2n
/// with n ladder gadgets (m = 2k, n = 4k).
Graph gen_arms(int k, long long limit = kDefaultVertexLimit);

/// Uniform random labeled tree (Pruefer decode, deterministic in seed).
Tree random_tree(int n, std::uint64_t seed);

/// Erdos-Renyi-style random simple graph with expected average degree deg.
Graph random_graph(int n, double avg_degree, std::uint64_t seed);

} // namespace treecover
