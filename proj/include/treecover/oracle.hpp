#pragma once

#include "treecover/clique_partition.hpp"
#include "treecover/core.hpp"

namespace treecover {

/// Brute-force references. Deliberately algorithm-independent from the
/// main modules; all of them reject inputs over their size caps instead
/// of degrading.

/// Exact minimum partition of E(T) into connected degree-d subtrees, by
/// recursive edge assignment with connectivity pruning.
long long oracle_minpart(const Tree& t, int d, int cap = 10);

/// Exact minimum degree-f covering: enumerates all f-maximal subtrees and
/// solves the set cover exactly.
long long oracle_mincover(const Tree& t, const BindingFunction& f, int edge_cap = 9);
long long oracle_mincover(const Tree& t, int d, int edge_cap = 9);

/// Exact minimum outdegree-f rooted covering (all parts contain the root).
long long oracle_rmc(const RootedTree& t, const BindingFunction& f, int edge_cap = 9);
long long oracle_rmc(const RootedTree& t, int d, int edge_cap = 9);

/// Exact pathwidth by memoized recursion over all peel paths.
int oracle_pathwidth(const Tree& t, int cap = 16);

/// Exact minimum (<= d)-clique partition of a complete multipartite graph.
long long oracle_cliques(const MultipartiteSpec& spec, int d);

/// Exhaustive minima of the two integer programs (x scanned over the
/// stated box, the remaining variables at their constraint-minimal
/// values, which never hurts the objective).
long long oracle_ilp1(long long A, long long B, int d);
long long oracle_ilp2(long long A, int d);

} // namespace treecover
