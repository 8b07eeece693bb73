#pragma once

#include <utility>

#include "treecover/core.hpp"

namespace treecover {

/// Iterated ceiling power of an exact rational x = num/den > 0:
/// ceill(x, 0) = 1, ceill(x, k) = ceil(x * ceill(x, k-1)).
long long ceill(long long num, long long den, int k);

/// Minimum size of an outdegree-f rooted covering (every part contains the
/// root): bottom-up rmc(v) = max(max_i c_i, ceil(sum_i c_i / f(v))).
long long rmc(const RootedTree& t, const BindingFunction& f);
long long rmc(const RootedTree& t, int d);

/// The covering itself, of size rmc(t, f); child coverings are composed
/// through the multipartite clique partition at every vertex.
SubtreeCover rmc_cover(const RootedTree& t, const BindingFunction& f);
SubtreeCover rmc_cover(const RootedTree& t, int d);

/// Minimum degree-f covering of an unrooted tree: evaluates the rooted
/// problem under g (g(r) = f(r), g(x) = f(x)-1 elsewhere) for every root
/// and keeps the best. Requires f(v) >= 2 everywhere.
std::pair<long long, SubtreeCover> mincover(const Tree& t, const BindingFunction& f);
std::pair<long long, SubtreeCover> mincover_d(const Tree& t, int d);
long long mincover_size(const Tree& t, const BindingFunction& f);
long long mincover_size_d(const Tree& t, int d);

/// Closed forms for complete trees: rmc of the rooted Delta-ary tree of
/// height h is ceill(Delta/d, h); mincover of the unrooted one is
/// ceil(Delta/d * ceill((Delta-1)/(d-1), h-1)).
long long rmc_complete(int delta, int d, int h);
long long mincover_complete(int delta, int d, int h);

} // namespace treecover
