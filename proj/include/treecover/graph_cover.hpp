#pragma once

#include <vector>

#include "treecover/core.hpp"

namespace treecover {

/// Proper edge coloring with at most Delta(G) + 1 colors.
struct EdgeColoring {
    std::vector<int> color; // per edge id
    int colors_used;
};

/// Constructive Vizing bound via fan rotation and cd-path inversion.
EdgeColoring edge_color(const Graph& g);

/// Covering of G by ceil((k+1)/(d - Delta(H))) connected degree-d
/// subgraphs, where H is a connected vertex cover (given as edge ids) and
/// k = Delta(G - E(H)): color G - E(H), group the matchings, and return
/// the parts H u F_j. The part count always equals the formula; trailing
/// groups may add no edges beyond H.
SubtreeCover cover_via_cvc(const Graph& g, const std::vector<int>& h_edges, int d);

/// Wrapper for a connected spanning H; asserts k <= Delta(G) - delta(H).
SubtreeCover cover_via_spanning(const Graph& g, const std::vector<int>& h_edges, int d);

} // namespace treecover
