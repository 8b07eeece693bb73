#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treecover/core.hpp"

namespace treecover {

/// Parsed edge-list input. Input ids may be arbitrary non-negative
/// integers; they are remapped to dense 0-based ids in ascending order
/// (identity when the input is already dense). original_id[i] is the
/// input id of dense vertex i.
struct ParsedGraph {
    Graph graph;
    std::vector<long long> original_id;
};

/// Parses "u v" lines; blank lines and '#' comments are ignored.
/// Throws std::invalid_argument with a line number on malformed lines,
/// self-loops and duplicate edges.
ParsedGraph parse_edge_list(const std::string& text);

/// As parse_edge_list, but demands the tree invariants; cyclic input is
/// reported with the line of the edge closing the first cycle.
Tree parse_tree(const std::string& text);

std::string serialize_edge_list(const Graph& g);

/// JSON schema: {"n": int, "edges": [[u,v],...], "root": int|null}
std::string serialize_json(const Graph& g, std::optional<int> root = std::nullopt);
struct JsonGraph {
    Graph graph;
    std::optional<int> root;
};
JsonGraph parse_json_graph(const std::string& text);
Tree parse_json_tree(const std::string& text, std::optional<int>* root = nullptr);

/// Cover JSON: {"d": int|null, "kind": "partition"|"covering",
///              "parts": [[edge-index,...],...]}
std::string serialize_cover_json(const SubtreeCover& cover, std::optional<int> d);
SubtreeCover parse_cover_json(const std::string& text, std::optional<int>* d = nullptr);

/// DOT export; when a cover is given, edges are colored by part index
/// (edges in several parts get the lowest part's color).
std::string serialize_dot(const Graph& g, const SubtreeCover* cover = nullptr);

} // namespace treecover
