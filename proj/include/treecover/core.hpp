#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace treecover {

using Edge = std::pair<int, int>;

/// Simple undirected graph with dense 0-based vertex ids.
/// Adjacency lists keep insertion order; edge ids are assigned in
/// serialization order (vertex-major, lower endpoint first).
class Graph {
  public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edge_list_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<int>& neighbor_edge_ids(int v) const { return adj_eid_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;
    const std::vector<Edge>& edges() const { return edge_list_; }
    Edge edge(int id) const { return edge_list_[id]; }
    /// O(deg(u)) lookup; -1 if absent.
    int edge_id(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
    bool connected() const;

  protected:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> adj_eid_;
    std::vector<Edge> edge_list_;
};

/// Tree: connected, acyclic, simple. Inherits the graph representation;
/// the constructor enforces edge count n-1 and reachability from vertex 0.
class Tree : public Graph {
  public:
    Tree() = default;
    Tree(int n, const std::vector<Edge>& edges);

    int leaf_count() const;
    std::vector<int> leaves() const;
};

/// Tree plus a root; edges are oriented away from the root.
/// outdeg(v) = deg(v) - 1 for v != root, outdeg(root) = deg(root).
class RootedTree {
  public:
    RootedTree() = default;
    RootedTree(Tree tree, int root);

    const Tree& tree() const { return tree_; }
    int root() const { return root_; }
    int parent(int v) const { return parent_[v]; }          // -1 for root
    int parent_edge(int v) const { return parent_eid_[v]; } // -1 for root
    const std::vector<int>& bfs_order() const { return order_; }
    int outdegree(int v) const;
    int max_outdegree() const;
    /// Children of v in neighbor-id order.
    std::vector<int> children(int v) const;

  private:
    Tree tree_;
    int root_ = 0;
    std::vector<int> parent_;
    std::vector<int> parent_eid_;
    std::vector<int> order_;
};

enum class CoverKind { partition, covering };

/// A set of edge subsets of a host tree/graph, each inducing a connected
/// subgraph. Parts are lists of edge ids into the host's edge list.
struct SubtreeCover {
    int host_edge_count = 0;
    CoverKind kind = CoverKind::covering;
    std::optional<int> rooted_at;
    std::vector<std::vector<int>> parts;

    int size() const { return static_cast<int>(parts.size()); }
    long long total_edges() const;
};

/// Per-vertex degree budget (outdegree budget in the rooted problem).
struct BindingFunction {
    std::vector<int> budget;

    static BindingFunction uniform(int n, int d) { return {std::vector<int>(n, d)}; }
    int operator()(int v) const { return budget[v]; }
    int size() const { return static_cast<int>(budget.size()); }
};

/// Checks a cover against its host and degree budget. Returns an empty
/// string when valid, otherwise a description of the first violation.
/// With rooted_at set, budgets constrain outdegree (away from the root)
/// and every part must contain the root vertex.
std::string check_cover(const Graph& host, const SubtreeCover& cover, const BindingFunction& f);
std::string check_cover(const Graph& host, const SubtreeCover& cover, int d);

/// Vertices touched by a part (empty part -> empty set).
std::vector<int> part_vertices(const Graph& host, const std::vector<int>& part);

/// A vertex subset of a tree materialized as its own Tree, with maps back
/// to the host. The subset must induce a connected subgraph.
struct SubTree {
    Tree tree;
    std::vector<int> to_host_vertex; // local -> host
    std::vector<int> to_host_edge;   // local edge id -> host edge id
};
SubTree induced_subtree(const Tree& host, const std::vector<int>& vertices);

} // namespace treecover
