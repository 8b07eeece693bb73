#include "treecover/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace treecover {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n <= 0) throw std::invalid_argument("graph needs at least one vertex");
    adj_.assign(n, {});
    adj_eid_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    // duplicate detection without disturbing insertion order
    for (int v = 0; v < n; ++v) {
        auto sorted = adj_[v];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate edge");
    }
    // edge ids in serialization order: vertex-major, lower endpoint first
    adj_eid_ = adj_; // same shape
    edge_list_.reserve(edges.size());
    std::unordered_map<long long, int> id_of;
    id_of.reserve(edges.size() * 2);
    auto key = [n](int u, int w) { return static_cast<long long>(u) * n + w; };
    for (int u = 0; u < n; ++u) {
        for (size_t i = 0; i < adj_[u].size(); ++i) {
            int w = adj_[u][i];
            if (u < w) {
                int id = static_cast<int>(edge_list_.size());
                edge_list_.push_back({u, w});
                id_of[key(u, w)] = id;
                adj_eid_[u][i] = id;
            } else {
                adj_eid_[u][i] = -1;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        for (size_t i = 0; i < adj_[v].size(); ++i)
            if (adj_eid_[v][i] < 0) adj_eid_[v][i] = id_of.at(key(adj_[v][i], v));
}

int Graph::max_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
    return m;
}

int Graph::min_degree() const {
    int m = n_;
    for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
    return m;
}

int Graph::edge_id(int u, int v) const {
    for (size_t i = 0; i < adj_[u].size(); ++i)
        if (adj_[u][i] == v) return adj_eid_[u][i];
    return -1;
}

bool Graph::connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) { seen[w] = 1; ++cnt; stack.push_back(w); }
    }
    return cnt == n_;
}

Tree::Tree(int n, const std::vector<Edge>& edges) : Graph(n, edges) {
    if (edge_count() != n - 1) throw std::invalid_argument("tree must have exactly n-1 edges");
    if (!connected()) throw std::invalid_argument("tree must be connected");
}

int Tree::leaf_count() const {
    int c = 0;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 1) ++c;
    return c;
}

std::vector<int> Tree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 1) out.push_back(v);
    return out;
}

RootedTree::RootedTree(Tree tree, int root) : tree_(std::move(tree)), root_(root) {
    int n = tree_.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    parent_.assign(n, -1);
    parent_eid_.assign(n, -1);
    order_.clear();
    order_.reserve(n);
    order_.push_back(root);
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (size_t head = 0; head < order_.size(); ++head) {
        int v = order_[head];
        const auto& nb = tree_.neighbors(v);
        const auto& ne = tree_.neighbor_edge_ids(v);
        for (size_t i = 0; i < nb.size(); ++i) {
            int w = nb[i];
            if (seen[w]) continue;
            seen[w] = 1;
            parent_[w] = v;
            parent_eid_[w] = ne[i];
            order_.push_back(w);
        }
    }
}

int RootedTree::outdegree(int v) const {
    return v == root_ ? tree_.degree(v) : tree_.degree(v) - 1;
}

int RootedTree::max_outdegree() const {
    int m = 0;
    for (int v = 0; v < tree_.vertex_count(); ++v) m = std::max(m, outdegree(v));
    return m;
}

std::vector<int> RootedTree::children(int v) const {
    std::vector<int> out;
    for (int w : tree_.neighbors(v))
        if (w != parent_[v]) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

long long SubtreeCover::total_edges() const {
    long long t = 0;
    for (const auto& p : parts) t += static_cast<long long>(p.size());
    return t;
}

std::vector<int> part_vertices(const Graph& host, const std::vector<int>& part) {
    std::vector<int> vs;
    for (int eid : part) {
        auto [u, v] = host.edge(eid);
        vs.push_back(u);
        vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

namespace {

// connectivity of an edge subset via union-find over its endpoints
bool edges_connected(const Graph& host, const std::vector<int>& part) {
    if (part.size() <= 1) return true;
    std::vector<int> vs = part_vertices(host, part);
    auto idx = [&](int v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    std::vector<int> uf(vs.size());
    for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    int comps = static_cast<int>(vs.size());
    for (int eid : part) {
        auto [u, v] = host.edge(eid);
        int a = find(idx(u)), b = find(idx(v));
        if (a != b) { uf[a] = b; --comps; }
    }
    return comps == 1;
}

} // namespace

std::string check_cover(const Graph& host, const SubtreeCover& cover, const BindingFunction& f) {
    if (cover.host_edge_count != host.edge_count()) return "host edge count mismatch";
    if (f.size() != host.vertex_count()) return "binding function size mismatch";
    int m = host.edge_count();
    std::vector<int> hits(m, 0);

    // orientation away from the root when checking outdegree budgets
    std::vector<int> parent;
    if (cover.rooted_at) {
        int r = *cover.rooted_at;
        if (r < 0 || r >= host.vertex_count()) return "root out of range";
        parent.assign(host.vertex_count(), -2);
        parent[r] = -1;
        std::vector<int> stack{r};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : host.neighbors(v))
                if (parent[w] == -2) { parent[w] = v; stack.push_back(w); }
        }
    }

    for (size_t pi = 0; pi < cover.parts.size(); ++pi) {
        const auto& part = cover.parts[pi];
        if (part.empty()) return "part " + std::to_string(pi) + " is empty";
        std::vector<char> dup(m, 0);
        for (int eid : part) {
            if (eid < 0 || eid >= m) return "edge id out of range in part " + std::to_string(pi);
            if (dup[eid]) return "repeated edge in part " + std::to_string(pi);
            dup[eid] = 1;
            ++hits[eid];
        }
        if (!edges_connected(host, part)) return "part " + std::to_string(pi) + " is not connected";
        std::vector<int> vs = part_vertices(host, part);
        if (cover.rooted_at &&
            !std::binary_search(vs.begin(), vs.end(), *cover.rooted_at))
            return "part " + std::to_string(pi) + " misses the root";
        // degree (or outdegree) within the part
        std::vector<int> deg(vs.size(), 0);
        auto idx = [&](int v) {
            return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
        };
        for (int eid : part) {
            auto [u, v] = host.edge(eid);
            if (cover.rooted_at) {
                int child = (parent[v] == u) ? v : u; // edge points to the child
                int src = (child == v) ? u : v;
                ++deg[idx(src)];
            } else {
                ++deg[idx(u)];
                ++deg[idx(v)];
            }
        }
        for (size_t i = 0; i < vs.size(); ++i)
            if (deg[i] > f(vs[i]))
                return "degree budget exceeded at vertex " + std::to_string(vs[i]) +
                       " in part " + std::to_string(pi);
    }

    for (int e = 0; e < m; ++e) {
        if (hits[e] == 0) return "edge " + std::to_string(e) + " uncovered";
        if (cover.kind == CoverKind::partition && hits[e] > 1)
            return "edge " + std::to_string(e) + " in more than one part";
    }
    return "";
}

std::string check_cover(const Graph& host, const SubtreeCover& cover, int d) {
    return check_cover(host, cover, BindingFunction::uniform(host.vertex_count(), d));
}

SubTree induced_subtree(const Tree& host, const std::vector<int>& vertices) {
    SubTree st;
    st.to_host_vertex = vertices;
    std::sort(st.to_host_vertex.begin(), st.to_host_vertex.end());
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(st.to_host_vertex.begin(), st.to_host_vertex.end(), v) -
                                st.to_host_vertex.begin());
    };
    std::vector<char> in(host.vertex_count(), 0);
    for (int v : st.to_host_vertex) in[v] = 1;
    std::vector<Edge> edges;
    for (int v : st.to_host_vertex)
        for (int w : host.neighbors(v))
            if (in[w] && v < w) edges.push_back({local(v), local(w)});
    st.tree = Tree(static_cast<int>(st.to_host_vertex.size()), edges);
    st.to_host_edge.resize(st.tree.edge_count());
    for (int e = 0; e < st.tree.edge_count(); ++e) {
        auto [a, b] = st.tree.edge(e);
        st.to_host_edge[e] = host.edge_id(st.to_host_vertex[a], st.to_host_vertex[b]);
    }
    return st;
}

} // namespace treecover
