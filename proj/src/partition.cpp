#include "treecover/partition.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "treecover/arith.hpp"

namespace treecover {

PartitionStats partition_stats(const Tree& t, int d) {
    if (d < 2) throw std::invalid_argument("need d >= 2");
    PartitionStats s;
    s.n_i.assign(d, 0);
    s.degree_histogram.assign(t.max_degree() + 1, 0);
    for (int v = 0; v < t.vertex_count(); ++v) {
        int deg = t.degree(v);
        ++s.degree_histogram[deg];
        ++s.n_i[(d - deg % d) % d]; // ceil(deg/d) = (deg + i)/d
    }
    return s;
}

long long minpart_size(const Tree& t, int d) {
    if (d < 2) throw std::invalid_argument("need d >= 2");
    if (t.vertex_count() < 2) throw std::invalid_argument("minpart needs a non-trivial tree");
    long long n = t.vertex_count();
    long long sum = 1;
    for (int v = 0; v < t.vertex_count(); ++v) sum += ceil_div(t.degree(v), d) - 1;

    // equivalent form 1 + 2(n-1)/d - n + sum_i i*n_i/d, evaluated exactly
    PartitionStats s = partition_stats(t, d);
    long long num = checked_mul(d, 1 - n) + 2 * (n - 1);
    for (int i = 0; i < d; ++i) num = checked_add(num, checked_mul(i, s.n_i[i]));
    num = checked_add(num, d); // the leading "1 +" over the common denominator d
    if (num % d != 0) throw std::logic_error("minpart formula is not an integer");
    if (num / d != sum) throw std::logic_error("minpart formulas disagree");
    return sum;
}

SubtreeCover minpart_partition(const Tree& t, int d) {
    long long expect = minpart_size(t, d); // validates input
    RootedTree rt(t, 0);
    SubtreeCover cover;
    cover.host_edge_count = t.edge_count();
    cover.kind = CoverKind::partition;
    std::vector<std::vector<int>>& parts = cover.parts;
    std::vector<int> color(t.edge_count(), -1);
    auto open_part = [&]() {
        parts.emplace_back();
        return static_cast<int>(parts.size()) - 1;
    };
    // BFS order; each vertex hands every child edge a color before the
    // child is processed
    for (int v : rt.bfs_order()) {
        std::vector<std::pair<int, int>> child_edges; // (child, edge id), neighbor-id order
        const auto& nb = t.neighbors(v);
        const auto& ne = t.neighbor_edge_ids(v);
        for (size_t i = 0; i < nb.size(); ++i)
            if (nb[i] != rt.parent(v)) child_edges.push_back({nb[i], ne[i]});
        std::sort(child_edges.begin(), child_edges.end());
        size_t at = 0;
        if (v != rt.root()) {
            // the incoming color absorbs up to d-1 child edges
            int c = color[rt.parent_edge(v)];
            for (; at < child_edges.size() && at < static_cast<size_t>(d - 1); ++at) {
                color[child_edges[at].second] = c;
                parts[c].push_back(child_edges[at].second);
            }
        }
        // remainder chunked into fresh stars of at most d edges
        while (at < child_edges.size()) {
            int c = open_part();
            for (size_t j = 0; j < static_cast<size_t>(d) && at < child_edges.size(); ++j, ++at) {
                color[child_edges[at].second] = c;
                parts[c].push_back(child_edges[at].second);
            }
        }
    }
    assert(static_cast<long long>(parts.size()) == expect);
    return cover;
}

SubtreeCover minpart_with_seed(const Tree& t, int d, const std::vector<int>& seed_edges) {
    long long expect = minpart_size(t, d);
    if (seed_edges.empty()) throw std::invalid_argument("seed must contain at least one edge");

    // the seed must induce a connected subtree X with
    // deg_X(v) = min(d, deg_T(v)) for every v in X (degree-d maximal)
    std::vector<int> deg_x(t.vertex_count(), 0);
    std::vector<char> in_seed(t.edge_count(), 0);
    for (int eid : seed_edges) {
        if (eid < 0 || eid >= t.edge_count()) throw std::invalid_argument("seed edge id out of range");
        if (in_seed[eid]) throw std::invalid_argument("repeated seed edge");
        in_seed[eid] = 1;
        auto [u, v] = t.edge(eid);
        ++deg_x[u];
        ++deg_x[v];
    }
    std::vector<int> xs = part_vertices(t, seed_edges);
    if (static_cast<int>(xs.size()) != static_cast<int>(seed_edges.size()) + 1)
        throw std::invalid_argument("seed is not connected");
    for (int v : xs)
        if (deg_x[v] != std::min(d, t.degree(v)))
            throw std::invalid_argument("seed is not a degree-d maximal subtree (vertex " +
                                        std::to_string(v) + ")");

    // recurse on the components of T - E(X): each component holding a seed
    // vertex with spare edges gets its own minimum partition
    SubtreeCover cover;
    cover.host_edge_count = t.edge_count();
    cover.kind = CoverKind::partition;
    cover.parts.push_back(seed_edges);

    std::vector<int> comp(t.vertex_count(), -1);
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (comp[v] >= 0) continue;
        // collect the component of T - seed containing v
        std::vector<int> stack{v}, verts{v};
        comp[v] = v;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            const auto& nb = t.neighbors(x);
            const auto& ne = t.neighbor_edge_ids(x);
            for (size_t i = 0; i < nb.size(); ++i) {
                if (in_seed[ne[i]] || comp[nb[i]] >= 0) continue;
                comp[nb[i]] = v;
                verts.push_back(nb[i]);
                stack.push_back(nb[i]);
            }
        }
        if (verts.size() == 1) continue;
        // build the component as a tree with local ids, partition it, map back
        std::sort(verts.begin(), verts.end());
        auto local = [&](int x) {
            return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
        };
        std::vector<Edge> edges;
        std::vector<int> back;
        for (int x : verts) {
            const auto& nb = t.neighbors(x);
            const auto& ne = t.neighbor_edge_ids(x);
            for (size_t i = 0; i < nb.size(); ++i)
                if (!in_seed[ne[i]] && x < nb[i] && comp[nb[i]] == comp[x]) {
                    edges.push_back({local(x), local(nb[i])});
                    back.push_back(ne[i]);
                }
        }
        Tree sub(static_cast<int>(verts.size()), edges);
        // edge ids of sub are in sub's serialization order; remap via sub.edge -> host
        std::vector<int> host_eid(sub.edge_count());
        for (int e = 0; e < sub.edge_count(); ++e) {
            auto [a, b] = sub.edge(e);
            int host = t.edge_id(verts[a], verts[b]);
            assert(host >= 0);
            host_eid[e] = host;
        }
        SubtreeCover part = minpart_partition(sub, d);
        for (auto& p : part.parts) {
            for (int& e : p) e = host_eid[e];
            cover.parts.push_back(std::move(p));
        }
    }
    assert(static_cast<long long>(cover.parts.size()) == expect);
    return cover;
}

} // namespace treecover
