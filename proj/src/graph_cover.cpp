#include "treecover/graph_cover.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "treecover/arith.hpp"

namespace treecover {

namespace {

struct Colorer {
    const Graph& g;
    std::vector<int> color; // per edge, -1 while uncolored
    int max_color = -1;

    explicit Colorer(const Graph& gr) : g(gr), color(gr.edge_count(), -1) {}

    bool is_free(int v, int c) const {
        if (c < 0) return false;
        for (int eid : g.neighbor_edge_ids(v))
            if (color[eid] == c) return false;
        return true;
    }

    int find_free(int v) const {
        int c = 0;
        while (!is_free(v, c)) ++c;
        return c;
    }

    // maximal fan of x starting at y: fan[i+1] extends when the color of
    // edge (x, fan[i+1]) is free at fan[i]
    std::vector<int> maximal_fan(int x, int y) {
        std::vector<int> fan{y};
        bool extended = true;
        while (extended) {
            extended = false;
            const auto& nb = g.neighbors(x);
            const auto& ne = g.neighbor_edge_ids(x);
            for (size_t i = 0; i < nb.size(); ++i) {
                int v = nb[i];
                if (color[ne[i]] < 0) continue;
                if (std::find(fan.begin(), fan.end(), v) != fan.end()) continue;
                if (is_free(fan.back(), color[ne[i]])) {
                    fan.push_back(v);
                    extended = true;
                }
            }
        }
        return fan;
    }

    // flip the alternating cd-path starting at x (first edge colored d)
    void invert_cd_path(int x, int c, int d) {
        int prev_edge = -1;
        int want = d;
        int v = x;
        while (true) {
            int next = -1, next_edge = -1;
            const auto& nb = g.neighbors(v);
            const auto& ne = g.neighbor_edge_ids(v);
            for (size_t i = 0; i < nb.size(); ++i)
                if (ne[i] != prev_edge && color[ne[i]] == want) {
                    next = nb[i];
                    next_edge = ne[i];
                    break;
                }
            if (next < 0) break;
            color[next_edge] = want == d ? c : d;
            prev_edge = next_edge;
            v = next;
            want = want == d ? c : d;
        }
    }

    void rotate_fan(int x, const std::vector<int>& fan, size_t upto) {
        for (size_t i = 0; i < upto; ++i) {
            int e_prev = g.edge_id(x, fan[i]);
            int e_next = g.edge_id(x, fan[i + 1]);
            color[e_prev] = color[e_next];
        }
    }

    void color_edge(int eid) {
        auto [x, y] = g.edge(eid);
        std::vector<int> fan = maximal_fan(x, y);
        int c = find_free(x);
        int d = find_free(fan.back());
        invert_cd_path(x, c, d);
        // after the inversion d need not be free at every fan vertex; take
        // the first prefix whose end has d free and rotate up to it
        size_t w = 0;
        while (w < fan.size() && !is_free(fan[w], d)) ++w;
        assert(w < fan.size());
        rotate_fan(x, fan, w);
        color[g.edge_id(x, fan[w])] = d;
        max_color = std::max(max_color, std::max(c, d));
    }
};

} // namespace

EdgeColoring edge_color(const Graph& g) {
    Colorer col(g);
    for (int e = 0; e < g.edge_count(); ++e) col.color_edge(e);
    EdgeColoring out;
    out.color = std::move(col.color);
    out.colors_used = 0;
    for (int c : out.color) out.colors_used = std::max(out.colors_used, c + 1);
    if (g.edge_count() > 0 && out.colors_used > g.max_degree() + 1)
        throw std::logic_error("edge coloring exceeded Delta + 1 colors");
    return out;
}

namespace {

void check_connected_edge_set(const Graph& g, const std::vector<int>& h_edges) {
    std::vector<int> vs = part_vertices(g, h_edges);
    if (vs.empty()) throw std::invalid_argument("H has no edges");
    std::vector<int> uf(vs.size());
    for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
    auto idx = [&](int v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    int comps = static_cast<int>(vs.size());
    for (int eid : h_edges) {
        auto [u, v] = g.edge(eid);
        int a = find(idx(u)), b = find(idx(v));
        if (a != b) { uf[a] = b; --comps; }
    }
    if (comps != 1) throw std::invalid_argument("H is not connected");
}

} // namespace

SubtreeCover cover_via_cvc(const Graph& g, const std::vector<int>& h_edges, int d) {
    std::vector<char> in_h(g.edge_count(), 0);
    for (int eid : h_edges) {
        if (eid < 0 || eid >= g.edge_count()) throw std::invalid_argument("H edge id out of range");
        if (in_h[eid]) throw std::invalid_argument("repeated H edge");
        in_h[eid] = 1;
    }
    check_connected_edge_set(g, h_edges);
    std::vector<char> in_vh(g.vertex_count(), 0);
    for (int v : part_vertices(g, h_edges)) in_vh[v] = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (!in_vh[u] && !in_vh[v])
            throw std::invalid_argument("H is not a vertex cover (edge " + std::to_string(e) + ")");
    }
    std::vector<int> deg_h(g.vertex_count(), 0);
    for (int eid : h_edges) {
        auto [u, v] = g.edge(eid);
        ++deg_h[u];
        ++deg_h[v];
    }
    int delta_h = *std::max_element(deg_h.begin(), deg_h.end());
    if (d < delta_h + 1) throw std::invalid_argument("need d >= Delta(H) + 1");

    // rest = G - E(H), colored into k + 1 matchings
    std::vector<Edge> rest_edges;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!in_h[e]) rest_edges.push_back(g.edge(e));
    SubtreeCover cover;
    cover.host_edge_count = g.edge_count();
    cover.kind = CoverKind::covering;
    if (rest_edges.empty()) {
        cover.parts.push_back(h_edges);
        return cover;
    }
    Graph rest(g.vertex_count(), rest_edges);
    int k = rest.max_degree();
    EdgeColoring coloring = edge_color(rest);
    long long groups = ceil_div(k + 1, d - delta_h);
    cover.parts.assign(groups, h_edges);
    for (int e = 0; e < rest.edge_count(); ++e) {
        // rest's edge ids follow its own serialization order
        int host = g.edge_id(rest.edge(e).first, rest.edge(e).second);
        long long grp = coloring.color[e] / (d - delta_h);
        cover.parts[grp].push_back(host);
    }
    for (auto& p : cover.parts) std::sort(p.begin(), p.end());
    return cover;
}

SubtreeCover cover_via_spanning(const Graph& g, const std::vector<int>& h_edges, int d) {
    std::vector<int> vs = part_vertices(g, h_edges);
    if (static_cast<int>(vs.size()) != g.vertex_count())
        throw std::invalid_argument("H is not spanning");
    std::vector<int> deg_h(g.vertex_count(), 0);
    for (int eid : h_edges) {
        auto [u, v] = g.edge(eid);
        ++deg_h[u];
        ++deg_h[v];
    }
    int delta_h = *std::max_element(deg_h.begin(), deg_h.end());
    int delta_g = g.max_degree();
    int delta_small_h = *std::min_element(deg_h.begin(), deg_h.end());
    SubtreeCover cover = cover_via_cvc(g, h_edges, d);
    // the corollary's bound k <= Delta(G) - delta(H)
    std::vector<char> in_h(g.edge_count(), 0);
    for (int eid : h_edges) in_h[eid] = 1;
    int k = 0;
    std::vector<int> deg_rest(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (!in_h[e]) {
            auto [u, v] = g.edge(e);
            k = std::max({k, ++deg_rest[u], ++deg_rest[v]});
        }
    if (k > delta_g - delta_small_h) throw std::logic_error("spanning bound violated");
    return cover;
}

} // namespace treecover
