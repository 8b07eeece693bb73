#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "treecover/arith.hpp"
#include "treecover/clique_partition.hpp"
#include "treecover/cover_engine.hpp"
#include "treecover/pathwidth.hpp"

namespace treecover {

namespace {

// ---------------------------------------------------------------------
// Shared machinery for the pathwidth-bounded covering constructions.
// ---------------------------------------------------------------------

// One child bush below an H-vertex: the child w, its connector edge and
// a rooted covering of its subtree (parts as local edge-id lists of the
// current tree, every part containing w).
struct ChildCover {
    int child;
    int connector; // edge id (v, child)
    std::vector<std::vector<int>> parts;
    int real_parts; // parts beyond this index are padding
};

// components of t - E(H), one per H-vertex
struct Decomposition {
    std::vector<char> in_h_edge;
    std::vector<char> in_h_vertex;
    std::vector<std::vector<int>> bush; // per H vertex: vertices of T_v (incl. v)
};

Decomposition decompose(const Tree& t, const std::vector<int>& h_vertices,
                        const std::vector<int>& h_edges) {
    Decomposition d;
    d.in_h_edge.assign(t.edge_count(), 0);
    d.in_h_vertex.assign(t.vertex_count(), 0);
    for (int e : h_edges) d.in_h_edge[e] = 1;
    for (int v : h_vertices) d.in_h_vertex[v] = 1;
    d.bush.resize(h_vertices.size());
    std::vector<char> seen(t.vertex_count(), 0);
    for (size_t i = 0; i < h_vertices.size(); ++i) {
        int v = h_vertices[i];
        seen[v] = 1;
        d.bush[i] = {v};
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            const auto& nb = t.neighbors(x);
            const auto& ne = t.neighbor_edge_ids(x);
            for (size_t j = 0; j < nb.size(); ++j) {
                if (d.in_h_edge[ne[j]] || seen[nb[j]]) continue;
                seen[nb[j]] = 1;
                d.bush[i].push_back(nb[j]);
                stack.push_back(nb[j]);
            }
        }
    }
    return d;
}

// subtree below child w inside the bush of v (i.e. away from v)
std::vector<int> side_of(const Tree& t, const Decomposition& d, int v, int w) {
    std::vector<int> out{w};
    std::vector<int> stack{w};
    std::vector<char> seen(t.vertex_count(), 0);
    seen[v] = seen[w] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        const auto& nb = t.neighbors(x);
        const auto& ne = t.neighbor_edge_ids(x);
        for (size_t j = 0; j < nb.size(); ++j) {
            if (d.in_h_edge[ne[j]] || seen[nb[j]]) continue;
            seen[nb[j]] = 1;
            out.push_back(nb[j]);
            stack.push_back(nb[j]);
        }
    }
    return out;
}

std::vector<std::vector<int>> rooted_pw_parts(const Tree& t, int root, int d);

// Rooted coverings for every child bush of v, padded to exactly pi parts,
// parts remapped to t's edge ids. budget_d = the per-vertex budget used in
// the recursion (d, or d-1 for the unrooted construction).
std::vector<ChildCover> child_covers(const Tree& t, const Decomposition& dec, int v,
                                     long long pi, int budget_d, bool exact_dp) {
    std::vector<ChildCover> out;
    const auto& nb = t.neighbors(v);
    const auto& ne = t.neighbor_edge_ids(v);
    std::vector<std::pair<int, int>> kids;
    for (size_t j = 0; j < nb.size(); ++j)
        if (!dec.in_h_edge[ne[j]]) kids.push_back({nb[j], ne[j]});
    std::sort(kids.begin(), kids.end());
    for (auto [w, eid] : kids) {
        SubTree sub = induced_subtree(t, side_of(t, dec, v, w));
        int local_root =
            static_cast<int>(std::lower_bound(sub.to_host_vertex.begin(), sub.to_host_vertex.end(), w) -
                             sub.to_host_vertex.begin());
        std::vector<std::vector<int>> parts;
        if (exact_dp)
            parts = rmc_cover(RootedTree(sub.tree, local_root),
                              BindingFunction::uniform(sub.tree.vertex_count(), budget_d))
                        .parts;
        else
            parts = rooted_pw_parts(sub.tree, local_root, budget_d);
        for (auto& p : parts)
            for (int& e : p) e = sub.to_host_edge[e];
        ChildCover cc;
        cc.child = w;
        cc.connector = eid;
        cc.real_parts = static_cast<int>(parts.size());
        if (static_cast<long long>(parts.size()) > pi)
            throw std::logic_error("child covering exceeds the inductive bound");
        parts.resize(pi);
        cc.parts = std::move(parts);
        out.push_back(std::move(cc));
    }
    return out;
}

// Union of the clique's member parts plus their connectors, rooted at v.
// Returns (edges, has_real_member).
std::pair<std::vector<int>, bool> compose_clique(const std::vector<ChildCover>& kids,
                                                 const std::vector<CliqueVertex>& clique) {
    std::vector<int> part;
    bool real = false;
    for (const CliqueVertex& cv : clique) {
        if (cv.cls >= static_cast<int>(kids.size())) continue; // phantom class
        const ChildCover& cc = kids[cv.cls];
        part.push_back(cc.connector);
        if (cv.index < cc.real_parts) {
            const auto& sub = cc.parts[cv.index];
            if (!sub.empty()) real = true;
            part.insert(part.end(), sub.begin(), sub.end());
        }
    }
    return {std::move(part), real};
}

// plain composition with a single cap: exactly max(pi, ceil(deg*pi/cap)) parts
std::vector<std::vector<int>> compose_capped(const std::vector<ChildCover>& kids, long long pi,
                                             int cap) {
    if (kids.empty()) return {};
    MultipartiteSpec spec;
    for (size_t i = 0; i < kids.size(); ++i) spec.class_sizes.push_back(pi);
    int eff = static_cast<int>(std::min<long long>(cap, spec.classes()));
    CliquePartition cp = cliques_partition(spec, eff);
    std::vector<std::vector<int>> parts;
    for (const auto& clique : cp.cliques) parts.push_back(compose_clique(kids, clique).first);
    return parts;
}

// peel structure: path P extended to >= 1 edge, connector Q from the root,
// junction s, and the two arms of P at s
struct PeelFrame {
    std::vector<int> p;       // peel path
    std::vector<int> q;       // root .. s (inclusive; size 1 when root on P)
    int s;                    // junction vertex
    std::vector<int> arm1, arm2; // s .. tip (inclusive of s)
    std::vector<int> h_vertices;
    std::vector<int> h_edges;
    std::vector<int> outdeg_h; // indexed like h_vertices
    std::vector<int> arm_of;   // 1 or 2, indexed like h_vertices
};

PeelFrame peel_frame(const Tree& t, int root) {
    PeelFrame f;
    f.p = peel_path(t);
    std::vector<char> on_p(t.vertex_count(), 0);
    for (int v : f.p) on_p[v] = 1;
    if (f.p.size() == 1) {
        int v = f.p[0];
        int best = t.neighbors(v)[0];
        for (int w : t.neighbors(v)) best = std::min(best, w);
        f.p.push_back(best);
        on_p[best] = 1;
    }
    // connector from the root
    if (on_p[root]) {
        f.q = {root};
        f.s = root;
    } else {
        std::vector<int> parent(t.vertex_count(), -2);
        parent[root] = -1;
        std::vector<int> queue{root};
        int hit = -1;
        for (size_t head = 0; head < queue.size() && hit < 0; ++head) {
            int v = queue[head];
            for (int w : t.neighbors(v)) {
                if (parent[w] != -2) continue;
                parent[w] = v;
                if (on_p[w]) {
                    hit = w;
                    break;
                }
                queue.push_back(w);
            }
        }
        assert(hit >= 0);
        for (int v = hit; v != -1; v = parent[v]) f.q.push_back(v);
        std::reverse(f.q.begin(), f.q.end()); // root .. s
        f.s = hit;
    }
    // arms of P at s
    size_t at = std::find(f.p.begin(), f.p.end(), f.s) - f.p.begin();
    assert(at < f.p.size());
    f.arm1 = {f.s};
    for (size_t i = at; i-- > 0;) f.arm1.push_back(f.p[i]);
    f.arm2 = {f.s};
    for (size_t i = at + 1; i < f.p.size(); ++i) f.arm2.push_back(f.p[i]);

    std::vector<char> in_h(t.vertex_count(), 0);
    auto add_path_edges = [&](const std::vector<int>& path) {
        for (size_t i = 0; i + 1 < path.size(); ++i)
            f.h_edges.push_back(t.edge_id(path[i], path[i + 1]));
    };
    for (int v : f.p)
        if (!in_h[v]) {
            in_h[v] = 1;
            f.h_vertices.push_back(v);
        }
    for (int v : f.q)
        if (!in_h[v]) {
            in_h[v] = 1;
            f.h_vertices.push_back(v);
        }
    add_path_edges(f.p);
    add_path_edges(f.q);

    // orientation away from the root for outdegrees within H
    RootedTree rt(t, root);
    f.outdeg_h.assign(f.h_vertices.size(), 0);
    f.arm_of.assign(f.h_vertices.size(), 1);
    std::vector<int> idx(t.vertex_count(), -1);
    for (size_t i = 0; i < f.h_vertices.size(); ++i) idx[f.h_vertices[i]] = static_cast<int>(i);
    for (int e : f.h_edges) {
        auto [u, v] = t.edge(e);
        int child = rt.parent(v) == u ? v : u;
        int src = child == v ? u : v;
        ++f.outdeg_h[idx[src]];
    }
    for (size_t i = 1; i < f.arm2.size(); ++i) f.arm_of[idx[f.arm2[i]]] = 2;
    return f;
}

std::vector<int> path_edges(const Tree& t, const std::vector<int>& path) {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < path.size(); ++i) out.push_back(t.edge_id(path[i], path[i + 1]));
    return out;
}

// Outdegree-d rooted covering of (t, root) of size <= pi(Delta, d, pw),
// parts as edge-id lists each containing the root.
std::vector<std::vector<int>> rooted_pw_parts(const Tree& t, int root, int d) {
    if (t.vertex_count() == 1) return {{}};
    RootedTree rt(t, root);
    int delta = rt.max_outdegree();
    if (delta <= d) {
        std::vector<int> all(t.edge_count());
        for (int e = 0; e < t.edge_count(); ++e) all[e] = e;
        return {std::move(all)};
    }
    int k = pathwidth(t);
    assert(k >= 1);
    long long pi = pi_recurrence(delta, d, k - 1);
    PeelFrame f = peel_frame(t, root);
    Decomposition dec = decompose(t, f.h_vertices, f.h_edges);

    std::vector<std::vector<int>> result;
    if (delta >= d + 2) {
        long long lambda = ceil_div((delta - 1) * pi, d - 1);
        std::vector<std::vector<std::vector<int>>> c_parts(f.h_vertices.size());
        std::vector<std::vector<int>> d_parts; // composed at the junction, joined with Q
        std::vector<char> d_real;
        for (size_t i = 0; i < f.h_vertices.size(); ++i) {
            int v = f.h_vertices[i];
            int out_h = f.outdeg_h[i];
            auto kids = child_covers(t, dec, v, pi, d, false);
            if (out_h <= 1) {
                c_parts[i] = compose_capped(kids, pi, d - out_h);
                if (static_cast<long long>(c_parts[i].size()) > lambda)
                    throw std::logic_error("case bound exceeded");
            } else {
                assert(out_h == 2);
                long long n = static_cast<long long>(delta - 2) * pi;
                TwoSizePartition ts = two_size_partition(n, delta - 2, d - 2, d, lambda);
                for (const auto& clique : ts.p_cliques)
                    c_parts[i].push_back(compose_clique(kids, clique).first);
                long long expect_d = ceil_div((delta - 2) * pi - (d - 2) * lambda, d);
                if (static_cast<long long>(ts.q_cliques.size()) != std::max<long long>(expect_d, 0))
                    throw std::logic_error("junction clique count mismatch");
                for (const auto& clique : ts.q_cliques) {
                    auto [part, real] = compose_clique(kids, clique);
                    d_parts.push_back(std::move(part));
                    d_real.push_back(real);
                }
            }
        }
        for (long long j = 0; j < lambda; ++j) {
            std::vector<int> part = f.h_edges;
            for (size_t i = 0; i < f.h_vertices.size(); ++i)
                if (j < static_cast<long long>(c_parts[i].size())) {
                    const auto& p = c_parts[i][j];
                    part.insert(part.end(), p.begin(), p.end());
                }
            result.push_back(std::move(part));
        }
        std::vector<int> q_edges = path_edges(t, f.q);
        for (size_t j = 0; j < d_parts.size(); ++j) {
            if (!d_real[j]) continue; // only duplicates edges covered elsewhere
            std::vector<int> part = q_edges;
            part.insert(part.end(), d_parts[j].begin(), d_parts[j].end());
            result.push_back(std::move(part));
        }
        if (static_cast<long long>(result.size()) > pi_recurrence(delta, d, k))
            throw std::logic_error("rooted pw covering exceeds pi");
    } else {
        // delta == d + 1
        long long dd = static_cast<long long>(d) * (d - 1);
        long long tmod = pi % dd;
        long long y, x;
        if (tmod < static_cast<long long>(d - 1) * (d - 2)) {
            y = floor_div(pi, dd);
            x = ceil_div((d - 1) * pi - (2 * d - 2) * y, d - 2);
        } else {
            y = ceil_div(pi, dd);
            x = ceil_div(d * pi - (d - 1) * y, d - 1);
        }
        assert((d - 2) * x + 2 * (d - 1) * y >= (delta - 2) * pi);
        assert((d - 1) * (x + y) >= (delta - 1) * pi);
        assert(static_cast<long long>(d) * (x + y) > static_cast<long long>(delta) * pi);

        std::vector<std::vector<std::vector<int>>> c_parts(f.h_vertices.size());
        std::vector<std::vector<std::vector<int>>> d1_parts(f.h_vertices.size()),
            d2_parts(f.h_vertices.size());
        for (size_t i = 0; i < f.h_vertices.size(); ++i) {
            int v = f.h_vertices[i];
            int out_h = f.outdeg_h[i];
            auto kids = child_covers(t, dec, v, pi, d, false);
            if (out_h <= 1) {
                auto parts = compose_capped(kids, pi, d - out_h);
                if (static_cast<long long>(parts.size()) > x + y)
                    throw std::logic_error("case bound exceeded");
                auto& dst = f.arm_of[i] == 1 ? d1_parts[i] : d2_parts[i];
                for (size_t j = 0; j < parts.size(); ++j) {
                    if (j < static_cast<size_t>(x))
                        c_parts[i].push_back(std::move(parts[j]));
                    else
                        dst.push_back(std::move(parts[j]));
                }
            } else {
                assert(v == f.s);
                long long n = static_cast<long long>(delta - 2) * pi;
                TwoSizePartition ts = two_size_partition(n, delta - 2, d - 1, d - 2, 2 * y);
                if (static_cast<long long>(ts.q_cliques.size()) > x)
                    throw std::logic_error("junction clique count exceeds x");
                for (const auto& clique : ts.q_cliques)
                    c_parts[i].push_back(compose_clique(kids, clique).first);
                for (size_t j = 0; j < ts.p_cliques.size(); ++j) {
                    auto part = compose_clique(kids, ts.p_cliques[j]).first;
                    if (j < static_cast<size_t>(y))
                        d1_parts[i].push_back(std::move(part));
                    else
                        d2_parts[i].push_back(std::move(part));
                }
            }
        }
        for (long long j = 0; j < x; ++j) {
            std::vector<int> part = f.h_edges;
            bool any = false;
            for (size_t i = 0; i < f.h_vertices.size(); ++i)
                if (j < static_cast<long long>(c_parts[i].size())) {
                    const auto& p = c_parts[i][j];
                    part.insert(part.end(), p.begin(), p.end());
                    any = true;
                }
            if (j == 0 || any) result.push_back(std::move(part));
        }
        std::vector<int> q1 = path_edges(t, f.q), q2 = q1;
        {
            auto a1 = path_edges(t, f.arm1), a2 = path_edges(t, f.arm2);
            q1.insert(q1.end(), a1.begin(), a1.end());
            q2.insert(q2.end(), a2.begin(), a2.end());
        }
        auto emit_d = [&](const std::vector<std::vector<std::vector<int>>>& dparts,
                          const std::vector<int>& qi, int arm) {
            for (long long j = 0; j < y; ++j) {
                std::vector<int> part = qi;
                bool any = false;
                for (size_t i = 0; i < f.h_vertices.size(); ++i) {
                    if (f.arm_of[i] != arm && f.h_vertices[i] != f.s) continue;
                    if (j < static_cast<long long>(dparts[i].size())) {
                        const auto& p = dparts[i][j];
                        part.insert(part.end(), p.begin(), p.end());
                        any = true;
                    }
                }
                if (any && !part.empty()) result.push_back(std::move(part));
            }
        };
        emit_d(d1_parts, q1, 1);
        emit_d(d2_parts, q2, 2);
        if (static_cast<long long>(result.size()) > x + 2 * y)
            throw std::logic_error("rooted pw covering exceeds x + 2y");
        if (static_cast<long long>(result.size()) > pi_recurrence(delta, d, k))
            throw std::logic_error("rooted pw covering exceeds pi");
    }
    return result;
}

} // namespace

SubtreeCover cover_rooted_pw(const RootedTree& t, int d) {
    if (d < 3) throw std::invalid_argument("need d >= 3");
    SubtreeCover cover;
    cover.host_edge_count = t.tree().edge_count();
    cover.kind = CoverKind::covering;
    cover.rooted_at = t.root();
    cover.parts = rooted_pw_parts(t.tree(), t.root(), d);
    std::erase_if(cover.parts, [](const std::vector<int>& p) { return p.empty(); });
    for (auto& p : cover.parts) {
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    return cover;
}

SubtreeCover cover_unrooted_pw(const Tree& t, int d) {
    if (d < 3) throw std::invalid_argument("need d >= 3");
    if (t.vertex_count() < 2) throw std::invalid_argument("needs a non-trivial tree");
    SubtreeCover cover;
    cover.host_edge_count = t.edge_count();
    cover.kind = CoverKind::covering;
    int delta = t.max_degree();
    if (delta <= d) {
        std::vector<int> all(t.edge_count());
        for (int e = 0; e < t.edge_count(); ++e) all[e] = e;
        cover.parts.push_back(std::move(all));
        return cover;
    }
    int k = pathwidth(t);
    std::vector<int> p = peel_path(t);
    std::vector<int> p_edges = path_edges(t, p);
    Decomposition dec = decompose(t, p, p_edges);

    // per-vertex coverings with budget d - deg_P(v) at v and d - 1 inside
    long long pi_hat = 1;
    std::vector<std::vector<ChildCover>> kids_of(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        // children coverings at budget d-1; the k-1 level with budget 2 is
        // computed by the exact DP instead of the recursive construction
        kids_of[i] = child_covers(t, dec, p[i], t.edge_count() + 1, d - 1, d == 3);
        for (const auto& cc : kids_of[i]) pi_hat = std::max(pi_hat, static_cast<long long>(cc.real_parts));
    }
    if (d >= 4 && pi_hat > pi_recurrence(delta - 1, d - 1, std::max(k - 1, 0)))
        throw std::logic_error("child covering exceeds pi(Delta-1, d-1, k-1)");
    long long bound =
        d >= 4 ? ceil_div((delta - 2) * pi_recurrence(delta - 1, d - 1, std::max(k - 1, 0)), d - 2)
               : -1;

    std::vector<std::vector<std::vector<int>>> c_parts(p.size());
    long long most = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        int deg_p = (i > 0 ? 1 : 0) + (i + 1 < p.size() ? 1 : 0);
        for (auto& cc : kids_of[i]) cc.parts.resize(pi_hat);
        c_parts[i] = compose_capped(kids_of[i], pi_hat, d - deg_p);
        most = std::max(most, static_cast<long long>(c_parts[i].size()));
    }
    if (bound >= 0 && most > bound) throw std::logic_error("unrooted pw covering exceeds the bound");
    for (long long j = 0; j < std::max<long long>(most, 1); ++j) {
        std::vector<int> part = p_edges;
        for (size_t i = 0; i < p.size(); ++i)
            if (j < static_cast<long long>(c_parts[i].size())) {
                const auto& q = c_parts[i][j];
                part.insert(part.end(), q.begin(), q.end());
            }
        std::sort(part.begin(), part.end());
        part.erase(std::unique(part.begin(), part.end()), part.end());
        cover.parts.push_back(std::move(part));
    }
    return cover;
}

PwUpperResult pw_upper_via_cover(const Tree& t) {
    if (t.vertex_count() < 2) throw std::invalid_argument("needs a non-trivial tree");
    for (int v = 0; v < t.vertex_count(); ++v) {
        int deg = t.degree(v);
        if (deg > 1 && deg < 4)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " is internal with degree " + std::to_string(deg));
    }
    long long mc3 = mincover_size_d(t, 3);
    int pw = pathwidth(t);
    return {pw, mc3, pw <= mc3};
}

} // namespace treecover
