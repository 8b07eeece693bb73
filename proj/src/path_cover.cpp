#include "treecover/path_cover.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "treecover/arith.hpp"

namespace treecover {

int leaf_count(const Tree& t) { return t.leaf_count(); }

namespace {

// subtree leaf counts under a root (leaves of T, not of the subtree)
struct LeafCounts {
    RootedTree rooted;
    std::vector<long long> below;
    long long total;
};

LeafCounts leaf_counts(const Tree& t, int root) {
    LeafCounts lc{RootedTree(t, root), {}, 0};
    int n = t.vertex_count();
    lc.below.assign(n, 0);
    const auto& order = lc.rooted.bfs_order();
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        if (t.degree(v) == 1) lc.below[v] = 1;
        int p = lc.rooted.parent(v);
        if (p >= 0) lc.below[p] += lc.below[v];
    }
    lc.total = t.leaf_count();
    return lc;
}

} // namespace

long long even_even_count(const Tree& t) {
    if (t.vertex_count() < 2) return 0;
    LeafCounts lc = leaf_counts(t, 0);
    long long ee = 0;
    for (int v = 0; v < t.vertex_count(); ++v) {
        if (lc.rooted.parent(v) < 0) continue;
        long long side = lc.below[v];
        if (side % 2 == 0 && (lc.total - side) % 2 == 0) ++ee;
    }
    return ee;
}

namespace {

// Pending path-ends ("tokens", identified by their leaf) that cross into v
// from one child subtree.
struct TokenClass {
    int child;
    std::vector<int> tokens;
};

// Pair tokens across distinct children, largest class first, until only
// `keep` remain; appends the matched leaf pairs.
std::vector<int> match_tokens(std::vector<TokenClass>& classes, long long keep,
                              std::vector<std::pair<int, int>>& pairs) {
    long long remaining = 0;
    for (const auto& c : classes) remaining += static_cast<long long>(c.tokens.size());
    assert((remaining - keep) % 2 == 0);
    while (remaining > keep) {
        std::stable_sort(classes.begin(), classes.end(), [](const TokenClass& a, const TokenClass& b) {
            if (a.tokens.size() != b.tokens.size()) return a.tokens.size() > b.tokens.size();
            return a.child < b.child;
        });
        assert(classes.size() >= 2 && !classes[1].tokens.empty());
        int x = classes[0].tokens.back();
        int y = classes[1].tokens.back();
        classes[0].tokens.pop_back();
        classes[1].tokens.pop_back();
        pairs.push_back({x, y});
        remaining -= 2;
    }
    std::vector<int> up;
    for (const auto& c : classes) up.insert(up.end(), c.tokens.begin(), c.tokens.end());
    assert(static_cast<long long>(up.size()) == keep);
    return up;
}

// path between two vertices as edge ids, via parent pointers
std::vector<int> tree_path_edges(const RootedTree& rt, const std::vector<int>& depth, int x, int y) {
    std::vector<int> out;
    while (depth[x] > depth[y]) {
        out.push_back(rt.parent_edge(x));
        x = rt.parent(x);
    }
    while (depth[y] > depth[x]) {
        out.push_back(rt.parent_edge(y));
        y = rt.parent(y);
    }
    while (x != y) {
        out.push_back(rt.parent_edge(x));
        out.push_back(rt.parent_edge(y));
        x = rt.parent(x);
        y = rt.parent(y);
    }
    return out;
}

// The even-leaf covering as matched leaf pairs: every edge above a vertex
// with an odd (even) leaf count below is crossed once (twice).
std::vector<std::pair<int, int>> even_leaf_pairs(const Tree& t) {
    int n = t.vertex_count();
    int root = -1;
    for (int v = 0; v < n && root < 0; ++v)
        if (t.degree(v) > 1) root = v;
    assert(root >= 0);
    LeafCounts lc = leaf_counts(t, root);
    const auto& order = lc.rooted.bfs_order();
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> up(n); // tokens crossing into the parent
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        if (t.degree(v) == 1) {
            up[v] = {v};
            continue;
        }
        std::vector<TokenClass> classes;
        for (int c : lc.rooted.children(v)) {
            classes.push_back({c, std::move(up[c])});
            up[c].clear();
        }
        long long keep = v == root ? 0 : (lc.below[v] % 2 == 1 ? 1 : 2);
        up[v] = match_tokens(classes, keep, pairs);
    }
    return pairs;
}

PathCoverResult paths_from_pairs(const Tree& t, const std::vector<std::pair<int, int>>& pairs) {
    RootedTree rt(t, 0);
    std::vector<int> depth(t.vertex_count(), 0);
    for (int v : rt.bfs_order())
        if (rt.parent(v) >= 0) depth[v] = depth[rt.parent(v)] + 1;
    PathCoverResult r;
    r.cover.host_edge_count = t.edge_count();
    r.cover.kind = CoverKind::covering;
    r.total_edges = 0;
    for (auto [x, y] : pairs) {
        auto edges = tree_path_edges(rt, depth, x, y);
        r.total_edges += static_cast<long long>(edges.size());
        r.cover.parts.push_back(std::move(edges));
    }
    r.ee_count = even_even_count(t);
    return r;
}

} // namespace

PathCoverResult min_path_cover_even(const Tree& t) {
    if (t.vertex_count() < 2) throw std::invalid_argument("needs a non-trivial tree");
    int l = t.leaf_count();
    if (l % 2 != 0) throw std::invalid_argument("leaf count must be even");
    if (t.vertex_count() == 2) {
        PathCoverResult r;
        r.cover.host_edge_count = 1;
        r.cover.kind = CoverKind::covering;
        r.cover.parts = {{0}};
        r.total_edges = 1;
        r.ee_count = 0;
        return r;
    }
    PathCoverResult r = paths_from_pairs(t, even_leaf_pairs(t));
    assert(static_cast<long long>(r.cover.parts.size()) == l / 2);
    assert(r.total_edges == t.vertex_count() - 1 + r.ee_count);
    return r;
}

PathCoverResult min_path_cover(const Tree& t) {
    if (t.vertex_count() < 2) throw std::invalid_argument("needs a non-trivial tree");
    int l = t.leaf_count();
    if (l % 2 == 0) return min_path_cover_even(t);

    // odd leaf count: split off the pendant path of the smallest leaf and
    // run the even algorithm on the remainder
    int x = -1;
    for (int v = 0; v < t.vertex_count() && x < 0; ++v)
        if (t.degree(v) == 1) x = v;
    std::vector<int> chain_vertices{x};
    std::vector<int> chain_edges;
    int prev = -1, cur = x;
    while (t.degree(cur) < 3) {
        int next = -1;
        for (size_t i = 0; i < t.neighbors(cur).size(); ++i)
            if (t.neighbors(cur)[i] != prev) {
                next = t.neighbors(cur)[i];
                chain_edges.push_back(t.neighbor_edge_ids(cur)[i]);
                break;
            }
        assert(next >= 0); // an odd leaf count forces a branch vertex
        prev = cur;
        cur = next;
        if (t.degree(cur) < 3) chain_vertices.push_back(cur);
    }

    // remainder tree, with a backmap from its edge ids to the host's
    std::vector<char> removed(t.vertex_count(), 0);
    for (int v : chain_vertices) removed[v] = 1;
    std::vector<int> verts;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (!removed[v]) verts.push_back(v);
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<Edge> edges;
    for (int v : verts)
        for (int w : t.neighbors(v))
            if (!removed[w] && v < w) edges.push_back({local(v), local(w)});
    Tree rest(static_cast<int>(verts.size()), edges);
    std::vector<int> host_eid(rest.edge_count());
    for (int e = 0; e < rest.edge_count(); ++e) {
        auto [a, b] = rest.edge(e);
        host_eid[e] = t.edge_id(verts[a], verts[b]);
    }

    PathCoverResult inner = min_path_cover_even(rest);
    PathCoverResult r;
    r.cover.host_edge_count = t.edge_count();
    r.cover.kind = CoverKind::covering;
    r.total_edges = 0;
    for (auto& p : inner.cover.parts) {
        for (int& e : p) e = host_eid[e];
        r.total_edges += static_cast<long long>(p.size());
        r.cover.parts.push_back(std::move(p));
    }
    r.cover.parts.push_back(chain_edges);
    r.total_edges += static_cast<long long>(chain_edges.size());
    r.ee_count = even_even_count(t);
    assert(static_cast<long long>(r.cover.parts.size()) == (l + 1) / 2);
    return r;
}

long long cover_edge_budget(const Tree& t) {
    if (t.vertex_count() < 2) throw std::invalid_argument("needs a non-trivial tree");
    return 2LL * t.vertex_count() - 2 - t.leaf_count();
}

std::vector<int> centroid_set(const Tree& t) {
    if (t.vertex_count() < 2) throw std::invalid_argument("needs a non-trivial tree");
    LeafCounts lc = leaf_counts(t, 0);
    long long cap = ceil_div(lc.total, 2);
    std::vector<int> out;
    for (int v = 0; v < t.vertex_count(); ++v) {
        long long worst = lc.total - lc.below[v]; // the component toward the root
        for (int w : t.neighbors(v))
            if (w != lc.rooted.parent(v)) worst = std::max(worst, lc.below[w]);
        if (worst <= cap) out.push_back(v);
    }
    return out;
}

std::vector<int> span_of_leaves(const Tree& t, const std::vector<int>& s) {
    if (s.size() < 2) throw std::invalid_argument("span needs at least two leaves");
    std::vector<char> in_s(t.vertex_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= t.vertex_count()) throw std::invalid_argument("vertex out of range");
        if (t.degree(v) != 1) throw std::invalid_argument("vertex " + std::to_string(v) + " is not a leaf");
        if (in_s[v]) throw std::invalid_argument("repeated leaf");
        in_s[v] = 1;
    }
    // an edge lies on a leafy path of S iff S splits across it
    RootedTree rt(t, 0);
    std::vector<long long> cnt(t.vertex_count(), 0);
    const auto& order = rt.bfs_order();
    for (int i = t.vertex_count() - 1; i >= 0; --i) {
        int v = order[i];
        if (in_s[v]) ++cnt[v];
        if (rt.parent(v) >= 0) cnt[rt.parent(v)] += cnt[v];
    }
    std::vector<int> out;
    long long total = static_cast<long long>(s.size());
    for (int v = 0; v < t.vertex_count(); ++v)
        if (rt.parent(v) >= 0 && cnt[v] > 0 && cnt[v] < total) out.push_back(rt.parent_edge(v));
    std::sort(out.begin(), out.end());
    return out;
}

SubtreeCover cover_few_leaves(const Tree& t, int d) {
    if (d < 2) throw std::invalid_argument("need d >= 2");
    if (t.vertex_count() < 2) throw std::invalid_argument("needs a non-trivial tree");
    int n = t.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);

    // pendant chain of an alive leaf: walks to the nearest alive vertex of
    // degree >= 3; returns (-1, {}) when the alive tree is a bare path
    auto pendant = [&](int leaf) {
        std::vector<int> chain{leaf};
        int prev = -1, cur = leaf;
        while (deg[cur] < 3) {
            int next = -1;
            for (int w : t.neighbors(cur))
                if (alive[w] && w != prev) {
                    next = w;
                    break;
                }
            if (next < 0) return std::make_pair(-1, std::vector<int>{});
            prev = cur;
            cur = next;
            if (deg[cur] < 3) {
                if (deg[cur] == 1) return std::make_pair(-1, std::vector<int>{}); // path
                chain.push_back(cur);
            }
        }
        return std::make_pair(cur, chain);
    };

    std::vector<std::vector<int>> groups;   // leaf groups, spanned later
    std::vector<std::vector<int>> singles;  // pendant-path parts (edge ids)
    while (true) {
        std::vector<int> leaves;
        for (int v = 0; v < n; ++v)
            if (alive[v] && deg[v] == 1) leaves.push_back(v);
        int l = static_cast<int>(leaves.size());
        if (l <= d) {
            groups.push_back(leaves);
            break;
        }
        // branch vertices with a pendant-attached leaf, each with its
        // smallest such leaf
        std::vector<std::pair<int, int>> branch_leaf; // (branch, leaf)
        std::vector<int> branch_of(n, -1);
        for (int x : leaves) {
            auto [b, chain] = pendant(x);
            assert(b >= 0); // l > d >= 2 rules out a bare path
            branch_of[x] = b;
            bool seen = false;
            for (auto& [bb, xx] : branch_leaf)
                if (bb == b) {
                    seen = true;
                    xx = std::min(xx, x);
                    break;
                }
            if (!seen) branch_leaf.push_back({b, x});
        }
        std::sort(branch_leaf.begin(), branch_leaf.end());
        if (static_cast<int>(branch_leaf.size()) >= d) {
            // remove the pendant chains of one leaf per branch vertex,
            // for the d smallest branch vertices
            std::vector<int> group;
            for (int i = 0; i < d; ++i) {
                int x = branch_leaf[i].second;
                group.push_back(x);
                auto [b, chain] = pendant(x);
                for (int v : chain) alive[v] = 0;
                --deg[b];
            }
            std::sort(group.begin(), group.end());
            groups.push_back(std::move(group));
            continue;
        }
        // few branch vertices: one group hits all of them, the remaining
        // leaves are chunked; leftover singletons keep their pendant path
        std::vector<int> group;
        std::vector<char> used(n, 0);
        for (auto [b, x] : branch_leaf) {
            group.push_back(x);
            used[x] = 1;
        }
        for (int x : leaves) {
            if (static_cast<int>(group.size()) == d) break;
            if (!used[x]) {
                group.push_back(x);
                used[x] = 1;
            }
        }
        std::sort(group.begin(), group.end());
        groups.push_back(std::move(group));
        std::vector<int> rest;
        for (int x : leaves)
            if (!used[x]) rest.push_back(x);
        for (size_t at = 0; at < rest.size(); at += d) {
            size_t end = std::min(at + static_cast<size_t>(d), rest.size());
            if (end - at == 1) {
                auto [b, chain] = pendant(rest[at]);
                assert(b >= 0);
                std::vector<int> part;
                int prev = rest[at];
                for (size_t i = 1; i < chain.size(); ++i) {
                    part.push_back(t.edge_id(prev, chain[i]));
                    prev = chain[i];
                }
                part.push_back(t.edge_id(prev, b));
                singles.push_back(std::move(part));
            } else {
                groups.emplace_back(rest.begin() + at, rest.begin() + end);
            }
        }
        break;
    }

    SubtreeCover cover;
    cover.host_edge_count = t.edge_count();
    cover.kind = CoverKind::covering;
    for (const auto& g : groups) {
        if (g.size() == 1) {
            // the whole alive tree collapsed to one pendant leaf: cover its chain
            auto [b, chain] = pendant(g[0]);
            std::vector<int> part;
            int prev = g[0];
            for (size_t i = 1; i < chain.size(); ++i) {
                part.push_back(t.edge_id(prev, chain[i]));
                prev = chain[i];
            }
            if (b >= 0) part.push_back(t.edge_id(prev, b));
            cover.parts.push_back(std::move(part));
        } else {
            cover.parts.push_back(span_of_leaves(t, g));
        }
    }
    for (auto& p : singles) cover.parts.push_back(std::move(p));
    return cover;
}

} // namespace treecover
