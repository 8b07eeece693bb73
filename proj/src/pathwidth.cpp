#include "treecover/pathwidth.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "treecover/arith.hpp"

namespace treecover {

// ---------------------------------------------------------------------------
// Exact pathwidth.
//
// Bottom-up over a rooted copy of the tree. The state of a rooted subtree C
// describes how C is dismantled by vertex-disjoint paths at strictly
// decreasing levels ("a peel at level k" is a path whose removal leaves only
// components of pathwidth <= k-1 beside the component holding the subtree
// root, which the next, lower-level peel continues on):
//
//   levels   l_1 > l_2 > ... > l_t: l_1 = pw(C); peeling one path at level
//            l_i leaves a minimal attached residue of pathwidth l_{i+1};
//            the final level admits a full consume (a single path P, the
//            root may lie on it, with all components of C - V(P) of
//            pathwidth <= l_t - 1).
//   anchored the final consume can end AT the subtree root (so a parent
//            path may enter the subtree and continue through it). At level
//            l_t + 1 an anchored consume always exists (P = {root}).
// ---------------------------------------------------------------------------

namespace {

struct PwState {
    std::vector<int> levels; // strictly decreasing, front() = pathwidth
    bool anchored = false;

    int pw() const { return levels.front(); }
    bool terminal() const { return levels.size() == 1; }
    PwState suffix() const { return {std::vector<int>(levels.begin() + 1, levels.end()), anchored}; }
};

// smallest level at which a parent path can enter the subtree and consume it
int anchor_level(const PwState& s) {
    return (s.terminal() && s.anchored) ? s.pw() : s.pw() + 1;
}

int combine_pw(const std::vector<PwState>& kids);

bool through_feasible(const std::vector<PwState>& kids, int k, int max_descents) {
    int heavy = 0;
    for (const auto& s : kids) {
        if (s.pw() < k) continue;
        if (++heavy > max_descents) return false;
        if (anchor_level(s) > k) return false;
    }
    return true;
}

// index of the unique child with pw >= k, or -1
int unique_heavy(const std::vector<PwState>& kids, int k) {
    int idx = -1;
    for (size_t j = 0; j < kids.size(); ++j) {
        if (kids[j].pw() >= k) {
            if (idx >= 0) return -1;
            idx = static_cast<int>(j);
        }
    }
    return idx;
}

// children of the residue tree after drilling child a one level
std::vector<PwState> residue_kids(const std::vector<PwState>& kids, int a) {
    std::vector<PwState> rest;
    rest.reserve(kids.size());
    for (size_t j = 0; j < kids.size(); ++j)
        if (static_cast<int>(j) != a) rest.push_back(kids[j]);
    if (!kids[a].terminal()) rest.push_back(kids[a].suffix());
    return rest;
}

bool avoid_feasible(const std::vector<PwState>& kids, int k) {
    int a = unique_heavy(kids, k);
    if (a < 0 || kids[a].pw() != k) return false;
    return combine_pw(residue_kids(kids, a)) <= k - 1;
}

int combine_pw(const std::vector<PwState>& kids) {
    if (kids.empty()) return 0;
    int maxpw = 0;
    for (const auto& s : kids) maxpw = std::max(maxpw, s.pw());
    int k = std::max(1, maxpw);
    if (through_feasible(kids, k, 2) || avoid_feasible(kids, k)) return k;
    return k + 1; // no child has pw >= k+1, so a through peel works
}

PwState combine_state(const std::vector<PwState>& kids) {
    if (kids.empty()) return {{0}, true};
    int L = combine_pw(kids);
    if (through_feasible(kids, L, 2))
        return {{L}, through_feasible(kids, L, 1)};
    int a = unique_heavy(kids, L);
    assert(a >= 0 && kids[a].pw() == L);
    PwState sub = combine_state(residue_kids(kids, a));
    assert(sub.pw() <= L - 1);
    std::vector<int> levels{L};
    levels.insert(levels.end(), sub.levels.begin(), sub.levels.end());
    return {std::move(levels), sub.anchored};
}

struct PwAnalysis {
    RootedTree rooted;
    std::vector<PwState> state;          // per vertex, for its subtree
    std::vector<std::vector<int>> kids;  // children in neighbor-id order
};

PwAnalysis analyze(const Tree& t) {
    PwAnalysis a{RootedTree(t, 0), {}, {}};
    int n = t.vertex_count();
    a.state.resize(n);
    a.kids.resize(n);
    const auto& order = a.rooted.bfs_order();
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        a.kids[v] = a.rooted.children(v);
        std::vector<PwState> ks;
        ks.reserve(a.kids[v].size());
        for (int c : a.kids[v]) ks.push_back(a.state[c]);
        a.state[v] = combine_state(ks);
    }
    return a;
}

// Endpoint-anchored consume path of the subtree at v, valid at level k
// (requires anchor_level(state(v)) <= k). Descends into the mandatory
// heavy child if any, else pads with the deepest child to keep witness
// paths maximal.
void anchored_path(const PwAnalysis& a, int v, int k, std::vector<int>& out) {
    out.push_back(v);
    int pick = -1, pick_pw = -1;
    for (int c : a.kids[v]) {
        int cpw = a.state[c].pw();
        if (cpw >= k) {
            pick = c; // unique by feasibility
            break;
        }
        if (cpw > pick_pw) {
            pick_pw = cpw;
            pick = c;
        }
    }
    if (pick >= 0) anchored_path(a, pick, k, out);
}

// Single-path consume of the subtree at v at level k (v on the path,
// possibly interior): descends into up to two children.
std::vector<int> consume_path(const PwAnalysis& a, int v, int k) {
    std::vector<int> mandatory, optional;
    for (int c : a.kids[v]) {
        if (a.state[c].pw() >= k)
            mandatory.push_back(c);
        else
            optional.push_back(c);
    }
    assert(mandatory.size() <= 2);
    std::stable_sort(optional.begin(), optional.end(),
                     [&](int x, int y) { return a.state[x].pw() > a.state[y].pw(); });
    for (int c : optional) {
        if (mandatory.size() >= 2) break;
        mandatory.push_back(c);
    }
    std::vector<int> left, right;
    if (!mandatory.empty()) anchored_path(a, mandatory[0], k, left);
    if (mandatory.size() >= 2) anchored_path(a, mandatory[1], k, right);
    std::vector<int> path(left.rbegin(), left.rend());
    path.push_back(v);
    path.insert(path.end(), right.begin(), right.end());
    return path;
}

// First peel path of the subtree at v, at level state(v).pw().
std::vector<int> drill_path(const PwAnalysis& a, int v) {
    const PwState& s = a.state[v];
    std::vector<PwState> ks;
    for (int c : a.kids[v]) ks.push_back(a.state[c]);
    if (through_feasible(ks, s.pw(), 2)) return consume_path(a, v, s.pw());
    int heavy = unique_heavy(ks, s.pw());
    assert(heavy >= 0);
    return drill_path(a, a.kids[v][heavy]);
}

} // namespace

int pathwidth(const Tree& t) {
    if (t.vertex_count() == 1) return 0;
    return analyze(t).state[0].pw();
}

std::vector<int> peel_path(const Tree& t) {
    if (t.vertex_count() < 2) throw std::invalid_argument("peel_path needs a non-trivial tree");
    PwAnalysis a = analyze(t);
    return drill_path(a, 0);
}

PeelSubtree rooted_peel_subtree(const Tree& t, int r) {
    if (t.vertex_count() < 2) throw std::invalid_argument("need a tree with at least one edge");
    if (r < 0 || r >= t.vertex_count()) throw std::invalid_argument("root out of range");
    std::vector<int> path = peel_path(t);
    std::vector<char> on_path(t.vertex_count(), 0);
    for (int v : path) on_path[v] = 1;

    // extend P to at least one edge (removing more never raises pathwidth)
    if (path.size() == 1) {
        int v = path[0];
        int best = -1;
        for (int w : t.neighbors(v)) best = best < 0 ? w : std::min(best, w);
        path.push_back(best);
        on_path[best] = 1;
    }

    PeelSubtree h;
    h.vertices = path;
    for (size_t i = 0; i + 1 < path.size(); ++i) h.edge_ids.push_back(t.edge_id(path[i], path[i + 1]));

    if (!on_path[r]) {
        // connector Q from r to the path
        std::vector<int> parent(t.vertex_count(), -2);
        parent[r] = -1;
        std::vector<int> queue{r};
        int hit = -1;
        for (size_t head = 0; head < queue.size() && hit < 0; ++head) {
            int v = queue[head];
            for (int w : t.neighbors(v)) {
                if (parent[w] != -2) continue;
                parent[w] = v;
                if (on_path[w]) {
                    hit = w;
                    break;
                }
                queue.push_back(w);
            }
        }
        assert(hit >= 0);
        for (int v = hit; parent[v] != -1; v = parent[v]) {
            h.edge_ids.push_back(t.edge_id(v, parent[v]));
            h.vertices.push_back(parent[v]);
        }
    }
    return h;
}

// ---------------------------------------------------------------------------
// pi recurrence and estimate
// ---------------------------------------------------------------------------

long long pi_recurrence(int delta, int d, int k) {
    if (d < 3 || delta < d || k < 0) throw std::invalid_argument("need Delta >= d >= 3 and k >= 0");
    static std::map<std::tuple<int, int, int>, long long> memo;
    if (k == 0 || delta == d) return 1;
    auto key = std::make_tuple(delta, d, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long pi = pi_recurrence(delta, d, k - 1);
    long long value;
    if (delta == d + 1) {
        long long t = pi % (static_cast<long long>(d) * (d - 1));
        if (t < static_cast<long long>(d - 1) * (d - 2))
            value = ceil_div((d - 1) * pi - 2 * floor_div(pi, static_cast<long long>(d) * (d - 1)), d - 2);
        else
            value = ceil_div(d * pi, d - 1) + ceil_div(pi, static_cast<long long>(d) * (d - 1));
    } else {
        long long lambda = ceil_div(checked_mul(delta - 1, pi), d - 1);
        value = ceil_div(checked_add(checked_mul(delta - 2, pi), 2 * lambda), d);
    }
    memo[key] = value;
    return value;
}

long long pi_estimate(int delta, int d, int k) {
    if (d < 2 || delta < d || k < 0) throw std::invalid_argument("need Delta >= d >= 2 and k >= 0");
    long long base = ceil_div(delta - 2 + 2 * ceil_div(delta - 1, d - 1), d);
    long long value = 1;
    for (int i = 0; i < k; ++i) value = checked_mul(value, base);
    return value;
}

// ---------------------------------------------------------------------------
// caterpillar covering
// ---------------------------------------------------------------------------

bool is_caterpillar(const Tree& t) {
    // removing all leaves must leave a path (or nothing)
    int n = t.vertex_count();
    if (n <= 2) return true;
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) == 1) continue;
        int internal = 0;
        for (int w : t.neighbors(v))
            if (t.degree(w) > 1) ++internal;
        if (internal > 2) return false;
    }
    return true; // spine degrees <= 2 and connected => a path
}

SubtreeCover cover_caterpillar(const Tree& t, int d) {
    if (d < 3) throw std::invalid_argument("need d >= 3");
    if (!is_caterpillar(t)) throw std::invalid_argument("input is not a caterpillar");
    int n = t.vertex_count();
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
    long long tcount = ceil_div(delta - 2, d - 2);
    // spine = non-leaf vertices (n = 2 is covered by the delta <= d branch)
    std::vector<char> spine(n, 0);
    for (int v = 0; v < n; ++v) spine[v] = t.degree(v) > 1;
    std::vector<int> spine_edges;
    std::vector<std::vector<std::vector<int>>> groups(n); // per vertex, leaf-edge chunks
    for (int v = 0; v < n; ++v) {
        if (!spine[v]) continue;
        int deg_p = 0;
        const auto& nb = t.neighbors(v);
        const auto& ne = t.neighbor_edge_ids(v);
        std::vector<int> leaf_edges;
        for (size_t i = 0; i < nb.size(); ++i) {
            if (spine[nb[i]]) {
                ++deg_p;
                if (v < nb[i]) spine_edges.push_back(ne[i]);
            } else {
                leaf_edges.push_back(ne[i]);
            }
        }
        int cap = d - deg_p;
        for (size_t at = 0; at < leaf_edges.size(); at += cap) {
            size_t end = std::min(at + cap, leaf_edges.size());
            groups[v].emplace_back(leaf_edges.begin() + at, leaf_edges.begin() + end);
        }
        assert(static_cast<long long>(groups[v].size()) <= tcount);
    }
    cover.parts.assign(tcount, spine_edges);
    for (int v = 0; v < n; ++v)
        for (size_t g = 0; g < groups[v].size(); ++g)
            cover.parts[g].insert(cover.parts[g].end(), groups[v][g].begin(), groups[v][g].end());
    // a star has no spine edge, so unused slots would come out empty
    std::erase_if(cover.parts, [](const std::vector<int>& p) { return p.empty(); });
    return cover;
}

} // namespace treecover
