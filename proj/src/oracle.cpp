#include "treecover/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "treecover/arith.hpp"

namespace treecover {

namespace {

void check_cap(long long value, long long cap, const char* what) {
    if (value > cap)
        throw std::invalid_argument(std::string("oracle cap exceeded for ") + what + ": " +
                                    std::to_string(value) + " > " + std::to_string(cap));
}

// ---------------------------------------------------------------- minpart

struct MinpartSearch {
    const Tree& t;
    int d;
    std::vector<Edge> order; // edges in DFS order (ancestors first)
    std::vector<std::vector<int>> part_deg;
    long long best;

    explicit MinpartSearch(const Tree& tr, int dd) : t(tr), d(dd) {
        std::vector<char> seen(t.vertex_count(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : t.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back({v, w});
                    stack.push_back(w);
                }
        }
        best = t.edge_count();
    }

    void rec(size_t i, size_t used) {
        if (static_cast<long long>(used) >= best) return;
        if (i == order.size()) {
            best = static_cast<long long>(used);
            return;
        }
        auto [u, v] = order[i];
        for (size_t p = 0; p < used; ++p) {
            auto& deg = part_deg[p];
            bool touches = deg[u] > 0 || deg[v] > 0;
            if (!touches || deg[u] >= d || deg[v] >= d) continue;
            ++deg[u];
            ++deg[v];
            rec(i + 1, used);
            --deg[u];
            --deg[v];
        }
        // fresh part
        if (part_deg.size() == used) part_deg.emplace_back(t.vertex_count(), 0);
        auto& deg = part_deg[used];
        ++deg[u];
        ++deg[v];
        rec(i + 1, used + 1);
        --deg[u];
        --deg[v];
    }
};

} // namespace

long long oracle_minpart(const Tree& t, int d, int cap) {
    if (d < 2) throw std::invalid_argument("need d >= 2");
    if (t.vertex_count() < 2) throw std::invalid_argument("needs a non-trivial tree");
    check_cap(t.vertex_count(), cap, "oracle_minpart");
    MinpartSearch s(t, d);
    s.rec(0, 0);
    return s.best;
}

// ---------------------------------------------------------------- covers

namespace {

// exact set cover over edge masks
long long min_set_cover(int m, const std::vector<unsigned>& subs) {
    unsigned full = (m == 32) ? 0xffffffffu : ((1u << m) - 1);
    std::vector<unsigned> per_edge_best; // subs containing a given edge
    std::vector<std::vector<unsigned>> by_edge(m);
    for (unsigned s : subs)
        for (int e = 0; e < m; ++e)
            if (s >> e & 1) by_edge[e].push_back(s);
    std::unordered_map<unsigned, long long> memo;
    struct Solver {
        unsigned full;
        int m;
        const std::vector<std::vector<unsigned>>& by_edge;
        std::unordered_map<unsigned, long long>& memo;
        long long run(unsigned covered) {
            if (covered == full) return 0;
            auto it = memo.find(covered);
            if (it != memo.end()) return it->second;
            int e = 0;
            while (covered >> e & 1) ++e;
            long long best = -1;
            for (unsigned s : by_edge[e]) {
                long long v = 1 + run(covered | s);
                if (best < 0 || v < best) best = v;
            }
            memo[covered] = best;
            return best;
        }
    } solver{full, m, by_edge, memo};
    return solver.run(0);
}

// all connected edge subsets X with deg_X(v) = min(f(v), deg_T(v)) on V(X)
std::vector<unsigned> maximal_subtrees(const Tree& t, const BindingFunction& f) {
    int m = t.edge_count();
    std::vector<unsigned> out;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> deg(t.vertex_count(), 0);
        int cnt = 0;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                auto [u, v] = t.edge(e);
                ++deg[u];
                ++deg[v];
                ++cnt;
            }
        int verts = 0;
        bool ok = true;
        for (int v = 0; v < t.vertex_count() && ok; ++v) {
            if (deg[v] == 0) continue;
            ++verts;
            if (deg[v] != std::min(f(v), t.degree(v))) ok = false;
        }
        if (!ok || verts != cnt + 1) continue; // not maximal or not connected
        out.push_back(mask);
    }
    return out;
}

} // namespace

long long oracle_mincover(const Tree& t, const BindingFunction& f, int edge_cap) {
    if (t.vertex_count() < 2) throw std::invalid_argument("needs a non-trivial tree");
    check_cap(t.edge_count(), edge_cap, "oracle_mincover");
    auto subs = maximal_subtrees(t, f);
    if (subs.empty()) throw std::logic_error("no maximal subtree found");
    return min_set_cover(t.edge_count(), subs);
}

long long oracle_mincover(const Tree& t, int d, int edge_cap) {
    return oracle_mincover(t, BindingFunction::uniform(t.vertex_count(), d), edge_cap);
}

long long oracle_rmc(const RootedTree& t, const BindingFunction& f, int edge_cap) {
    const Tree& tree = t.tree();
    if (tree.vertex_count() < 2) return tree.vertex_count() == 1 ? 1 : 0;
    check_cap(tree.edge_count(), edge_cap, "oracle_rmc");
    int m = tree.edge_count();
    std::vector<unsigned> subs;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> outdeg(tree.vertex_count(), 0);
        std::vector<char> touched(tree.vertex_count(), 0);
        int cnt = 0;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                auto [u, v] = tree.edge(e);
                int child = t.parent(v) == u ? v : u;
                int src = child == v ? u : v;
                ++outdeg[src];
                touched[u] = touched[v] = 1;
                ++cnt;
            }
        if (!touched[t.root()]) continue;
        int verts = 0;
        bool ok = true;
        for (int v = 0; v < tree.vertex_count() && ok; ++v) {
            if (!touched[v]) continue;
            ++verts;
            if (outdeg[v] != std::min<long long>(f(v), t.outdegree(v))) ok = false;
        }
        if (!ok || verts != cnt + 1) continue; // not rooted-maximal or not connected
        subs.push_back(mask);
    }
    if (subs.empty()) throw std::logic_error("no rooted maximal subtree found");
    return min_set_cover(m, subs);
}

long long oracle_rmc(const RootedTree& t, int d, int edge_cap) {
    return oracle_rmc(t, BindingFunction::uniform(t.tree().vertex_count(), d), edge_cap);
}

// ---------------------------------------------------------------- pathwidth

namespace {

struct PwOracle {
    const Tree& t;
    std::unordered_map<unsigned, int> memo;

    int components_max(unsigned mask, auto&& self) {
        // max pathwidth over the components induced by mask (0 when empty)
        int best = 0;
        unsigned left = mask;
        while (left) {
            int v = __builtin_ctz(left);
            unsigned comp = 0;
            std::vector<int> stack{v};
            comp |= 1u << v;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int w : t.neighbors(x))
                    if ((mask >> w & 1) && !(comp >> w & 1)) {
                        comp |= 1u << w;
                        stack.push_back(w);
                    }
            }
            best = std::max(best, self(comp));
            left &= ~comp;
        }
        return best;
    }

    int pw(unsigned mask) {
        if (__builtin_popcount(mask) <= 1) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        auto self = [&](unsigned m) { return pw(m); };
        int n = t.vertex_count();
        int best = -1;
        // all paths with both endpoints in mask and interior within mask
        for (int u = 0; u < n; ++u) {
            if (!(mask >> u & 1)) continue;
            // BFS from u inside mask
            std::vector<int> parent(n, -2);
            parent[u] = -1;
            std::vector<int> queue{u};
            for (size_t head = 0; head < queue.size(); ++head) {
                int x = queue[head];
                for (int w : t.neighbors(x))
                    if ((mask >> w & 1) && parent[w] == -2) {
                        parent[w] = x;
                        queue.push_back(w);
                    }
            }
            for (int v : queue) {
                if (v < u) continue; // unordered pairs once (v == u allowed)
                unsigned pathmask = 0;
                for (int x = v; x != -1; x = parent[x]) pathmask |= 1u << x;
                int val = 1 + components_max(mask & ~pathmask, self);
                if (best < 0 || val < best) best = val;
            }
        }
        memo[mask] = best;
        return best;
    }
};

} // namespace

int oracle_pathwidth(const Tree& t, int cap) {
    check_cap(t.vertex_count(), std::min(cap, 31), "oracle_pathwidth");
    if (t.vertex_count() == 1) return 0;
    PwOracle o{t, {}};
    return o.pw((t.vertex_count() == 31) ? 0x7fffffffu : ((1u << t.vertex_count()) - 1));
}

// ---------------------------------------------------------------- cliques

namespace {

long long cliques_rec(std::vector<long long> sizes, int d,
                      std::map<std::vector<long long>, long long>& memo) {
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    while (!sizes.empty() && sizes.back() == 0) sizes.pop_back();
    if (sizes.empty()) return 0;
    auto it = memo.find(sizes);
    if (it != memo.end()) return it->second;
    int k = static_cast<int>(sizes.size());
    long long best = -1;
    // take one vertex from every class of a nonempty subset of size <= d
    for (unsigned pick = 1; pick < (1u << k); ++pick) {
        if (__builtin_popcount(pick) > d) continue;
        std::vector<long long> next = sizes;
        for (int i = 0; i < k; ++i)
            if (pick >> i & 1) --next[i];
        long long v = 1 + cliques_rec(std::move(next), d, memo);
        if (best < 0 || v < best) best = v;
    }
    memo[sizes] = best;
    return best;
}

} // namespace

long long oracle_cliques(const MultipartiteSpec& spec, int d) {
    if (spec.classes() < 1 || d < 1) throw std::invalid_argument("need k >= 1 and d >= 1");
    if (d > spec.classes()) throw std::invalid_argument("d must not exceed the class count");
    check_cap(spec.total(), 24, "oracle_cliques");
    check_cap(spec.classes(), 8, "oracle_cliques classes");
    std::map<std::vector<long long>, long long> memo;
    return cliques_rec(spec.class_sizes, d, memo);
}

// ---------------------------------------------------------------- ilps

long long oracle_ilp1(long long A, long long B, int d) {
    if (A < 1 || B < 1 || d < 2 || A > B || (d - 2) * B > (d - 1) * A)
        throw std::invalid_argument("ilp1 hypothesis violated");
    long long best = -1;
    for (long long x = 0; x <= B + d; ++x)
        for (long long y1 = 0; y1 <= B + d; ++y1)
            for (long long y2 = y1; y2 <= B + d; ++y2) { // symmetric in y1, y2
                if ((d - 1) * (x + y1) < B || (d - 1) * (x + y2) < B) continue;
                long long z =
                    std::max<long long>(0, ceil_div(A - (d - 2) * x - (d - 1) * (y1 + y2), d));
                long long v = x + y1 + y2 + z;
                if (best < 0 || v < best) best = v;
            }
    return best;
}

long long oracle_ilp2(long long A, int d) {
    if (A < 1 || d < 2) throw std::invalid_argument("need A >= 1 and d >= 2");
    long long best = -1;
    // scan y1, y2 over the signed box; x and z take their minimal values
    // (raising x trades against z at rate (d-2)/(d-1) < 1, never better)
    for (long long y1 = -A; y1 <= 3 * A; ++y1)
        for (long long y2 = y1; y2 <= 3 * A; ++y2) {
            long long x = ceil_div(d * A, d - 1) - std::min(y1, y2);
            long long z = ceil_div((d - 1) * A - (d - 2) * x, d - 1) - y1 - y2;
            long long v = x + y1 + y2 + z;
            if (best < 0 || v < best) best = v;
        }
    return best;
}

} // namespace treecover
