#include "treecover/cover_engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "treecover/arith.hpp"
#include "treecover/clique_partition.hpp"

namespace treecover {

long long ceill(long long num, long long den, int k) {
    if (num <= 0 || den <= 0) throw std::invalid_argument("ceill needs x > 0");
    if (k < 0) throw std::invalid_argument("ceill needs k >= 0");
    long long value = 1;
    for (int i = 0; i < k; ++i) value = ceil_div(checked_mul(num, value), den);
    return value;
}

namespace {

void check_binding(const RootedTree& t, const BindingFunction& f, int min_budget) {
    if (f.size() != t.tree().vertex_count())
        throw std::invalid_argument("binding function size mismatch");
    for (int v = 0; v < f.size(); ++v)
        if (f(v) < min_budget)
            throw std::invalid_argument("binding function must be >= " +
                                        std::to_string(min_budget) + " everywhere");
}

// rmc values for every subtree, indexed by vertex
std::vector<long long> rmc_table(const RootedTree& t, const BindingFunction& f) {
    int n = t.tree().vertex_count();
    std::vector<long long> c(n, 0);
    const auto& order = t.bfs_order();
    std::vector<long long> sum(n, 0), mx(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        c[v] = std::max<long long>(1, std::max(mx[v], ceil_div(sum[v], f(v))));
        int p = t.parent(v);
        if (p >= 0) {
            sum[p] += c[v];
            mx[p] = std::max(mx[p], c[v]);
        }
    }
    return c;
}

} // namespace

long long rmc(const RootedTree& t, const BindingFunction& f) {
    check_binding(t, f, 1);
    return rmc_table(t, f)[t.root()];
}

long long rmc(const RootedTree& t, int d) {
    return rmc(t, BindingFunction::uniform(t.tree().vertex_count(), d));
}

SubtreeCover rmc_cover(const RootedTree& t, const BindingFunction& f) {
    check_binding(t, f, 1);
    const Tree& tree = t.tree();
    int n = tree.vertex_count();
    std::vector<long long> value = rmc_table(t, f);

    // bottom-up: covers[v] = parts (edge-id lists) of the subtree at v,
    // every part containing v; exactly value[v] parts
    std::vector<std::vector<std::vector<int>>> covers(n);
    const auto& order = t.bfs_order();
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        std::vector<int> kids = t.children(v);
        if (kids.empty()) {
            covers[v] = {{}}; // the trivial subtree: one edgeless part
            continue;
        }
        MultipartiteSpec spec;
        for (int c : kids) spec.class_sizes.push_back(value[c]);
        int cap = static_cast<int>(std::min<long long>(f(v), spec.classes()));
        CliquePartition cp = cliques_partition(spec, cap);
        assert(static_cast<long long>(cp.cliques.size()) == value[v]);
        covers[v].reserve(cp.cliques.size());
        for (const auto& clique : cp.cliques) {
            std::vector<int> part;
            for (const CliqueVertex& cv : clique) {
                int child = kids[cv.cls];
                const auto& sub = covers[child][cv.index];
                part.push_back(t.parent_edge(child));
                part.insert(part.end(), sub.begin(), sub.end());
            }
            covers[v].push_back(std::move(part));
        }
        for (int c : kids) {
            covers[c].clear();
            covers[c].shrink_to_fit();
        }
    }

    SubtreeCover cover;
    cover.host_edge_count = tree.edge_count();
    cover.kind = CoverKind::covering;
    cover.rooted_at = t.root();
    cover.parts = std::move(covers[t.root()]);
    // a trivial host tree yields one edgeless part; drop it
    std::erase_if(cover.parts, [](const std::vector<int>& p) { return p.empty(); });
    if (cover.parts.empty() && tree.edge_count() > 0)
        throw std::logic_error("internal error: empty covering of a non-trivial tree");
    return cover;
}

SubtreeCover rmc_cover(const RootedTree& t, int d) {
    return rmc_cover(t, BindingFunction::uniform(t.tree().vertex_count(), d));
}

namespace {

BindingFunction reduce_to_rooted(const BindingFunction& f, int root) {
    BindingFunction g = f;
    for (int v = 0; v < g.size(); ++v)
        if (v != root) --g.budget[v];
    return g;
}

// rmc_g(T, r) for one root, without materializing a RootedTree
long long rooted_value(const Tree& t, int root, const BindingFunction& f) {
    int n = t.vertex_count();
    static thread_local std::vector<int> parent, order;
    parent.assign(n, -2);
    order.clear();
    order.reserve(n);
    parent[root] = -1;
    order.push_back(root);
    for (size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : t.neighbors(v))
            if (parent[w] == -2) {
                parent[w] = v;
                order.push_back(w);
            }
    }
    std::vector<long long> sum(n, 0), mx(n, 0);
    long long result = 0;
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        int budget = v == root ? f(v) : f(v) - 1;
        long long c = std::max<long long>(1, std::max(mx[v], ceil_div(sum[v], budget)));
        if (v == root) {
            result = c;
        } else {
            int p = parent[v];
            sum[p] += c;
            mx[p] = std::max(mx[p], c);
        }
    }
    return result;
}

} // namespace

long long mincover_size(const Tree& t, const BindingFunction& f) {
    if (t.vertex_count() < 2) throw std::invalid_argument("mincover needs n >= 2");
    if (f.size() != t.vertex_count()) throw std::invalid_argument("binding function size mismatch");
    for (int v = 0; v < f.size(); ++v)
        if (f(v) < 2) throw std::invalid_argument("unrooted covering needs f(v) >= 2 everywhere");
    long long best = -1;
    for (int r = 0; r < t.vertex_count(); ++r) {
        long long val = rooted_value(t, r, f);
        if (best < 0 || val < best) best = val;
    }
    return best;
}

long long mincover_size_d(const Tree& t, int d) {
    return mincover_size(t, BindingFunction::uniform(t.vertex_count(), d));
}

std::pair<long long, SubtreeCover> mincover(const Tree& t, const BindingFunction& f) {
    if (t.vertex_count() < 2) throw std::invalid_argument("mincover needs n >= 2");
    if (f.size() != t.vertex_count()) throw std::invalid_argument("binding function size mismatch");
    for (int v = 0; v < f.size(); ++v)
        if (f(v) < 2) throw std::invalid_argument("unrooted covering needs f(v) >= 2 everywhere");
    long long best = -1;
    int best_root = 0;
    for (int r = 0; r < t.vertex_count(); ++r) {
        long long val = rooted_value(t, r, f);
        if (best < 0 || val < best) {
            best = val;
            best_root = r;
        }
    }
    RootedTree rooted(t, best_root);
    SubtreeCover cover = rmc_cover(rooted, reduce_to_rooted(f, best_root));
    assert(static_cast<long long>(cover.parts.size()) == best);
    cover.rooted_at.reset(); // the result is a covering of the unrooted tree
    return {best, std::move(cover)};
}

std::pair<long long, SubtreeCover> mincover_d(const Tree& t, int d) {
    return mincover(t, BindingFunction::uniform(t.vertex_count(), d));
}

long long rmc_complete(int delta, int d, int h) {
    if (delta < d || d < 1 || h < 0) throw std::invalid_argument("need Delta >= d >= 1 and h >= 0");
    return ceill(delta, d, h);
}

long long mincover_complete(int delta, int d, int h) {
    if (delta < d || d < 2 || h < 1) throw std::invalid_argument("need Delta >= d >= 2 and h >= 1");
    long long inner = ceill(delta - 1, d - 1, h - 1);
    return ceil_div(checked_mul(delta, inner), d);
}

} // namespace treecover
