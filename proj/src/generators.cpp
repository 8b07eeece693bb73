#include "treecover/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "treecover/pathwidth.hpp"

namespace treecover {

namespace {

void check_limit(long long want, long long limit) {
    if (want > limit)
        throw std::invalid_argument("generator would produce " + std::to_string(want) +
                                    " vertices, over the limit of " + std::to_string(limit));
}

} // namespace

Tree path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Tree(n, e);
}

Tree star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Tree(leaves + 1, e);
}

RootedTree gen_complete_rooted(int delta, int h, long long limit) {
    if (delta < 1 || h < 0) throw std::invalid_argument("need Delta >= 1 and h >= 0");
    long long total = 1, level = 1;
    for (int i = 0; i < h; ++i) {
        level *= delta;
        total += level;
        check_limit(total, limit);
    }
    std::vector<Edge> e;
    e.reserve(total - 1);
    // BFS ids: children of v start right after the previous level
    long long next = 1;
    std::vector<long long> frontier{0};
    for (int depth = 0; depth < h; ++depth) {
        std::vector<long long> nf;
        nf.reserve(frontier.size() * delta);
        for (long long v : frontier)
            for (int c = 0; c < delta; ++c) {
                e.push_back({static_cast<int>(v), static_cast<int>(next)});
                nf.push_back(next++);
            }
        frontier = std::move(nf);
    }
    return RootedTree(Tree(static_cast<int>(total), e), 0);
}

Tree gen_complete_unrooted(int delta, int h, long long limit) {
    if (delta < 2 || h < 1) throw std::invalid_argument("need Delta >= 2 and h >= 1");
    // center has delta children; deeper internal vertices have delta-1
    long long total = 1 + delta, level = delta;
    check_limit(total, limit);
    for (int i = 1; i < h; ++i) {
        level *= (delta - 1);
        total += level;
        check_limit(total, limit);
    }
    std::vector<Edge> e;
    e.reserve(total - 1);
    long long next = 1;
    std::vector<long long> frontier{0};
    for (int depth = 0; depth < h; ++depth) {
        int fan = depth == 0 ? delta : delta - 1;
        std::vector<long long> nf;
        for (long long v : frontier)
            for (int c = 0; c < fan; ++c) {
                e.push_back({static_cast<int>(v), static_cast<int>(next)});
                nf.push_back(next++);
            }
        frontier = std::move(nf);
    }
    return Tree(static_cast<int>(total), e);
}

Tree gen_caterpillar_lb(int delta, int n, long long limit) {
    if (delta < 3 || n < 1) throw std::invalid_argument("need Delta >= 3 and n >= 1");
    long long total = 2LL + n + static_cast<long long>(n) * (delta - 2);
    check_limit(total, limit);
    // ids: u = 0, v_1..v_n = 1..n, w = n+1, then leaves
    std::vector<Edge> e;
    e.push_back({0, 1});
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    e.push_back({n, n + 1});
    int next = n + 2;
    for (int i = 1; i <= n; ++i)
        for (int c = 0; c < delta - 2; ++c) e.push_back({i, next++});
    return Tree(static_cast<int>(total), e);
}

namespace {

// Appends a copy of the lower-bound tree T<n_1..n_k>, returning its root id.
long long append_pw_lb(std::vector<Edge>& e, long long& next, int delta, int k,
                       const std::vector<long long>& n_list, long long limit) {
    long long n = n_list[k - 1];
    long long spine = 2 * n + 1;
    long long base = next;
    next += spine;
    if (next > limit) throw std::invalid_argument("generator over vertex limit");
    // spine ids: base + (i + n) for i in [-n, n]; root is base + n (= v_0)
    for (long long i = 0; i + 1 < spine; ++i)
        e.push_back({static_cast<int>(base + i), static_cast<int>(base + i + 1)});
    long long root = base + n;
    for (long long i = 0; i < spine; ++i) {
        long long v = base + i;
        int copies = (v == root) ? delta - 2 : delta - 1;
        for (int c = 0; c < copies; ++c) {
            if (k == 1) {
                if (next + 1 > limit) throw std::invalid_argument("generator over vertex limit");
                e.push_back({static_cast<int>(v), static_cast<int>(next)});
                ++next;
            } else {
                long long sub = append_pw_lb(e, next, delta, k - 1, n_list, limit);
                e.push_back({static_cast<int>(v), static_cast<int>(sub)});
            }
        }
    }
    return root;
}

} // namespace

RootedTree gen_pw_lb_rooted(int delta, int d, int k, const std::vector<long long>& n_list,
                            long long limit) {
    if (d < 3 || delta < d || k < 1) throw std::invalid_argument("need Delta >= d >= 3 and k >= 1");
    if (static_cast<int>(n_list.size()) != k)
        throw std::invalid_argument("n_list must have exactly k entries");
    for (int i = 1; i <= k; ++i) {
        long long need = pi_recurrence(delta, d, i) + 1;
        if (n_list[i - 1] < need)
            throw std::invalid_argument("n_" + std::to_string(i) + " must be at least " +
                                        std::to_string(need));
    }
    std::vector<Edge> e;
    long long next = 0;
    long long root = append_pw_lb(e, next, delta, k, n_list, limit);
    Tree t(static_cast<int>(next), e);
    return RootedTree(std::move(t), static_cast<int>(root));
}

Tree gen_pw_lb_unrooted(int delta, int d, int k, long long n, long long limit) {
    if (d < 3 || delta < d || k < 1 || n < 1)
        throw std::invalid_argument("need Delta >= d >= 3, k >= 1, n >= 1");
    if (k >= 2 && d < 4)
        throw std::invalid_argument("k >= 2 needs d >= 4 (the k-1 level uses budget d-1)");
    std::vector<long long> sub_sizes;
    if (k >= 2)
        for (int i = 1; i < k; ++i) sub_sizes.push_back(pi_recurrence(delta - 1, d - 1, i) + 1);
    std::vector<Edge> e;
    long long spine = 2 * n + 3; // v_{-n-1} .. v_{n+1}
    long long next = spine;
    check_limit(next, limit);
    for (long long i = 0; i + 1 < spine; ++i)
        e.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    for (long long i = 1; i + 1 < spine; ++i) { // internal v_i, |i| <= n
        for (int c = 0; c < delta - 2; ++c) {
            if (k == 1) {
                check_limit(next + 1, limit);
                e.push_back({static_cast<int>(i), static_cast<int>(next)});
                ++next;
            } else {
                long long sub = append_pw_lb(e, next, delta - 1, k - 1, sub_sizes, limit);
                e.push_back({static_cast<int>(i), static_cast<int>(sub)});
            }
        }
    }
    return Tree(static_cast<int>(next), e);
}

Tree gen_subdivided_star_lb(int p, int leg, long long limit) {
    if (p < 3 || leg < 1) throw std::invalid_argument("need p >= 3 legs and leg length >= 1");
    long long total = 1LL + static_cast<long long>(p) * leg + 2LL * p;
    check_limit(total, limit);
    std::vector<Edge> e;
    int next = 1;
    for (int i = 0; i < p; ++i) {
        int prev = 0;
        for (int j = 0; j < leg; ++j) {
            e.push_back({prev, next});
            prev = next++;
        }
        e.push_back({prev, next++}); // u_i
        e.push_back({prev, next++}); // w_i
    }
    return Tree(static_cast<int>(total), e);
}

Graph gen_arms(int k, long long limit) {
    if (k < 2) throw std::invalid_argument("need k >= 2");
    long long m = 2LL * k, n = 4LL * k;
    long long total = 2 * n + n * (2 * m - 2);
    check_limit(total, limit);
    std::vector<Edge> e;
    // cycle v_1..v_{2n} as ids 0..2n-1
    for (long long i = 0; i < 2 * n; ++i)
        e.push_back({static_cast<int>(i), static_cast<int>((i + 1) % (2 * n))});
    long long next = 2 * n;
    for (long long j = 0; j < n; ++j) {
        // H_j: paths a_1..a_m and b_1..b_m with cross edges a_i b_i;
        // base edge a_1 b_1 is the cycle edge v_{2j} v_{2j+1} (0-based)
        std::vector<long long> a(m), b(m);
        a[0] = 2 * j;
        b[0] = 2 * j + 1;
        for (long long i = 1; i < m; ++i) {
            a[i] = next++;
            b[i] = next++;
        }
        for (long long i = 0; i + 1 < m; ++i) {
            e.push_back({static_cast<int>(a[i]), static_cast<int>(a[i + 1])});
            e.push_back({static_cast<int>(b[i]), static_cast<int>(b[i + 1])});
        }
        for (long long i = 1; i < m; ++i)
            e.push_back({static_cast<int>(a[i]), static_cast<int>(b[i])});
    }
    return Graph(static_cast<int>(total), e);
}

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (n == 1) return Tree(1, {});
    if (n == 2) return Tree(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = pick(rng);
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<Edge> e;
    e.reserve(n - 1);
    // linear decode with a moving pointer over the smallest leaf
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : pruefer) {
        e.push_back({leaf, x});
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    e.push_back({leaf, n - 1});
    return Tree(n, e);
}

Graph random_graph(int n, double avg_degree, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    std::mt19937_64 rng(seed);
    double p = n > 1 ? std::min(1.0, avg_degree / (n - 1)) : 0.0;
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.push_back({u, v});
    return Graph(n, e);
}

} // namespace treecover
