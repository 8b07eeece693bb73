#include "treecover/clique_partition.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "treecover/arith.hpp"

namespace treecover {

long long MultipartiteSpec::total() const {
    long long t = 0;
    for (long long s : class_sizes) t += s;
    return t;
}

long long MultipartiteSpec::max_size() const {
    long long m = 0;
    for (long long s : class_sizes) m = std::max(m, s);
    return m;
}

long long cliques_partition_size(const MultipartiteSpec& spec, int d) {
    if (spec.classes() < 1 || d < 1) throw std::invalid_argument("need k >= 1 and d >= 1");
    if (d > spec.classes()) throw std::invalid_argument("d must not exceed the class count");
    return std::max(spec.max_size(), ceil_div(spec.total(), d));
}

namespace {

struct ClassState {
    long long remaining;
    int cls;
    long long next_index = 0;
};

// one round of the greedy: take a vertex from each of the cap largest
// classes, ties by class index
std::vector<CliqueVertex> take_round(std::vector<ClassState*>& order, int cap) {
    std::stable_sort(order.begin(), order.end(), [](const ClassState* a, const ClassState* b) {
        if (a->remaining != b->remaining) return a->remaining > b->remaining;
        return a->cls < b->cls;
    });
    std::vector<CliqueVertex> clique;
    for (ClassState* cs : order) {
        if (static_cast<int>(clique.size()) == cap) break;
        if (cs->remaining == 0) break;
        clique.push_back({cs->cls, cs->next_index++});
        --cs->remaining;
    }
    return clique;
}

} // namespace

CliquePartition cliques_partition(const MultipartiteSpec& spec, int d) {
    long long expect = cliques_partition_size(spec, d); // validates arguments
    std::vector<ClassState> classes(spec.classes());
    std::vector<ClassState*> order;
    for (int i = 0; i < spec.classes(); ++i) {
        if (spec.class_sizes[i] < 0) throw std::invalid_argument("negative class size");
        classes[i] = {spec.class_sizes[i], i};
        order.push_back(&classes[i]);
    }
    CliquePartition out;
    while (true) {
        auto clique = take_round(order, d);
        if (clique.empty()) break;
        out.cliques.push_back(std::move(clique));
    }
    assert(static_cast<long long>(out.cliques.size()) == expect);
    return out;
}

MultipartiteSpec turan_spec(long long n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1 and k >= 1");
    long long x = n / k, y = n % k;
    MultipartiteSpec spec;
    for (int i = 0; i < k; ++i) spec.class_sizes.push_back(i < y ? x + 1 : x);
    return spec;
}

CliquePartition turan_partition(long long n, int k, int d) {
    return cliques_partition(turan_spec(n, k), d);
}

TwoSizePartition two_size_partition(long long n, int k, int p, int q, long long m) {
    if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1 and k >= 1");
    if (p < 0 || q < 0 || p > k || q > k) throw std::invalid_argument("need k >= p,q >= 0");
    if (m < 0) throw std::invalid_argument("need m >= 0");
    MultipartiteSpec spec = turan_spec(n, k);
    std::vector<ClassState> classes(k);
    std::vector<ClassState*> order;
    for (int i = 0; i < k; ++i) {
        classes[i] = {spec.class_sizes[i], i};
        order.push_back(&classes[i]);
    }
    TwoSizePartition out;
    long long left = n;
    for (long long round = 0; round < m && left > 0; ++round) {
        if (left <= p) {
            // K<left;k> is a clique: one (<= p)-clique finishes the job
            auto clique = take_round(order, static_cast<int>(std::min<long long>(left, k)));
            out.p_cliques.push_back(std::move(clique));
            return out;
        }
        auto clique = take_round(order, p);
        left -= static_cast<long long>(clique.size());
        out.p_cliques.push_back(std::move(clique));
    }
    if (left == 0) return out;
    if (q == 0) throw std::invalid_argument("q = 0 with vertices left over");
    long long expect_q = ceil_div(std::max<long long>(n - m * p, 0), q);
    while (left > 0) {
        auto clique = take_round(order, q);
        left -= static_cast<long long>(clique.size());
        out.q_cliques.push_back(std::move(clique));
    }
    assert(static_cast<long long>(out.q_cliques.size()) == expect_q);
    return out;
}

} // namespace treecover
