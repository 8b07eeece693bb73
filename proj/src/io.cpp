#include "treecover/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace treecover {

namespace {

struct RawEdge {
    long long u, v;
    int line;
};

std::vector<RawEdge> read_edges(const std::string& text) {
    std::vector<RawEdge> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue; // blank or comment-only
        std::string rest;
        if (!(ls >> v) || (ls >> rest)) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected \"u v\"");
        }
        if (u < 0 || v < 0)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": negative vertex id");
        if (u == v)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": self-loop");
        out.push_back({u, v, lineno});
    }
    if (out.empty()) throw std::invalid_argument("no edges in input");
    return out;
}

} // namespace

ParsedGraph parse_edge_list(const std::string& text) {
    auto raw = read_edges(text);
    std::map<long long, int> dense; // ascending original ids -> 0..n-1
    for (const auto& e : raw) {
        dense.emplace(e.u, 0);
        dense.emplace(e.v, 0);
    }
    int next = 0;
    std::vector<long long> original;
    original.reserve(dense.size());
    bool already_dense = true;
    for (auto& [id, d] : dense) {
        d = next++;
        original.push_back(id);
        if (id != d) already_dense = false;
    }
    (void)already_dense; // ascending remap is the identity on dense input

    std::map<std::pair<int, int>, int> seen; // normalized edge -> first line
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw) {
        int u = dense[e.u], v = dense[e.v];
        auto norm = std::minmax(u, v);
        auto [it, fresh] = seen.emplace(std::make_pair(norm.first, norm.second), e.line);
        if (!fresh)
            throw std::invalid_argument("line " + std::to_string(e.line) + ": duplicate edge (first at line " +
                                        std::to_string(it->second) + ")");
        edges.push_back({u, v});
    }
    return {Graph(next, edges), std::move(original)};
}

Tree parse_tree(const std::string& text) {
    ParsedGraph pg = parse_edge_list(text);
    const Graph& g = pg.graph;
    // locate a cycle-closing line for the error message
    if (g.edge_count() >= g.vertex_count()) {
        auto raw = read_edges(text);
        std::map<long long, int> dense;
        int next = 0;
        for (const auto& e : raw) {
            if (!dense.count(e.u)) dense[e.u] = 0;
            if (!dense.count(e.v)) dense[e.v] = 0;
        }
        for (auto& [id, d] : dense) d = next++;
        std::vector<int> uf(next);
        for (int i = 0; i < next; ++i) uf[i] = i;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const auto& e : raw) {
            int a = find(dense[e.u]), b = find(dense[e.v]);
            if (a == b)
                throw std::invalid_argument("line " + std::to_string(e.line) + ": edge closes a cycle");
            uf[a] = b;
        }
    }
    if (!g.connected()) throw std::invalid_argument("input is disconnected, not a tree");
    return Tree(g.vertex_count(), g.edges());
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string serialize_json(const Graph& g, std::optional<int> root) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (root)
        j["root"] = *root;
    else
        j["root"] = nullptr;
    return j.dump();
}

JsonGraph parse_json_graph(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    std::optional<int> root;
    if (j.contains("root") && !j["root"].is_null()) root = j["root"].get<int>();
    return {Graph(n, edges), root};
}

Tree parse_json_tree(const std::string& text, std::optional<int>* root) {
    JsonGraph jg = parse_json_graph(text);
    if (root) *root = jg.root;
    return Tree(jg.graph.vertex_count(), jg.graph.edges());
}

std::string serialize_cover_json(const SubtreeCover& cover, std::optional<int> d) {
    nlohmann::json j;
    if (d)
        j["d"] = *d;
    else
        j["d"] = nullptr;
    j["kind"] = cover.kind == CoverKind::partition ? "partition" : "covering";
    j["parts"] = cover.parts;
    return j.dump();
}

SubtreeCover parse_cover_json(const std::string& text, std::optional<int>* d) {
    nlohmann::json j = nlohmann::json::parse(text);
    SubtreeCover c;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "partition")
        c.kind = CoverKind::partition;
    else if (kind == "covering")
        c.kind = CoverKind::covering;
    else
        throw std::invalid_argument("cover kind must be partition or covering");
    c.parts = j.at("parts").get<std::vector<std::vector<int>>>();
    if (d) {
        if (j.contains("d") && !j["d"].is_null())
            *d = j["d"].get<int>();
        else
            *d = std::nullopt;
    }
    return c;
}

std::string serialize_dot(const Graph& g, const SubtreeCover* cover) {
    static const char* palette[] = {"red",    "blue",   "green3", "orange", "purple",
                                    "brown",  "cyan3",  "magenta", "gold3", "gray40",
                                    "navy",   "salmon", "olive",  "teal",   "pink3"};
    constexpr int npal = sizeof(palette) / sizeof(palette[0]);
    std::vector<int> color_of;
    if (cover) {
        color_of.assign(g.edge_count(), -1);
        for (int p = static_cast<int>(cover->parts.size()) - 1; p >= 0; --p)
            for (int eid : cover->parts[p]) color_of[eid] = p;
    }
    std::ostringstream out;
    out << "graph G {\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out << "  " << u << " -- " << v;
        if (cover && color_of[e] >= 0)
            out << " [color=" << palette[color_of[e] % npal] << "]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace treecover
