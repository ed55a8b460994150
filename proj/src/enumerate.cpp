#include "graphmax/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace graphmax {

namespace {

inline int edge_bit(int u, int v) {  // u < v, 1-based
    return (v - 1) * (v - 2) / 2 + (u - 1);
}

void check_cap(int n, int cap) {
    if (cap > 11) cap = 11;  // edge mask must fit 64 bits
    if (n > cap)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

std::uint64_t edge_mask(const Graph& g) {
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << edge_bit(u, v);
    return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u)
            if (mask >> edge_bit(u, v) & 1) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

bool mask_connected(int n, std::uint64_t mask) {
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n;
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u)
            if (mask >> edge_bit(u, v) & 1) {
                int a = find(u), b = find(v);
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
    return components == 1;
}

std::uint64_t canonical_mask(const Graph& g, int cap) {
    const int n = g.size();
    check_cap(n, cap);

    // Refine vertices by (degree, sorted neighbor degrees); orderings are
    // restricted to keep refinement classes contiguous and sorted, which is
    // isomorphism-invariant and cuts the permutation count sharply.
    std::vector<std::vector<int>> key(n + 1);
    for (int v = 1; v <= n; ++v) {
        key[v].push_back(g.degree(v));
        std::vector<int> nd;
        for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        key[v].insert(key[v].end(), nd.begin(), nd.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });

    // Class boundaries in the sorted order.
    std::vector<std::pair<int, int>> classes;  // [begin, end)
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && key[order[j]] == key[order[i]]) ++j;
        classes.emplace_back(i, j);
        i = j;
    }

    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> perm = order;
    // Iterate the product of within-class permutations via mixed-radix
    // next_permutation.
    for (auto& [b, e] : classes) std::sort(perm.begin() + b, perm.begin() + e);
    while (true) {
        std::uint64_t bits = 0;
        int shift = 0;
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < i; ++j, ++shift)
                if (g.adjacent(perm[i], perm[j])) bits |= std::uint64_t{1} << shift;
        best = std::min(best, bits);

        size_t c = 0;
        for (; c < classes.size(); ++c) {
            auto [b, e] = classes[c];
            if (std::next_permutation(perm.begin() + b, perm.begin() + e)) break;
        }
        if (c == classes.size()) break;
    }
    return best;
}

std::string canonical_form(const Graph& g, int cap) {
    std::uint64_t m = canonical_mask(g, cap);
    std::string out;
    out.push_back(static_cast<char>(g.size()));
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>(m >> (8 * i) & 0xff));
    return out;
}

void enumerate_connected(int n, bool up_to_iso, const std::function<void(const Graph&)>& yield,
                         int cap) {
    if (n < 2) throw UnsupportedSize("enumeration needs n >= 2");
    check_cap(n, cap);
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!mask_connected(n, mask)) continue;
        Graph g = graph_from_mask(n, mask);
        if (up_to_iso && !seen.insert(canonical_mask(g, cap)).second) continue;
        yield(g);
    }
}

std::vector<Graph> enumerate_connected_all(int n, bool up_to_iso, int cap) {
    std::vector<Graph> out;
    enumerate_connected(n, up_to_iso, [&](const Graph& g) { out.push_back(g); }, cap);
    return out;
}

}  // namespace graphmax
