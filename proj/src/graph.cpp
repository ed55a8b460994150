#include "graphmax/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace graphmax {

Family parse_family(const std::string& name) {
    if (name == "complete") return Family::Complete;
    if (name == "star") return Family::Star;
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    throw InputError("unknown graph family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Complete: return "complete";
        case Family::Star: return "star";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
    }
    return "?";
}

std::uint64_t Ball::mask() const {
    std::uint64_t m = 0;
    for (int v : members) m |= std::uint64_t{1} << (v - 1);
    return m;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw UnsupportedSize("vertex count must be positive");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n + 1, {});
    std::vector<bool> seen(static_cast<size_t>(n + 1) * (n + 1), false);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n) throw VertexOutOfRange(u);
        if (v < 1 || v > n) throw VertexOutOfRange(v);
        if (u == v) throw SelfLoop(u);
        size_t key = static_cast<size_t>(std::min(u, v)) * (n + 1) + std::max(u, v);
        if (seen[key]) continue;  // multi-edge collapses
        seen[key] = true;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    g.finish();
    return g;
}

Graph Graph::named(Family family, int n) {
    int min_n = family == Family::Cycle ? 3 : 2;
    if (n < min_n)
        throw UnsupportedSize(family_name(family) + " graph needs at least " +
                              std::to_string(min_n) + " vertices");
    std::vector<std::pair<int, int>> edges;
    switch (family) {
        case Family::Complete:
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
            break;
        case Family::Star:  // center is vertex 1
            for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
            break;
        case Family::Path:  // endpoints 1 and n
            for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
            break;
        case Family::Cycle:
            for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
            edges.emplace_back(n, 1);
            break;
    }
    return from_edges(n, edges);
}

void Graph::finish() {
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    const int inf = std::numeric_limits<int>::max() / 2;
    dist_.assign(static_cast<size_t>(n_ + 1) * (n_ + 1), inf);
    std::deque<int> queue;
    for (int s = 1; s <= n_; ++s) {
        int* d = &dist_[static_cast<size_t>(s) * (n_ + 1)];
        d[s] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : adj_[u]) {
                if (d[v] > d[u] + 1) {
                    d[v] = d[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int v = 1; v <= n_; ++v)
            if (d[v] >= inf) throw DisconnectedGraph();
    }

    ecc_.assign(n_ + 1, 0);
    diameter_ = 0;
    for (int v = 1; v <= n_; ++v) {
        for (int w = 1; w <= n_; ++w) ecc_[v] = std::max(ecc_[v], dist(v, w));
        diameter_ = std::max(diameter_, ecc_[v]);
    }

    order_.assign(n_ + 1, {});
    for (int v = 1; v <= n_; ++v) {
        auto& ord = order_[v];
        ord.resize(n_);
        std::iota(ord.begin(), ord.end(), 1);
        std::stable_sort(ord.begin(), ord.end(),
                         [&](int a, int b) { return dist(v, a) < dist(v, b); });
    }
}

Ball Graph::ball(int v, int r) const {
    if (v < 1 || v > n_) throw VertexOutOfRange(v);
    if (r < 0) throw InputError("ball radius must be nonnegative");
    Ball b;
    b.center = v;
    b.radius = r;
    int sz = ball_size(v, r);
    b.members.assign(order_[v].begin(), order_[v].begin() + sz);
    std::sort(b.members.begin(), b.members.end());
    return b;
}

int Graph::ball_size(int v, int r) const {
    if (r >= ecc_[v]) return n_;
    int count = 0;
    for (int w : order_[v]) {
        if (dist(v, w) > r) break;
        ++count;
    }
    return count;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 1; u <= n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::same_edges(const Graph& other) const {
    return n_ == other.n_ && edges() == other.edges();
}

Graph Graph::read_text(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw InputError("malformed graph header, expected \"n m\"");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw InputError("malformed edge line " + std::to_string(i + 1));
        edges.emplace_back(u, v);
    }
    return from_edges(n, edges);
}

void Graph::write_text(std::ostream& out) const {
    out << n_ << " " << m_ << "\n";
    for (auto [u, v] : edges()) out << u << " " << v << "\n";
}

}  // namespace graphmax
