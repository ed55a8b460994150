#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "graphmax/errors.hpp"

namespace graphmax {

enum class Family { Complete, Star, Path, Cycle };

Family parse_family(const std::string& name);
std::string family_name(Family f);

// A metric ball {w : d(center,w) <= radius}. Members are sorted.
struct Ball {
    int center = 0;
    int radius = 0;
    std::vector<int> members;

    // Bitmask over vertices 1..n (bit v-1); only valid for n <= 64.
    std::uint64_t mask() const;
};

// Immutable simple connected graph with precomputed all-pairs shortest-path
// distances. Vertices are 1-based, matching V = {1,...,n}.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph named(Family family, int n);

    int size() const { return n_; }
    int edge_count() const { return m_; }
    bool adjacent(int u, int v) const { return dist(u, v) == 1; }
    int dist(int u, int v) const { return dist_[static_cast<size_t>(u) * (n_ + 1) + v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int eccentricity(int v) const { return ecc_[v]; }
    int diameter() const { return diameter_; }

    Ball ball(int v, int r) const;
    int ball_size(int v, int r) const;

    // Vertices ordered by increasing distance from v (ties by id); the prefix
    // of length ball_size(v,r) is exactly B(v,r).
    const std::vector<int>& by_distance(int v) const { return order_[v]; }

    // Edges (u,v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool same_edges(const Graph& other) const;

    // Text format: "n m" then one "u v" line per edge.
    static Graph read_text(std::istream& in);
    void write_text(std::ostream& out) const;

private:
    Graph() = default;
    void finish();  // BFS distances + derived tables; throws DisconnectedGraph

    int n_ = 0, m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<int> dist_;   // (n+1)x(n+1) flat
    std::vector<int> ecc_;
    int diameter_ = 0;
    std::vector<std::vector<int>> order_;
};

}  // namespace graphmax
