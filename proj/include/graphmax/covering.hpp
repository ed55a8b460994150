#pragma once

#include <utility>
#include <vector>

#include "graphmax/graph.hpp"
#include "graphmax/rational.hpp"

namespace graphmax {

inline constexpr int kOverlapCap = 7;

// D(G) = max |B(x,3r)| / |B(x,r)| over x in V, 1 <= r <= diam(G).
Rat dilation_index(const Graph& g, std::pair<int, int>* witness = nullptr);

// O(G) = the smallest r such that every ball family has a union-preserving
// subfamily with pointwise overlap at most r. Exhaustive for n <= cap.
int overlapping_index(const Graph& g, int cap = kOverlapCap,
                      std::vector<Ball>* witness = nullptr);

// Greedy largest-radius-first disjoint selection (ties by smallest center id).
std::vector<Ball> vitali_select(std::vector<Ball> balls, const Graph& g);

struct IndexReport {
    Rat dilation;
    std::pair<int, int> dilation_witness{0, 0};  // (vertex, radius)
    int overlapping = 0;
    bool overlapping_skipped = false;
    std::vector<Ball> overlap_witness;
    Rat weak11_upper;  // min{D, O}, or D alone when overlapping was skipped
};

IndexReport weak11_upper_bound(const Graph& g, bool skip_overlap = false, int cap = kOverlapCap);

// (p')^{1/p'} p^{1/p} c1^{1/p} cinf^{1/p'} for p > 1.
double interpolation_bound(double p, double c1, double cinf);

// d(x,y) <= max{d(x,z), d(z,y)} for all triples; holds exactly for K_n.
bool is_ultrametric(const Graph& g);

// The distinct balls of g (deduplicated by member set), sorted by member set.
std::vector<Ball> distinct_balls(const Graph& g);

}  // namespace graphmax
