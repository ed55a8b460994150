#pragma once

#include <iosfwd>
#include <vector>

#include "graphmax/graph.hpp"
#include "graphmax/rational.hpp"

namespace graphmax {

inline constexpr int kPermutationCap = 8;

// Vertex functions are std::vector<T> of length n+1, entry 0 unused, with
// T = Rat (exact mode) or T = double. Negative entries are replaced by their
// absolute value on entry; the operator only sees |f|.

template <class T>
std::vector<T> delta(int n, int k) {
    std::vector<T> f(n + 1, T(0));
    f[k] = T(1);
    return f;
}

// M_G f(v) = max over radii of the ball average of |f| at v.
template <class T>
std::vector<T> eval_maximal(const Graph& g, std::vector<T> f);

// entry(j,k) = M_G delta_k (j) = 1/|B(j, d(j,k))|.
struct DeltaResponseMatrix {
    int n = 0;
    std::vector<Rat> entries;  // row-major, n x n, 1-based accessor

    const Rat& at(int j, int k) const { return entries[static_cast<size_t>(j - 1) * n + (k - 1)]; }
    Rat& at(int j, int k) { return entries[static_cast<size_t>(j - 1) * n + (k - 1)]; }

    // JSON array of arrays of "p/q" strings (bit-exact).
    void write_json(std::ostream& out) const;
    static DeltaResponseMatrix read_json(std::istream& in);
};

DeltaResponseMatrix delta_response_matrix(const Graph& g);

// Inverts delta_response_matrix: the largest off-diagonal response in row j
// identifies the radius-1 ball, hence the neighbor set of j. Throws
// InconsistentMatrix when the input is not realizable by any connected graph.
Graph reconstruct_from_deltas(const DeltaResponseMatrix& m);

// M_[G] f(j) = max over relabelings H ~ G of M_H f(j), by permutation scan.
template <class T>
std::vector<T> eval_isoclass_maximal(const Graph& g, std::vector<T> f, int cap = kPermutationCap);

// Text format: one value per line, decimal or "p/q".
RatVec read_vertex_function(std::istream& in, int n);
void write_vertex_function(std::ostream& out, const RatVec& f);

}  // namespace graphmax
