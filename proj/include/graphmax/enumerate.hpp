#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "graphmax/graph.hpp"

namespace graphmax {

inline constexpr int kEnumerationCap = 8;

// Labeled edge-set bitmask; bit index for an edge {u,v}, u < v, is
// (v-1)(v-2)/2 + (u-1), independent of n. Fits 64 bits through n = 11.
std::uint64_t edge_mask(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);
bool mask_connected(int n, std::uint64_t mask);

// Smallest adjacency bitmask over vertex orderings compatible with a degree
// refinement (exact isomorphism invariant at desk scale).
std::uint64_t canonical_mask(const Graph& g, int cap = kEnumerationCap);

// canonical_mask serialized with the vertex count; equal strings iff the
// graphs are isomorphic.
std::string canonical_form(const Graph& g, int cap = kEnumerationCap);

// Yields every connected simple graph on n labeled vertices in increasing
// edge-mask order; with up_to_iso, one representative per isomorphism class.
void enumerate_connected(int n, bool up_to_iso, const std::function<void(const Graph&)>& yield,
                         int cap = kEnumerationCap);
std::vector<Graph> enumerate_connected_all(int n, bool up_to_iso, int cap = kEnumerationCap);

}  // namespace graphmax
