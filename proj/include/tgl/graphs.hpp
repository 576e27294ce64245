#pragma once

// Simple graphs: graph6 decode/encode, biconnectivity, isomorph-free
// enumeration of small connected/biconnected graphs, and cycle matroids.
//
// Edge subsets of the complete graph on n labeled vertices are packed into a
// Mask with one bit per unordered pair, ordered (0,1),(0,2),(1,2),(0,3),... —
// the same column-wise upper-triangle order graph6 uses, bit k of the mask
// being the k-th pair.

#include <string>
#include <utility>
#include <vector>

#include "tgl/base.hpp"
#include "tgl/matroid.hpp"

namespace tgl {

struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // each (u,v) with u < v, sorted

  bool operator==(const SimpleGraph&) const = default;
};

// Validates endpoints, forbids self-loops and repeated edges, sorts edges.
SimpleGraph make_simple_graph(int vertex_count, std::vector<std::pair<int, int>> edges);

// Pair-mask packing for graphs on n labeled vertices.
int pair_bit(int i, int j);                       // i < j
Mask graph_to_mask(const SimpleGraph& g);
SimpleGraph mask_to_graph(int n, Mask edge_bits);

SimpleGraph parse_graph6(const std::string& line);
std::string emit_graph6(const SimpleGraph& g);

// Reads a graph6 file: one graph per line, an optional ">>graph6<<" header
// line is skipped, blank lines ignored.
std::vector<SimpleGraph> read_graph6_file(const std::string& path);

bool is_connected_graph(const SimpleGraph& g);

// Connected, at least 3 vertices, and no articulation vertex.
bool is_biconnected(const SimpleGraph& g);

// Minimum (or maximum) edge mask over all vertex relabelings.
Mask canonical_mask(const SimpleGraph& g, bool use_maximum = false);

// All biconnected graphs on n vertices up to isomorphism, 3 <= n <= 7, one
// representative each (its orbit-minimal edge mask), ordered by
// (edge count, mask). use_maximum selects the independent re-run that
// dedupes by orbit-maximal masks instead; both orders must agree in count.
std::vector<SimpleGraph> enumerate_biconnected(int n, bool use_maximum = false);

// Same machinery for connected graphs, 1 <= n <= 6 (corpus and cross-checks).
std::vector<SimpleGraph> enumerate_connected(int n);

Matroid cycle_matroid(const SimpleGraph& g);

}  // namespace tgl
