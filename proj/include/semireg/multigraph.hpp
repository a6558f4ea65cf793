#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semireg/rng.hpp"

namespace semireg {

// Undirected multigraph on vertices 0..n-1. Each entry of `edges` is one edge;
// repeated pairs are multi-edges and (v,v) is a self-loop. A self-loop counts 1
// toward its endpoint's degree and adds 1 to the adjacency diagonal; it does
// not appear in the Laplacian.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_loops() const;
    bool has_multi_edges() const;
    bool is_simple() const { return !has_loops() && !has_multi_edges(); }
};

// Dense symmetric matrix, row-major.
struct DenseMatrix {
    int n = 0;
    std::vector<double> a;  // n*n

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

std::vector<int> degree_sequence(const Multigraph& g);

// map degree -> vertex count
std::vector<std::pair<int, int>> degree_histogram(const Multigraph& g);

DenseMatrix adjacency(const Multigraph& g);
DenseMatrix laplacian(const Multigraph& g);

bool is_connected(const Multigraph& g);

// Length of the shortest cycle: 1 for a loop, 2 for a multi-edge,
// std::nullopt for forests.
std::optional<int> girth(const Multigraph& g);

// Insert a vertex in the middle of every edge. Throws if g has loops.
Multigraph subdivide(const Multigraph& g);

// Remove every degree-2 vertex, merging its two incident edges, iterated to a
// fixpoint. Throws if some component has no vertex of degree != 2 or a
// degree-2 vertex sits on a 2-cycle or carries a loop.
Multigraph contract_degree2(const Multigraph& g);

// Double-edge swaps until no loops or multi-edges remain. Preserves the degree
// sequence and edge count; preserves bipartition classes when g is 2-colorable.
// Throws after 100*m failed attempts (degree sequence has no simple
// realization, or pathological input).
Multigraph rewire_to_simple(const Multigraph& g, RngStream& rng);

// phi_s = trace(A^s)/n for s = 0..s_max, by sparse matrix powers.
std::vector<double> closed_walk_counts(const Multigraph& g, int s_max);

// Edge-list CSV: header "u,v", one edge per line. Round-trips exactly.
void write_edge_csv(const Multigraph& g, std::ostream& out);
void write_edge_csv_file(const Multigraph& g, const std::string& path);
Multigraph read_edge_csv(std::istream& in);
Multigraph read_edge_csv_file(const std::string& path);

// 2-coloring if the graph (ignoring multi-edges) is bipartite; loops make a
// graph non-bipartite. Returns color per vertex or nullopt.
std::optional<std::vector<int>> bipartition(const Multigraph& g);

}  // namespace semireg
