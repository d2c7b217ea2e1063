#pragma once

#include <cstdint>

#include "topoclique/graph.hpp"
#include "topoclique/rational.hpp"

namespace topoclique {

/// Point-line incidence graph of PG(2,q), q prime. Points get ids
/// 0..N-1 and lines N..2N-1 where N = q^2+q+1. Throws InputError otherwise.
Graph incidence_graph_pg2(int q);

struct JungUnion {
  Graph graph;
  Rational average_degree;
};

/// `copies` disjoint copies of K_{d/2,d/2}; d even, d >= 2.
JungUnion jung_union(int d, int copies);

/// Random r-regular graph on h vertices with every vertex replaced by an
/// independent set of `blowup` vertices and every edge by a complete
/// bipartite join. Class of base vertex v is v*blowup .. v*blowup+blowup-1.
Graph counterexample_blowup(int h, int r, int blowup, std::uint64_t seed);

/// Uniform-ish simple r-regular graph by incremental pairing with restarts
/// (at most 1000 per call). Throws InputError on infeasible (n, r) and
/// ConstructionError when every restart fails.
Graph random_regular(int n, int r, std::uint64_t seed);

/// Erdos-Renyi G(n, p).
Graph gnp(int n, double p, std::uint64_t seed);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);  // side a is 0..a-1
Graph cycle_graph(int n);                // n >= 3
Graph path_graph(int n);
Graph empty_graph(int n);
Graph petersen_graph();
Graph grid_graph(int rows, int cols);    // vertex r*cols+c

/// Vertex-disjoint union; ids of `b` are shifted by |a|.
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_prime(int q);

}  // namespace topoclique
