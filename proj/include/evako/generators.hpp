#pragma once

// Named graph constructions with fixed labelings.
//
//   complete(n)       K_n on 0..n-1
//   cycle(n)          C_n, edges i ~ i+1 mod n (n >= 3)
//   line(n)           L_n, path 0 - 1 - ... - n-1 (n >= 1)
//   edgeless(n)       P_n, n isolated vertices
//   wheel(n)          W_n, rim cycle 0..n-1 and hub n (n >= 4)
//   join(H, K)        H relabeled to 0..|H|-1 (sorted order), K to |H|..
//   suspension(G)     join(G, P_2): G keeps positions 0..n-1, poles n, n+1
//   cross_polytope(d) join of d+1 copies of P_2; pair i is {2i, 2i+1}
//   octahedron()      suspension(C_4): equator 0..3, north 4, south 5
//   icosahedron()     top 0, upper ring 1..5, lower ring 6..10, bottom 11;
//                     upper i+1 touches lower 6+i and 6+(i+1)%5
//   cube()            vertices 0..7, edges between labels differing in one bit
//   house()           square 0-1-2-3-0 with roof tip 4 over edge 2-3
//   moebius_band(n)   strip of k = n/2 columns and three rows: row 0 is
//                     0..k-1, row 2 is k..2k-1, the middle row 2k..3k-1.
//                     Squares are cut along (i, r) - (i+1, r+1); column k
//                     is column 0 with rows reversed. Boundary is C_n.
//   random_graph      each pair i < j in lexicographic order draws one
//                     std::mt19937_64 output u; the edge exists iff
//                     (u >> 11) * 2^-53 < p

#include <cstdint>
#include <string>
#include <vector>

#include "evako/graph.hpp"

namespace evako::gen {

Graph complete(int n);
Graph cycle(int n);
Graph line(int n);
Graph edgeless(int n);
Graph wheel(int n);
Graph join(const Graph& h, const Graph& k);
Graph suspension(const Graph& g);
Graph cross_polytope(int d);
Graph octahedron();
Graph icosahedron();
Graph cube();
Graph house();
Graph moebius_band(int n);
Graph random_graph(int n, double p, std::uint64_t seed);

/// Disjoint union with the same relabeling convention as join.
Graph disjoint_union(const Graph& h, const Graph& k);

/// Builds a generator by name: `params` are the integer arguments
/// (random_graph takes n, then p and seed via the dedicated overload).
Graph by_name(const std::string& name, const std::vector<long long>& params);
std::vector<std::string> names();

}  // namespace evako::gen
