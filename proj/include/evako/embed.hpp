#pragma once

// Embedding test for sub-spheres, knot co-dimension and transversality.

#include <cstddef>
#include <optional>

#include "evako/enhance.hpp"
#include "evako/graph.hpp"
#include "evako/homotopy.hpp"

namespace evako {

struct EmbeddingReport {
  bool embedded = false;
  /// Simplex {x1..xk} with all x_j in H whose intersection failed.
  std::optional<Simplex> witness;
  /// H restricted to the common G-neighbours of the witness.
  Graph intersection;
  std::size_t checked = 0;
};

/// H must be a subgraph of G and a sphere; G must be geometric. Checks that
/// H ∩ S(x1) ∩ ... ∩ S(xk) is a sphere for every simplex of G spanned by
/// vertices of H. The empty intersection passes as the (-1)-sphere.
EmbeddingReport is_embedded(const Graph& h, const Graph& g);

/// Intersection graph checked for one simplex, for replaying a witness.
Graph embedding_intersection(const Graph& h, const Graph& g, const Simplex& x);

/// dim(G) - dim(H) for an embedded sphere H in a sphere G.
int knot_codimension(const Graph& h, const Graph& g);

struct TransversalityReport {
  bool transverse = false;
  /// First curve index t with C(t) in H and a neighbour of t also in H.
  std::optional<std::size_t> index;
};

/// Pure check on vertex membership; for open curves only existing
/// neighbours count.
TransversalityReport crossing_report(const Curve& c, const Graph& h);

/// As crossing_report, after checking that H is an embedded
/// (d-1)-sphere of the d-geometric graph G containing C.
TransversalityReport curve_crosses_transversely(const Curve& c, const Graph& h, const Graph& g);

/// K and H are embedded spheres of complementary dimensions in E.base();
/// true iff their lifts meet in a non-empty edgeless graph.
bool spheres_transverse(const Graph& k, const Graph& h, const EnhancedGraph& e);

/// The same test for subgraphs k1, h1 of E.enhanced() taken as given, so
/// modified lifts can be compared.
bool lifts_transverse(const Graph& k1, const Graph& h1);

}  // namespace evako
