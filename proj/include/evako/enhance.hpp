#pragma once

// Graph polynomials, the product of graphs, and the enhanced graph G1 whose
// vertices are the simplices of G joined by proper containment.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "evako/graph.hpp"

namespace evako {

/// One square-free monomial per clique; monomial order is clique order.
struct GraphPolynomial {
  std::vector<Simplex> monomials;
  bool is_zero() const { return monomials.empty(); }
  /// Renders monomials as products of variables `x<label>`.
  std::string str() const;
};

GraphPolynomial graph_polynomial(const Graph& g);

/// Enhanced graph with the bijection between base simplices and enhanced
/// vertices. Enhanced vertex i is simplices()[i], in clique order.
class EnhancedGraph {
 public:
  EnhancedGraph() = default;
  explicit EnhancedGraph(Graph base);

  const Graph& base() const { return base_; }
  const Graph& enhanced() const { return enhanced_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  const Simplex& simplex_of(Vertex v) const;
  Vertex vertex_of(const Simplex& s) const;
  bool has_simplex(const Simplex& s) const { return index_.count(s) != 0; }

 private:
  Graph base_;
  Graph enhanced_;
  std::vector<Simplex> simplices_;
  std::map<Simplex, Vertex> index_;
};

EnhancedGraph enhanced(const Graph& g);

/// Induced subgraph of E.enhanced() on the simplices of h (the graph H1).
/// h must be a subgraph of E.base().
Graph lift_subgraph(const EnhancedGraph& e, const Graph& h);
/// Enhanced vertices standing for the simplices of h.
VertexSet lift_vertices(const EnhancedGraph& e, const Graph& h);

struct ProductGraph {
  Graph graph;
  /// Vertex i of graph is the monomial pair map[i].
  std::vector<std::pair<Simplex, Simplex>> map;
};

/// Vertices are pairs (sigma, tau) of simplices of h and k; two pairs are
/// adjacent when one contains the other in both slots.
ProductGraph graph_product(const Graph& h, const Graph& k);

/// Containment graph of all non-empty faces of the given simplices. Faces
/// are listed in `faces` (vertex i is faces[i]) when requested.
Graph face_poset_graph(const std::vector<Simplex>& simplices, std::vector<Simplex>* faces = nullptr);

}  // namespace evako
