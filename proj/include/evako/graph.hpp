#pragma once

// Finite simple graphs and the clique-level vocabulary built on them.
//
// A Graph is immutable once constructed. Vertices are non-negative integer
// labels kept in sorted order, and every neighbor list is sorted, so any
// iteration over vertices, edges or cliques is deterministic.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evako {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // sorted, unique
using Edge = std::pair<Vertex, Vertex>; // first < second

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown vertex, self loop, bad document.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its configured node or state budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// A result contradicting one of the separation theorems. Carries whatever
/// the procedure found so the caller can inspect it.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what, std::vector<VertexSet> found = {})
      : Error(what), found_(std::move(found)) {}
  const std::vector<VertexSet>& found() const { return found_; }

 private:
  std::vector<VertexSet> found_;
};

/// Complete subgraph given by its strictly increasing vertex tuple.
///
/// Ordering groups simplices by dimension first and compares vertex tuples
/// lexicographically within a dimension.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices)
      : Simplex(std::vector<Vertex>(vertices)) {}

  std::span<const Vertex> vertices() const { return vertices_; }
  const std::vector<Vertex>& tuple() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  bool empty() const { return vertices_.empty(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Vertex v) const;
  /// Face relation, including equality.
  bool is_face_of(const Simplex& other) const;
  /// Facet obtained by dropping position i.
  Simplex without_index(std::size_t i) const;
  /// All codimension-one faces, in position order.
  std::vector<Simplex> facets() const;
  Simplex with(Vertex v) const;

  std::strong_ordering operator<=>(const Simplex& other) const;
  bool operator==(const Simplex& other) const = default;

 private:
  std::vector<Vertex> vertices_;
};

class Graph {
 public:
  Graph() = default;
  /// Builds a graph from a vertex list and an edge list. Duplicate vertices
  /// and duplicate edges are merged; self loops and edges naming undeclared
  /// vertices throw InputError.
  Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

  std::span<const Vertex> vertices() const { return vertices_; }
  const VertexSet& vertex_set() const { return vertices_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const;
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  /// Position of v in vertices(); throws InputError for unknown labels.
  std::size_t index_of(Vertex v) const;

  std::vector<Edge> edges() const;
  /// True if every vertex and edge of this graph belongs to `host`.
  bool is_subgraph_of(const Graph& host) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Graph generated by W inside G: all edges of G between members of W.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> w);
/// Induced subgraph on V(G) minus the given vertices.
Graph remove_vertices(const Graph& g, std::span<const Vertex> removed);
Graph remove_vertex(const Graph& g, Vertex x);

Graph unit_sphere(const Graph& g, Vertex x);
Graph unit_ball(const Graph& g, Vertex x);

/// All complete subgraphs up to max_dim (all when absent), grouped by
/// dimension and lexicographic within a dimension.
std::vector<Simplex> cliques(const Graph& g,
                             std::optional<int> max_dim = std::nullopt);
/// Cliques of exactly the given dimension.
std::vector<Simplex> cliques_of_dimension(const Graph& g, int dim);
/// f-vector (v0, v1, ...).
std::vector<std::size_t> clique_counts(const Graph& g);
bool is_clique(const Graph& g, const Simplex& s);

std::int64_t euler_characteristic(const Graph& g);

/// Components ordered by smallest member; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Graph on vertices 0..n-1 obtained by relabeling through `labels`, where
/// labels[i] is the new label of vertices()[i].
Graph relabel(const Graph& g, std::span<const Vertex> labels);

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
bool set_contains(std::span<const Vertex> a, Vertex v);

}  // namespace evako
