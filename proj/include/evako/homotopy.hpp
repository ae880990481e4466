#pragma once

// Homotopy steps on graphs and simple homotopy deformations of
// hypersurfaces (facet sets) inside a host graph.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "evako/graph.hpp"

namespace evako {

/// Vertex sequence with consecutive vertices adjacent in the host graph. A
/// closed curve stores x0 .. x(n-1) and closes implicitly from x(n-1) back
/// to x0; a trailing repeat of x0 is stripped on construction.
class Curve {
 public:
  Curve(const Graph& host, std::vector<Vertex> vertices, bool closed);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  std::size_t length() const { return vertices_.size(); }
  /// No repeated vertex (and at least 3 vertices when closed).
  bool simple() const;
  /// Position t, wrapping around for closed curves.
  Vertex at(std::ptrdiff_t t) const;
  Curve reversed() const;
  /// Edge simplices traversed, in order (with multiplicity).
  std::vector<Simplex> edges() const;

 private:
  std::vector<Vertex> vertices_;
  bool closed_ = true;
};

/// Set of facets of dimension `facet_dim`; deformations use
/// (facet_dim + 1)-simplices of the host as carriers.
struct Hypersurface {
  int facet_dim = 0;
  std::set<Simplex> facets;

  bool empty() const { return facets.empty(); }
  VertexSet vertex_set() const;
  /// Graph generated by the facet vertices inside `host`.
  Graph generated(const Graph& host) const;
  bool operator==(const Hypersurface&) const = default;
};

struct DeformationStep {
  Simplex carrier;
  std::vector<Simplex> removed;  // Y, sorted
  std::vector<Simplex> added;    // Y', sorted
};

struct DeformationTrace {
  Hypersurface initial;
  std::vector<DeformationStep> steps;

  /// Applies every step, checking that each removed set is present and
  /// each added set absent. Throws PreconditionError on mismatch.
  Hypersurface replay() const;
  Hypersurface replay_prefix(std::size_t count) const;
};

/// Homotopy reduction: removes x, whose unit sphere must be contractible.
Graph reduce_step(const Graph& g, Vertex x);
/// Homotopy extension: adds `label` joined to every vertex of w, which must
/// generate a contractible subgraph.
Graph extend_step(const Graph& g, std::span<const Vertex> w, Vertex label);

/// Replaces Y = facets(H) inside carrier t by the complementary facets of t.
/// `y` must equal exactly the facets of H contained in t.
Hypersurface deform_hypersurface(const Graph& g, const Hypersurface& h, const Simplex& t,
                                 const std::vector<Simplex>& y);
/// Same step with Y computed from H; returns the step record.
DeformationStep deformation_step(const Graph& g, const Hypersurface& h, const Simplex& t);
Hypersurface apply_step(const Hypersurface& h, const DeformationStep& step);

/// All (d-1)-simplices of a (d-1)-sphere subgraph of a d-geometric graph.
Hypersurface hypersurface_from_subgraph(const Graph& g, const Graph& h);
/// Edge set of a curve as a facet set of 1-simplices.
Hypersurface hypersurface_from_curve(const Curve& c);

/// Rebuilds the curve of a 1-dimensional facet set: a single cycle when all
/// degrees are 2, or a path between the two degree-1 vertices (starting at
/// `start` when given). Returns nullopt if the facets do not form a simple
/// curve.
std::optional<Curve> curve_from_hypersurface(const Graph& host, const Hypersurface& h,
                                             std::optional<Vertex> start = std::nullopt);

inline constexpr std::uint64_t kDefaultContractionStates = 100'000;

/// Deforms a simple closed curve in a sphere of dimension > 1 to the empty
/// curve by best-first search over simple-curve states. Throws
/// ResourceLimitError when the state budget runs out.
DeformationTrace contract_curve(const Graph& g, const Curve& c,
                                std::uint64_t state_budget = kDefaultContractionStates);

}  // namespace evako
