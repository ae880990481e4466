#include "evako/embed.hpp"

#include <algorithm>

#include "evako/classify.hpp"

namespace evako {

namespace {

void require_sphere_in_geometric(const Graph& h, const Graph& g, const char* op) {
  if (!h.is_subgraph_of(g)) throw PreconditionError(std::string(op) + ": H is not a subgraph of G");
  if (!is_sphere(h)) throw PreconditionError(std::string(op) + ": H is not a sphere");
  if (g.empty() || is_geometric(g).kind == GeometricKind::neither)
    throw PreconditionError(std::string(op) + ": G is not geometric");
}

}  // namespace

Graph embedding_intersection(const Graph& h, const Graph& g, const Simplex& x) {
  VertexSet common = h.vertex_set();
  for (Vertex v : x) common = set_intersection(common, g.neighbors(v));
  return induced_subgraph(h, common);
}

EmbeddingReport is_embedded(const Graph& h, const Graph& g) {
  require_sphere_in_geometric(h, g, "is_embedded");
  EmbeddingReport report;
  for (const auto& x : cliques(induced_subgraph(g, h.vertex_set()))) {
    ++report.checked;
    Graph meet = embedding_intersection(h, g, x);
    if (!is_sphere(meet)) {
      report.witness = x;
      report.intersection = std::move(meet);
      return report;
    }
  }
  report.embedded = true;
  return report;
}

int knot_codimension(const Graph& h, const Graph& g) {
  auto gs = is_sphere(g);
  if (!gs) throw PreconditionError("knot_codimension: G is not a sphere");
  if (!is_embedded(h, g).embedded) throw PreconditionError("knot_codimension: H is not embedded in G");
  return gs->dimension - is_sphere(h)->dimension;
}

TransversalityReport crossing_report(const Curve& c, const Graph& h) {
  const auto& xs = c.vertices();
  const std::size_t n = xs.size();
  for (std::size_t t = 0; t < n; ++t) {
    if (!h.has_vertex(xs[t])) continue;
    bool before = c.closed() || t > 0 ? h.has_vertex(c.at(static_cast<std::ptrdiff_t>(t) - 1)) : false;
    bool after = c.closed() || t + 1 < n ? h.has_vertex(c.at(static_cast<std::ptrdiff_t>(t) + 1)) : false;
    if (before || after) return {false, t};
  }
  return {true, std::nullopt};
}

TransversalityReport curve_crosses_transversely(const Curve& c, const Graph& h, const Graph& g) {
  for (Vertex v : c.vertices())
    if (!g.has_vertex(v)) throw PreconditionError("curve_crosses_transversely: curve leaves G");
  require_sphere_in_geometric(h, g, "curve_crosses_transversely");
  if (is_sphere(h)->dimension != is_geometric(g).dimension - 1)
    throw PreconditionError("curve_crosses_transversely: H is not a hypersurface of G");
  if (!is_embedded(h, g).embedded) throw PreconditionError("curve_crosses_transversely: H is not embedded");
  return crossing_report(c, h);
}

bool lifts_transverse(const Graph& k1, const Graph& h1) {
  VertexSet common = set_intersection(k1.vertex_set(), h1.vertex_set());
  if (common.empty()) return false;
  for (std::size_t i = 0; i < common.size(); ++i)
    for (std::size_t j = i + 1; j < common.size(); ++j)
      if (k1.adjacent(common[i], common[j]) && h1.adjacent(common[i], common[j])) return false;
  return true;
}

bool spheres_transverse(const Graph& k, const Graph& h, const EnhancedGraph& e) {
  const Graph& g = e.base();
  auto gs = is_sphere(g);
  if (!gs) throw PreconditionError("spheres_transverse: base graph is not a sphere");
  auto ks = is_sphere(k);
  auto hs = is_sphere(h);
  if (!ks || !hs) throw PreconditionError("spheres_transverse: K and H must be spheres");
  if (ks->dimension + hs->dimension != gs->dimension)
    throw PreconditionError("spheres_transverse: dimensions are not complementary");
  if (!is_embedded(k, g).embedded || !is_embedded(h, g).embedded)
    throw PreconditionError("spheres_transverse: K and H must be embedded");
  return lifts_transverse(lift_subgraph(e, k), lift_subgraph(e, h));
}

}  // namespace evako
