#include "evako/enhance.hpp"

#include <algorithm>
#include <set>

namespace evako {

namespace {

// Containment graph over an ordered list of simplices: every listed proper
// face of a simplex is adjacent to it.
Graph containment_graph(const std::vector<Simplex>& simplices, const std::map<Simplex, Vertex>& index) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    const auto& s = simplices[i];
    const std::size_t k = s.size();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
      std::vector<Vertex> face;
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1) face.push_back(s[b]);
      auto it = index.find(Simplex(std::move(face)));
      if (it != index.end()) edges.emplace_back(std::min(it->second, static_cast<Vertex>(i)),
                                                std::max(it->second, static_cast<Vertex>(i)));
    }
  }
  std::vector<Vertex> vs(simplices.size());
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<Vertex>(i);
  return Graph(std::move(vs), edges);
}

}  // namespace

std::string GraphPolynomial::str() const {
  if (monomials.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (i) out += " + ";
    for (std::size_t j = 0; j < monomials[i].size(); ++j) {
      if (j) out += "*";
      out += "x" + std::to_string(monomials[i][j]);
    }
  }
  return out;
}

GraphPolynomial graph_polynomial(const Graph& g) { return {cliques(g)}; }

EnhancedGraph::EnhancedGraph(Graph base) : base_(std::move(base)), simplices_(cliques(base_)) {
  for (std::size_t i = 0; i < simplices_.size(); ++i) index_.emplace(simplices_[i], static_cast<Vertex>(i));
  enhanced_ = containment_graph(simplices_, index_);
}

const Simplex& EnhancedGraph::simplex_of(Vertex v) const {
  if (v >= simplices_.size()) throw InputError("enhanced vertex out of range: " + std::to_string(v));
  return simplices_[v];
}

Vertex EnhancedGraph::vertex_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw InputError("simplex is not a clique of the base graph");
  return it->second;
}

EnhancedGraph enhanced(const Graph& g) { return EnhancedGraph(g); }

VertexSet lift_vertices(const EnhancedGraph& e, const Graph& h) {
  if (!h.is_subgraph_of(e.base())) throw PreconditionError("lift_subgraph: not a subgraph of the base graph");
  VertexSet out;
  for (const auto& s : cliques(h)) out.push_back(e.vertex_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

Graph lift_subgraph(const EnhancedGraph& e, const Graph& h) {
  return induced_subgraph(e.enhanced(), lift_vertices(e, h));
}

ProductGraph graph_product(const Graph& h, const Graph& k) {
  auto fh = cliques(h);
  auto fk = cliques(k);
  ProductGraph out;
  for (const auto& a : fh)
    for (const auto& b : fk) out.map.emplace_back(a, b);
  const std::size_t n = out.map.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& [a1, b1] = out.map[i];
      const auto& [a2, b2] = out.map[j];
      bool up = a1.is_face_of(a2) && b1.is_face_of(b2);
      bool down = a2.is_face_of(a1) && b2.is_face_of(b1);
      if (up || down) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  std::vector<Vertex> vs(n);
  for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<Vertex>(i);
  out.graph = Graph(std::move(vs), edges);
  return out;
}

Graph face_poset_graph(const std::vector<Simplex>& simplices, std::vector<Simplex>* faces) {
  std::set<Simplex> all;
  for (const auto& s : simplices) {
    const std::size_t k = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<Vertex> face;
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1) face.push_back(s[b]);
      all.emplace(std::move(face));
    }
  }
  std::vector<Simplex> list(all.begin(), all.end());
  std::map<Simplex, Vertex> index;
  for (std::size_t i = 0; i < list.size(); ++i) index.emplace(list[i], static_cast<Vertex>(i));
  Graph g = containment_graph(list, index);
  if (faces) *faces = std::move(list);
  return g;
}

}  // namespace evako
