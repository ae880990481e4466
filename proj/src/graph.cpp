#include "evako/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace evako {

// ---------------------------------------------------------------------------
// Simplex

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InputError("simplex has a repeated vertex");
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

Simplex Simplex::without_index(std::size_t i) const {
  Simplex out;
  out.vertices_.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j)
    if (j != i) out.vertices_.push_back(vertices_[j]);
  return out;
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(without_index(i));
  return out;
}

Simplex Simplex::with(Vertex v) const {
  Simplex out = *this;
  auto it = std::lower_bound(out.vertices_.begin(), out.vertices_.end(), v);
  if (it != out.vertices_.end() && *it == v) throw InputError("vertex already in simplex");
  out.vertices_.insert(it, v);
  return out;
}

std::strong_ordering Simplex::operator<=>(const Simplex& other) const {
  if (auto c = vertices_.size() <=> other.vertices_.size(); c != 0) return c;
  return vertices_ <=> other.vertices_;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  adjacency_.resize(vertices_.size());
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("self loop at vertex " + std::to_string(u));
    auto iu = index_of(u);
    auto iv = index_of(v);
    adjacency_[iu].push_back(v);
    adjacency_[iv].push_back(u);
  }
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

std::size_t Graph::size() const {
  std::size_t total = 0;
  for (const auto& nb : adjacency_) total += nb.size();
  return total / 2;
}

bool Graph::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw InputError("unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& nb = adjacency_[index_of(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return adjacency_[index_of(v)];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (Vertex w : adjacency_[i])
      if (vertices_[i] < w) out.emplace_back(vertices_[i], w);
  return out;
}

bool Graph::is_subgraph_of(const Graph& host) const {
  for (Vertex v : vertices_)
    if (!host.has_vertex(v)) return false;
  for (auto [u, v] : edges())
    if (!host.adjacent(u, v)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Set helpers

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(std::span<const Vertex> a, Vertex v) {
  return std::binary_search(a.begin(), a.end(), v);
}

// ---------------------------------------------------------------------------
// Subgraphs

Graph induced_subgraph(const Graph& g, std::span<const Vertex> w) {
  VertexSet keep(w.begin(), w.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Edge> edges;
  for (Vertex u : keep) {
    for (Vertex v : g.neighbors(u))  // throws for unknown u
      if (u < v && set_contains(keep, v)) edges.emplace_back(u, v);
  }
  return Graph(std::move(keep), edges);
}

Graph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  VertexSet r(removed.begin(), removed.end());
  std::sort(r.begin(), r.end());
  return induced_subgraph(g, set_difference(g.vertices(), r));
}

Graph remove_vertex(const Graph& g, Vertex x) {
  g.index_of(x);
  const Vertex one[] = {x};
  return remove_vertices(g, one);
}

Graph unit_sphere(const Graph& g, Vertex x) {
  return induced_subgraph(g, g.neighbors(x));
}

Graph unit_ball(const Graph& g, Vertex x) {
  VertexSet w(g.neighbors(x).begin(), g.neighbors(x).end());
  w.insert(std::lower_bound(w.begin(), w.end(), x), x);
  return induced_subgraph(g, w);
}

// ---------------------------------------------------------------------------
// Cliques

namespace {

// Bron-Kerbosch with Tomita pivoting over the sorted label space.
void maximal_cliques(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                     std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  Vertex pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  for (const VertexSet* pool : {&p, &x}) {
    for (Vertex u : *pool) {
      std::size_t c = set_intersection(p, g.neighbors(u)).size();
      if (!have_pivot || c > best) {
        pivot = u;
        best = c;
        have_pivot = true;
      }
    }
  }
  VertexSet candidates = set_difference(p, g.neighbors(pivot));
  for (Vertex v : candidates) {
    r.insert(std::lower_bound(r.begin(), r.end(), v), v);
    maximal_cliques(g, r, set_intersection(p, g.neighbors(v)),
                    set_intersection(x, g.neighbors(v)), out);
    r.erase(std::lower_bound(r.begin(), r.end(), v));
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

std::vector<Simplex> cliques(const Graph& g, std::optional<int> max_dim) {
  std::vector<VertexSet> maximal;
  VertexSet r;
  maximal_cliques(g, r, g.vertex_set(), {}, maximal);

  std::set<Simplex> faces;
  for (const auto& m : maximal) {
    const std::size_t k = m.size();
    // Enumerate every non-empty subset of the maximal clique.
    std::vector<Vertex> subset;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      subset.clear();
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) subset.push_back(m[i]);
      if (max_dim && static_cast<int>(subset.size()) - 1 > *max_dim) continue;
      faces.emplace(subset);
    }
  }
  return {faces.begin(), faces.end()};
}

std::vector<Simplex> cliques_of_dimension(const Graph& g, int dim) {
  std::vector<Simplex> out;
  for (auto& s : cliques(g, dim))
    if (s.dimension() == dim) out.push_back(std::move(s));
  return out;
}

std::vector<std::size_t> clique_counts(const Graph& g) {
  // Count by extension so large complexes do not need the face set.
  std::vector<std::size_t> counts;
  std::vector<Vertex> stack;
  auto extend = [&](auto&& self, const VertexSet& common) -> void {
    const std::size_t dim = stack.size() - 1;
    if (counts.size() <= dim) counts.resize(dim + 1, 0);
    ++counts[dim];
    for (Vertex v : common) {
      if (v <= stack.back()) continue;
      stack.push_back(v);
      self(self, set_intersection(common, g.neighbors(v)));
      stack.pop_back();
    }
  };
  for (Vertex v : g.vertices()) {
    stack.assign(1, v);
    VertexSet nb(g.neighbors(v).begin(), g.neighbors(v).end());
    extend(extend, nb);
  }
  return counts;
}

bool is_clique(const Graph& g, const Simplex& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!g.has_vertex(s[i])) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  }
  return true;
}

std::int64_t euler_characteristic(const Graph& g) {
  std::int64_t chi = 0;
  auto counts = clique_counts(g);
  for (std::size_t k = 0; k < counts.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(counts[k]);
  return chi;
}

// ---------------------------------------------------------------------------
// Components

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.order(), false);
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      auto i = queue.front();
      queue.pop_front();
      Vertex v = g.vertices()[i];
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        auto j = g.index_of(w);
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph relabel(const Graph& g, std::span<const Vertex> labels) {
  if (labels.size() != g.order()) throw InputError("relabel: label count mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex a = labels[g.index_of(u)], b = labels[g.index_of(v)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(std::vector<Vertex>(labels.begin(), labels.end()), edges);
}

}  // namespace evako
