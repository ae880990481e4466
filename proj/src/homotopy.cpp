#include "evako/homotopy.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "evako/classify.hpp"

namespace evako {

// ---------------------------------------------------------------------------
// Curve

Curve::Curve(const Graph& host, std::vector<Vertex> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  if (closed_ && vertices_.size() >= 2 && vertices_.front() == vertices_.back()) vertices_.pop_back();
  if (vertices_.size() < 2) throw InputError("curve needs at least two vertices");
  for (Vertex v : vertices_)
    if (!host.has_vertex(v)) throw InputError("curve vertex " + std::to_string(v) + " not in host");
  const std::size_t n = vertices_.size();
  const std::size_t links = closed_ ? n : n - 1;
  for (std::size_t i = 0; i < links; ++i) {
    Vertex a = vertices_[i], b = vertices_[(i + 1) % n];
    if (!host.adjacent(a, b))
      throw InputError("curve step " + std::to_string(i) + " (" + std::to_string(a) + ", " +
                       std::to_string(b) + ") is not an edge");
  }
}

bool Curve::simple() const {
  if (closed_ && vertices_.size() < 3) return false;
  VertexSet s(vertices_.begin(), vertices_.end());
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

Vertex Curve::at(std::ptrdiff_t t) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  if (closed_) return vertices_[static_cast<std::size_t>(((t % n) + n) % n)];
  if (t < 0 || t >= n) throw InputError("curve index out of range");
  return vertices_[static_cast<std::size_t>(t)];
}

Curve Curve::reversed() const {
  Curve out = *this;
  if (closed_) {
    std::reverse(out.vertices_.begin() + 1, out.vertices_.end());
  } else {
    std::reverse(out.vertices_.begin(), out.vertices_.end());
  }
  return out;
}

std::vector<Simplex> Curve::edges() const {
  std::vector<Simplex> out;
  const std::size_t n = vertices_.size();
  const std::size_t links = closed_ ? n : n - 1;
  for (std::size_t i = 0; i < links; ++i) out.push_back(Simplex{vertices_[i], vertices_[(i + 1) % n]});
  return out;
}

// ---------------------------------------------------------------------------
// Hypersurface and traces

VertexSet Hypersurface::vertex_set() const {
  VertexSet out;
  for (const auto& f : facets) out.insert(out.end(), f.vertices().begin(), f.vertices().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Graph Hypersurface::generated(const Graph& host) const { return induced_subgraph(host, vertex_set()); }

Hypersurface apply_step(const Hypersurface& h, const DeformationStep& step) {
  Hypersurface out = h;
  for (const auto& f : step.removed)
    if (out.facets.erase(f) == 0) throw PreconditionError("trace step removes a facet that is absent");
  for (const auto& f : step.added)
    if (!out.facets.insert(f).second) throw PreconditionError("trace step adds a facet that is present");
  return out;
}

Hypersurface DeformationTrace::replay_prefix(std::size_t count) const {
  Hypersurface h = initial;
  for (std::size_t i = 0; i < count && i < steps.size(); ++i) h = apply_step(h, steps[i]);
  return h;
}

Hypersurface DeformationTrace::replay() const { return replay_prefix(steps.size()); }

// ---------------------------------------------------------------------------
// Graph homotopy

Graph reduce_step(const Graph& g, Vertex x) {
  if (!is_contractible(unit_sphere(g, x)))
    throw PreconditionError("reduce_step: unit sphere of " + std::to_string(x) + " is not contractible");
  return remove_vertex(g, x);
}

Graph extend_step(const Graph& g, std::span<const Vertex> w, Vertex label) {
  if (g.has_vertex(label)) throw PreconditionError("extend_step: label " + std::to_string(label) + " in use");
  if (!is_contractible(induced_subgraph(g, w)))
    throw PreconditionError("extend_step: attaching set is not contractible");
  std::vector<Vertex> vs = g.vertex_set();
  vs.push_back(label);
  auto edges = g.edges();
  for (Vertex v : w) edges.emplace_back(std::min(v, label), std::max(v, label));
  return Graph(std::move(vs), edges);
}

// ---------------------------------------------------------------------------
// Simple homotopy deformation

DeformationStep deformation_step(const Graph& g, const Hypersurface& h, const Simplex& t) {
  if (t.dimension() != h.facet_dim + 1)
    throw PreconditionError("deformation carrier must have dimension " + std::to_string(h.facet_dim + 1));
  if (!is_clique(g, t)) throw PreconditionError("deformation carrier is not a simplex of the host");
  DeformationStep step;
  step.carrier = t;
  for (auto& f : t.facets()) {
    if (h.facets.count(f)) {
      step.removed.push_back(f);
    } else {
      step.added.push_back(f);
    }
  }
  if (step.removed.empty()) throw PreconditionError("deformation carrier shares no facet with the hypersurface");
  if (step.added.empty() && h.facets.size() != step.removed.size())
    throw PreconditionError("full carrier boundary may only be removed when it is the whole hypersurface");
  std::sort(step.removed.begin(), step.removed.end());
  std::sort(step.added.begin(), step.added.end());
  return step;
}

Hypersurface deform_hypersurface(const Graph& g, const Hypersurface& h, const Simplex& t,
                                 const std::vector<Simplex>& y) {
  if (y.empty()) throw PreconditionError("deform_hypersurface: Y is empty");
  auto step = deformation_step(g, h, t);
  std::vector<Simplex> sorted_y = y;
  std::sort(sorted_y.begin(), sorted_y.end());
  if (sorted_y != step.removed)
    throw PreconditionError("deform_hypersurface: Y is not exactly the hypersurface facets inside t");
  return apply_step(h, step);
}

Hypersurface hypersurface_from_subgraph(const Graph& g, const Graph& h) {
  if (!h.is_subgraph_of(g)) throw PreconditionError("hypersurface_from_subgraph: not a subgraph");
  auto geo = is_geometric(g);
  if (geo.kind == GeometricKind::neither) throw PreconditionError("hypersurface_from_subgraph: host not geometric");
  const int d = geo.dimension;
  auto sphere = is_sphere(h);
  if (!sphere || sphere->dimension != d - 1)
    throw PreconditionError("hypersurface_from_subgraph: subgraph is not a " + std::to_string(d - 1) + "-sphere");
  Hypersurface out;
  out.facet_dim = d - 1;
  for (auto& s : cliques_of_dimension(h, d - 1)) out.facets.insert(std::move(s));
  return out;
}

Hypersurface hypersurface_from_curve(const Curve& c) {
  Hypersurface out;
  out.facet_dim = 1;
  for (auto& e : c.edges())
    if (!out.facets.insert(e).second) throw PreconditionError("curve traverses an edge twice");
  return out;
}

std::optional<Curve> curve_from_hypersurface(const Graph& host, const Hypersurface& h, std::optional<Vertex> start) {
  if (h.facet_dim != 1 || h.facets.empty()) return std::nullopt;
  std::map<Vertex, std::vector<Vertex>> nb;
  for (const auto& e : h.facets) {
    nb[e[0]].push_back(e[1]);
    nb[e[1]].push_back(e[0]);
  }
  std::vector<Vertex> ends;
  for (auto& [v, list] : nb) {
    if (list.size() > 2) return std::nullopt;
    std::sort(list.begin(), list.end());
    if (list.size() == 1) ends.push_back(v);
  }
  const bool closed = ends.empty();
  if (!closed && ends.size() != 2) return std::nullopt;
  Vertex first = closed ? nb.begin()->first : ends.front();
  if (start) {
    if (!nb.count(*start)) return std::nullopt;
    if (!closed && *start != ends.front() && *start != ends.back()) return std::nullopt;
    first = *start;
  }
  std::vector<Vertex> seq{first};
  Vertex prev = first, cur = nb[first].front();
  if (closed || nb[first].size() == 1) {
    while (cur != first) {
      seq.push_back(cur);
      const auto& list = nb[cur];
      if (list.size() == 1) break;
      Vertex next = list[0] == prev ? list[1] : list[0];
      prev = cur;
      cur = next;
    }
  }
  if (seq.size() != nb.size()) return std::nullopt;
  return Curve(host, std::move(seq), closed);
}

// ---------------------------------------------------------------------------
// Curve contraction

namespace {

using State = std::vector<Simplex>;  // sorted edge list

bool is_simple_cycle(const State& s) {
  if (s.empty()) return true;
  std::map<Vertex, std::vector<Vertex>> nb;
  for (const auto& e : s) {
    nb[e[0]].push_back(e[1]);
    nb[e[1]].push_back(e[0]);
  }
  for (auto& [v, list] : nb)
    if (list.size() != 2) return false;
  // connected?
  std::set<Vertex> seen;
  std::vector<Vertex> stack{nb.begin()->first};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    for (Vertex w : nb[v]) stack.push_back(w);
  }
  return seen.size() == nb.size();
}

struct Node {
  std::size_t size;
  State state;
  bool operator>(const Node& o) const {
    if (size != o.size) return size > o.size;
    return state > o.state;
  }
};

}  // namespace

DeformationTrace contract_curve(const Graph& g, const Curve& c, std::uint64_t state_budget) {
  if (!c.closed() || !c.simple()) throw PreconditionError("contract_curve: curve must be simple and closed");
  auto sphere = is_sphere(g);
  if (!sphere || sphere->dimension <= 1) throw PreconditionError("contract_curve: host must be a sphere of dimension > 1");

  std::map<Simplex, std::vector<Simplex>> triangles_of;
  for (const auto& t : cliques_of_dimension(g, 2))
    for (const auto& e : t.facets()) triangles_of[e].push_back(t);

  Hypersurface initial = hypersurface_from_curve(c);
  State start(initial.facets.begin(), initial.facets.end());

  std::map<State, std::pair<State, Simplex>> parent;
  std::set<State> closed;
  std::priority_queue<Node, std::vector<Node>, std::greater<>> open;
  open.push({start.size(), start});
  parent.emplace(start, std::pair<State, Simplex>{{}, {}});

  std::uint64_t expanded = 0;
  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (!closed.insert(node.state).second) continue;
    if (node.state.empty()) {
      // Walk back to the start.
      std::vector<Simplex> carriers;
      State cur = node.state;
      while (cur != start) {
        auto& [prev, t] = parent.at(cur);
        carriers.push_back(t);
        cur = prev;
      }
      std::reverse(carriers.begin(), carriers.end());
      DeformationTrace trace;
      trace.initial = initial;
      Hypersurface h = initial;
      for (const auto& t : carriers) {
        auto step = deformation_step(g, h, t);
        h = apply_step(h, step);
        trace.steps.push_back(std::move(step));
      }
      return trace;
    }
    if (++expanded > state_budget)
      throw ResourceLimitError("contract_curve exceeded state budget of " + std::to_string(state_budget));

    std::set<Simplex> carriers;
    for (const auto& e : node.state)
      for (const auto& t : triangles_of[e]) carriers.insert(t);
    for (const auto& t : carriers) {
      State next;
      auto faces = t.facets();
      std::sort(faces.begin(), faces.end());
      std::set_symmetric_difference(node.state.begin(), node.state.end(), faces.begin(), faces.end(),
                                    std::back_inserter(next));
      std::size_t kept = 0;
      for (const auto& f : faces) kept += std::binary_search(node.state.begin(), node.state.end(), f);
      if (kept == 3 && node.state.size() != 3) continue;
      if (!is_simple_cycle(next)) continue;
      if (closed.count(next)) continue;
      if (parent.emplace(next, std::pair<State, Simplex>{node.state, t}).second)
        open.push({next.size(), std::move(next)});
    }
  }
  throw ResourceLimitError("contract_curve: search space exhausted without reaching the empty curve");
}

}  // namespace evako
