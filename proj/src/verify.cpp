#include "evako/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "evako/io.hpp"

namespace evako {

namespace {

struct Reject {
  std::string message;
  std::optional<std::size_t> step;
};

[[noreturn]] void reject(std::string message, std::optional<std::size_t> step = std::nullopt) {
  throw Reject{std::move(message), step};
}

// ---------------------------------------------------------------------------
// Classification certificates

void contraction(const Graph& g, const ContractionCertificate& c) {
  if (c.links.size() != c.removal_order.size()) reject("contraction: link count differs from removal count");
  Graph cur = g;
  for (std::size_t i = 0; i < c.removal_order.size(); ++i) {
    Vertex x = c.removal_order[i];
    if (!cur.has_vertex(x)) reject("contraction: removed vertex " + std::to_string(x) + " is absent");
    contraction(unit_sphere(cur, x), c.links[i]);
    cur = remove_vertex(cur, x);
  }
  if (cur.order() != 1 || cur.vertices()[0] != c.last) reject("contraction: does not end at the named K1");
}

void sphere(const Graph& g, const SphereCertificate& c, int d) {
  if (c.dimension != d) reject("sphere: dimension " + std::to_string(c.dimension) + " where " + std::to_string(d) +
                               " is required");
  if (d < -1) reject("sphere: dimension below -1");
  if (d == -1) {
    if (!g.empty()) reject("sphere: a (-1)-sphere must be empty");
    return;
  }
  if (c.vertices != g.vertex_set()) reject("sphere: vertex list does not match the graph");
  if (c.links.size() != c.vertices.size()) reject("sphere: one link certificate per vertex is required");
  for (std::size_t i = 0; i < c.vertices.size(); ++i) sphere(unit_sphere(g, c.vertices[i]), c.links[i], d - 1);
  if (!g.has_vertex(c.puncture)) reject("sphere: puncture is not a vertex");
  contraction(remove_vertex(g, c.puncture), c.punctured);
}

void strictly_sorted(const VertexSet& xs, const char* what) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i - 1] >= xs[i]) reject(std::string(what) + " is not strictly increasing");
}

void ball(const Graph& g, const BallCertificate& c, int d) {
  if (c.dimension != d) reject("ball: dimension mismatch");
  if (d < 0 || g.empty()) reject("ball: empty graph or negative dimension");
  contraction(g, c.contraction);
  strictly_sorted(c.interior, "ball interior");
  strictly_sorted(c.boundary, "ball boundary");
  if (!set_intersection(c.interior, c.boundary).empty() || set_union(c.interior, c.boundary) != g.vertex_set())
    reject("ball: interior and boundary do not partition the vertices");
  if (c.interior_links.size() != c.interior.size() || c.boundary_links.size() != c.boundary.size())
    reject("ball: one link certificate per vertex is required");
  for (std::size_t i = 0; i < c.interior.size(); ++i) sphere(unit_sphere(g, c.interior[i]), c.interior_links[i], d - 1);
  for (std::size_t i = 0; i < c.boundary.size(); ++i) {
    if (d == 0) reject("ball: a 0-ball has no boundary vertices");
    ball(unit_sphere(g, c.boundary[i]), c.boundary_links[i], d - 1);
  }
  sphere(induced_subgraph(g, c.boundary), c.boundary_sphere, d - 1);
}

// ---------------------------------------------------------------------------
// Simplex bookkeeping

struct Lift {
  std::vector<Simplex> simplices;
  std::map<Simplex, Vertex> index;
  Graph host;
};

std::vector<Simplex> proper_faces(const Simplex& s) {
  std::vector<Simplex> out;
  const std::size_t k = s.size();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
    std::vector<Vertex> face;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) face.push_back(s[b]);
    out.emplace_back(std::move(face));
  }
  return out;
}

Lift lift(const Graph& g) {
  Lift l;
  l.simplices = cliques(g);
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < l.simplices.size(); ++i) {
    l.index.emplace(l.simplices[i], static_cast<Vertex>(i));
    vs.push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < l.simplices.size(); ++i)
    for (const auto& f : proper_faces(l.simplices[i])) edges.emplace_back(l.index.at(f), static_cast<Vertex>(i));
  l.host = Graph(std::move(vs), edges);
  return l;
}

std::set<Simplex> closure(const std::vector<Simplex>& simplices) {
  std::set<Simplex> out;
  for (const auto& s : simplices) {
    out.insert(s);
    for (auto& f : proper_faces(s)) out.insert(std::move(f));
  }
  return out;
}

std::size_t enclosed(const std::set<Simplex>& region, const std::set<Simplex>& facets) {
  auto inside = closure({region.begin(), region.end()});
  auto surface = closure({facets.begin(), facets.end()});
  std::size_t n = 0;
  for (const auto& s : inside) n += surface.count(s) == 0;
  return n;
}

int sort_sign(std::vector<Vertex> xs) {
  int sign = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] > xs[j]) sign = -sign;
  return sign;
}

// One deformation step on a facet set: the removed facets must be exactly
// the current facets inside the carrier.
void replay_step(const Graph& host, std::set<Simplex>& facets, int facet_dim, const DeformationStep& step,
                 std::size_t k) {
  const Simplex& t = step.carrier;
  if (t.dimension() != facet_dim + 1) reject("step carrier has the wrong dimension", k);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!host.adjacent(t[i], t[j])) reject("step carrier is not a simplex of the host", k);
  std::vector<Simplex> removed, added;
  for (auto& f : t.facets()) (facets.count(f) ? removed : added).push_back(f);
  std::sort(removed.begin(), removed.end());
  std::sort(added.begin(), added.end());
  if (removed.empty()) reject("step carrier shares no facet with the hypersurface", k);
  if (added.empty() && removed.size() != facets.size()) reject("step removes a full boundary prematurely", k);
  if (removed != step.removed || added != step.added) reject("step does not match its carrier", k);
  for (const auto& f : removed) facets.erase(f);
  for (const auto& f : added) facets.insert(f);
}

// ---------------------------------------------------------------------------
// Separation

struct Split {
  int dimension = 0;
  bool enhanced = true;
  Lift lifted;
  Graph host;
  VertexSet sphere;
  VertexSet a_raw, b_raw;
};

Split separation(const Graph& g, const Graph& h, const json& p) {
  Split s;
  auto gc = p.at("g_sphere").get<SphereCertificate>();
  sphere(g, gc, gc.dimension);
  s.dimension = gc.dimension;
  if (p.at("dimension").get<int>() != s.dimension) reject("separation: dimension does not match G");
  if (!h.is_subgraph_of(g)) reject("separation: H is not a subgraph of G");
  sphere(h, p.at("h_sphere").get<SphereCertificate>(), s.dimension - 1);
  const std::string mode = p.at("mode").get<std::string>();
  if (mode == "enhanced") {
    s.lifted = lift(g);
    s.host = s.lifted.host;
    for (const auto& c : cliques(h)) s.sphere.push_back(s.lifted.index.at(c));
    std::sort(s.sphere.begin(), s.sphere.end());
  } else if (mode == "direct") {
    s.enhanced = false;
    s.host = g;
    s.sphere = h.vertex_set();
  } else {
    reject("separation: unknown mode '" + mode + "'");
  }
  s.a_raw = p.at("a_raw").get<VertexSet>();
  s.b_raw = p.at("b_raw").get<VertexSet>();
  auto comps = connected_components(remove_vertices(s.host, s.sphere));
  if (comps.size() != 2) reject("separation: complement has " + std::to_string(comps.size()) + " components");
  if (comps[0] != s.a_raw || comps[1] != s.b_raw) reject("separation: listed sides are not the components");
  return s;
}

// ---------------------------------------------------------------------------
// Schoenflies

void schoenflies(const Graph& g, const Graph& h, const json& p) {
  Split s = separation(g, h, p.at("separation"));
  if (!s.enhanced) reject("schoenflies: separation must be enhanced");
  const int d = s.dimension;
  std::set<Simplex> start;
  if (d >= 1)
    for (auto& f : cliques_of_dimension(h, d - 1)) start.insert(std::move(f));
  const json& sides = p.at("sides");
  if (!sides.is_array() || sides.size() != 2) reject("schoenflies: two sides are required");
  std::size_t offset = 0;  // step numbering runs across both sides
  for (int which = 0; which < 2; ++which) {
    const json& side = sides[static_cast<std::size_t>(which)];
    const VertexSet& raw = which == 0 ? s.a_raw : s.b_raw;
    std::vector<Simplex> expected;
    for (const auto& t : cliques_of_dimension(g, d))
      if (set_contains(raw, s.lifted.index.at(t))) expected.push_back(t);
    auto region_list = side.at("region").get<std::vector<Simplex>>();
    if (region_list != expected) reject("schoenflies: region does not match the side");
    std::set<Simplex> region(region_list.begin(), region_list.end());
    std::set<Simplex> facets = start;
    auto steps = side.at("steps").get<std::vector<DeformationStep>>();
    auto measure = side.at("measure").get<std::vector<std::size_t>>();
    if (measure.size() != steps.size() + 1) reject("schoenflies: one measure per state is required");
    if (enclosed(region, facets) != measure[0]) reject("schoenflies: initial measure is wrong");
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const std::size_t id = offset + k;
      if (!region.count(steps[k].carrier)) reject("schoenflies: carrier is not left on this side", id);
      replay_step(g, facets, d - 1, steps[k], id);
      region.erase(steps[k].carrier);
      std::size_t m = enclosed(region, facets);
      if (m != measure[k + 1]) reject("schoenflies: measure after step is wrong", id);
      if (m >= measure[k]) reject("schoenflies: measure does not decrease", id);
    }
    offset += steps.size();
    auto last = side.at("last").get<Simplex>();
    if (region.size() != 1 || *region.begin() != last) reject("schoenflies: a single simplex must remain");
    if (d >= 1) {
      auto faces = last.facets();
      if (facets != std::set<Simplex>(faces.begin(), faces.end()))
        reject("schoenflies: final hypersurface is not the boundary of the last simplex");
    }
    if (!side.at("ball").is_null())
      ball(induced_subgraph(s.host, set_union(raw, s.sphere)), side.at("ball").get<BallCertificate>(), d);
  }
}

// ---------------------------------------------------------------------------
// Traces

void trace(const Graph& g, const json& p) {
  const std::string host_kind = p.at("host").get<std::string>();
  Graph host;
  if (host_kind == "base") host = g;
  else if (host_kind == "enhanced") host = lift(g).host;
  else reject("trace: unknown host '" + host_kind + "'");
  auto initial = p.at("initial").get<Hypersurface>();
  auto final_state = p.at("final").get<Hypersurface>();
  for (const auto& f : initial.facets) {
    if (f.dimension() != initial.facet_dim) reject("trace: initial facet has the wrong dimension");
    for (Vertex v : f)
      if (!host.has_vertex(v)) reject("trace: initial facet leaves the host");
  }
  auto steps = p.at("steps").get<std::vector<DeformationStep>>();
  std::set<Simplex> facets = initial.facets;
  for (std::size_t k = 0; k < steps.size(); ++k) replay_step(host, facets, initial.facet_dim, steps[k], k);
  if (final_state.facet_dim != initial.facet_dim || facets != final_state.facets)
    reject("trace: replay does not reach the stated final hypersurface");
}

// ---------------------------------------------------------------------------
// Intersection numbers

void coherent(const Graph& host, const Orientation& o, int dim, const char* what) {
  auto top = cliques_of_dimension(host, dim);
  if (o.dimension != dim || o.signs.size() != top.size()) reject(std::string(what) + ": wrong simplex set");
  std::map<Simplex, std::vector<int>> induced;
  for (const auto& t : top) {
    auto it = o.signs.find(t);
    if (it == o.signs.end()) reject(std::string(what) + ": simplex without sign");
    if (dim == 0) continue;
    for (std::size_t i = 0; i < t.size(); ++i) induced[t.without_index(i)].push_back(it->second * (i % 2 ? -1 : 1));
  }
  for (const auto& [face, signs] : induced)
    if (signs.size() == 2 && signs[0] == signs[1]) reject(std::string(what) + ": orientation is not coherent");
}

void intersection(const Graph& g, const Graph& h, const json& p) {
  Split s = separation(g, h, p.at("separation"));
  if (!s.enhanced) reject("intersection: separation must be enhanced");
  const int d = s.dimension;
  const Graph& g1 = s.host;
  Graph h1 = induced_subgraph(g1, s.sphere);
  auto og = p.at("host_orientation").get<Orientation>();
  auto oh = p.at("sphere_orientation").get<Orientation>();
  auto reference = p.at("sphere_reference").get<Orientation>();
  coherent(g1, og, d, "host orientation");
  coherent(h1, reference, d - 1, "sphere reference orientation");
  int sphere_sign = 0;
  if (oh.signs == reference.signs) sphere_sign = 1;
  else if (oh.signs == reference.flipped().signs) sphere_sign = -1;
  else reject("intersection: sphere orientation is neither the reference nor its reverse");

  auto xs = p.at("curve").get<std::vector<Vertex>>();
  const bool closed = p.at("closed").get<bool>();
  const int oc = p.at("curve_orientation").get<int>();
  if (oc != 1 && oc != -1) reject("intersection: curve orientation must be +1 or -1");
  if (xs.size() < 2) reject("intersection: curve too short");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!g1.has_vertex(xs[i])) reject("intersection: curve leaves the host");
    if ((i + 1 < xs.size() || closed) && !g1.adjacent(xs[i], xs[(i + 1) % xs.size()]))
      reject("intersection: curve step " + std::to_string(i) + " is not an edge");
  }
  if (oc == -1) {
    if (closed) std::reverse(xs.begin() + 1, xs.end());
    else std::reverse(xs.begin(), xs.end());
  }

  auto side = [&](Vertex y, Vertex a) {
    std::set<Vertex> seen{y};
    std::deque<Vertex> queue{y};
    while (!queue.empty()) {
      Vertex w = queue.front();
      queue.pop_front();
      for (const auto& [sigma, sign] : oh.signs) {
        if (!sigma.contains(a)) continue;
        if (!std::all_of(sigma.begin(), sigma.end(), [&](Vertex v) { return g1.adjacent(v, w); })) continue;
        std::vector<Vertex> ordered{w};
        ordered.insert(ordered.end(), sigma.begin(), sigma.end());
        return sort_sign(ordered) * sign * og.sign(sigma.with(w));
      }
      for (Vertex u : g1.neighbors(w))
        if (u != a && g1.adjacent(u, a) && !h1.has_vertex(u) && seen.insert(u).second) queue.push_back(u);
    }
    reject("intersection: no d-simplex next to vertex " + std::to_string(a));
  };

  const std::size_t n = xs.size();
  auto inside = [&](std::size_t i) { return h1.has_vertex(xs[i % n]); };
  json events = json::array();
  int total = 0;
  std::size_t start = 0;
  while (start < n && inside(start)) ++start;
  if (start < n) {
    const std::size_t span = closed ? n : n - start;
    std::size_t i = 1;
    while (i < span) {
      if (!inside(start + i)) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < span && inside(start + j)) ++j;
      if (j == span && !closed) break;
      std::size_t first = (start + i) % n, last = (start + j - 1) % n;
      Vertex y = xs[(start + i - 1) % n], z = xs[(start + j) % n];
      int s_in = side(y, xs[first]), s_out = side(z, xs[last]);
      bool crossing = s_in != s_out;
      if (crossing != (set_contains(s.a_raw, y) != set_contains(s.a_raw, z)))
        reject("intersection: local side disagrees with the components at index " + std::to_string(first));
      int contribution = crossing ? oc * sphere_sign : 2 * s_in * oc;
      total += contribution;
      events.push_back(json{{"after", z},
                            {"before", y},
                            {"contribution", contribution},
                            {"crossing", crossing},
                            {"first", first},
                            {"incoming", s_in == 1 ? 1 : 0},
                            {"last", last},
                            {"outgoing", s_out == 1 ? 1 : 0}});
      i = j;
    }
  }
  if (events != p.at("events")) reject("intersection: events do not match the curve");
  if (total != p.at("total").get<int>()) reject("intersection: total is not the sum of the events");
}

Graph input_graph(const json& inputs, const char* key) {
  if (!inputs.contains(key)) reject(std::string("certificate inputs lack '") + key + "'");
  return parse_graph(inputs[key].dump()).graph;
}

Verdict run(const std::function<void()>& body) {
  try {
    body();
  } catch (const Reject& r) {
    return {false, r.message, r.step};
  } catch (const InputError& e) {
    return {false, std::string("malformed certificate: ") + e.what(), std::nullopt};
  } catch (const PreconditionError& e) {
    return {false, std::string("malformed certificate: ") + e.what(), std::nullopt};
  } catch (const json::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what(), std::nullopt};
  } catch (const std::exception& e) {
    return {false, std::string("certificate rejected: ") + e.what(), std::nullopt};
  }
  return {};
}

}  // namespace

Verdict check_contraction(const Graph& g, const ContractionCertificate& c) {
  return run([&] { contraction(g, c); });
}

Verdict check_sphere(const Graph& g, const SphereCertificate& c) {
  return run([&] { sphere(g, c, c.dimension); });
}

Verdict check_ball(const Graph& g, const BallCertificate& c) {
  return run([&] { ball(g, c, c.dimension); });
}

Verdict verify_document(std::string_view text) {
  json doc;
  try {
    doc = parse_certificate_envelope(text);
  } catch (const InputError& e) {
    return {false, std::string("unreadable certificate: ") + e.what(), std::nullopt};
  }
  Verdict v = run([&] {
    const std::string kind = doc["kind"].get<std::string>();
    const json& inputs = doc["inputs"];
    const json& p = doc["payload"];
    Graph g = input_graph(inputs, "G");
    if (kind == "contraction") {
      contraction(g, p.at("certificate").get<ContractionCertificate>());
    } else if (kind == "sphere") {
      auto c = p.at("certificate").get<SphereCertificate>();
      sphere(g, c, c.dimension);
    } else if (kind == "ball") {
      auto c = p.at("certificate").get<BallCertificate>();
      ball(g, c, c.dimension);
    } else if (kind == "separation") {
      separation(g, input_graph(inputs, "H"), p);
    } else if (kind == "schoenflies") {
      schoenflies(g, input_graph(inputs, "H"), p);
    } else if (kind == "trace") {
      trace(g, p);
    } else if (kind == "intersection") {
      intersection(g, input_graph(inputs, "H"), p);
    } else {
      reject("unknown certificate kind '" + kind + "'");
    }
  });
  if (!v) return v;
  if (!doc["version"].is_string()) return {false, "version must be a string", std::nullopt};
  if (doc["input_digest"] != sha256_hex(doc["inputs"].dump())) return {false, "input digest mismatch", std::nullopt};
  if (doc["payload_digest"] != sha256_hex(doc["payload"].dump()))
    return {false, "payload digest mismatch", std::nullopt};
  return v;
}

}  // namespace evako
