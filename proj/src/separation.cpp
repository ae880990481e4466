#include "evako/separation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "evako/embed.hpp"

namespace evako {

namespace {

struct Validated {
  int dimension = 0;
};

Validated validate_pair(const Graph& h, const Graph& g, const char* op) {
  auto gs = is_sphere(g);
  if (!gs) throw PreconditionError(std::string(op) + ": G is not a sphere");
  if (!h.is_subgraph_of(g)) throw PreconditionError(std::string(op) + ": H is not a subgraph of G");
  auto hs = is_sphere(h);
  if (!hs || hs->dimension != gs->dimension - 1)
    throw PreconditionError(std::string(op) + ": H is not a " + std::to_string(gs->dimension - 1) + "-sphere");
  return {gs->dimension};
}

SeparationResult split(Graph host, const VertexSet& sphere_vertices, int d, bool enhanced_mode,
                       std::shared_ptr<const EnhancedGraph> lift) {
  SeparationResult r;
  r.sphere = induced_subgraph(host, sphere_vertices);
  auto comps = connected_components(remove_vertices(host, sphere_vertices));
  if (comps.size() != 2)
    throw TheoremViolation("complement of the sphere has " + std::to_string(comps.size()) +
                               " components, expected 2",
                           comps);
  r.a_raw = std::move(comps[0]);
  r.b_raw = std::move(comps[1]);
  r.a = induced_subgraph(host, set_union(r.a_raw, sphere_vertices));
  r.b = induced_subgraph(host, set_union(r.b_raw, sphere_vertices));
  r.host = std::move(host);
  r.enhanced = enhanced_mode;
  r.dimension = d;
  r.lift = std::move(lift);
  return r;
}

std::set<Simplex> all_faces(const std::vector<Simplex>& simplices) {
  std::set<Simplex> out;
  for (const auto& s : simplices) {
    const std::size_t k = s.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<Vertex> face;
      for (std::size_t b = 0; b < k; ++b)
        if (mask >> b & 1) face.push_back(s[b]);
      out.emplace(std::move(face));
    }
  }
  return out;
}

bool same_step(const DeformationStep& x, const DeformationStep& y) {
  return x.carrier == y.carrier && x.removed == y.removed && x.added == y.added;
}

}  // namespace

SeparationResult separate(const Graph& h, const Graph& g, SeparationMode mode) {
  const int d = validate_pair(h, g, "separate").dimension;
  if (mode == SeparationMode::direct) {
    if (!is_embedded(h, g).embedded) throw PreconditionError("separate: direct mode needs an embedded sphere");
    return split(g, h.vertex_set(), d, false, nullptr);
  }
  auto lift = std::make_shared<const EnhancedGraph>(g);
  VertexSet lifted = lift_vertices(*lift, h);
  Graph host = lift->enhanced();
  return split(std::move(host), lifted, d, true, std::move(lift));
}

std::string separation_invariant_failure(const SeparationResult& r) {
  const VertexSet& hv = r.sphere.vertex_set();
  if (r.a_raw.empty() || r.b_raw.empty()) return "a side is empty";
  if (!set_intersection(r.a_raw, r.b_raw).empty()) return "sides overlap";
  if (!set_intersection(r.a_raw, hv).empty() || !set_intersection(r.b_raw, hv).empty())
    return "a side meets the sphere";
  if (!is_connected(induced_subgraph(r.host, r.a_raw)) || !is_connected(induced_subgraph(r.host, r.b_raw)))
    return "a side is disconnected";
  if (set_intersection(r.a.vertex_set(), r.b.vertex_set()) != hv) return "A ∩ B differs from the sphere";
  if (induced_subgraph(r.a, hv) != r.sphere || induced_subgraph(r.b, hv) != r.sphere)
    return "A ∩ B differs from the sphere";
  if (set_union(r.a.vertex_set(), r.b.vertex_set()) != r.host.vertex_set()) return "A ∪ B misses vertices";
  for (auto [u, v] : r.host.edges())
    if (!r.a.adjacent(u, v) && !r.b.adjacent(u, v)) return "A ∪ B misses an edge";
  return {};
}

EulerBudget euler_budget_check(const SeparationResult& r) {
  EulerBudget out;
  out.chi_a = euler_characteristic(r.a);
  out.chi_b = euler_characteristic(r.b);
  out.sum_is_two = out.chi_a + out.chi_b == 2;
  out.each_is_one = out.chi_a == 1 && out.chi_b == 1;
  return out;
}

// ---------------------------------------------------------------------------
// Intersection numbers

IntersectionSetup::IntersectionSetup(const Graph& h, const Graph& g) {
  dimension_ = validate_pair(h, g, "intersection").dimension;
  if (dimension_ < 1) throw PreconditionError("intersection: G must have dimension >= 1");
  lift_ = std::make_shared<const EnhancedGraph>(g);
  VertexSet lifted = lift_vertices(*lift_, h);
  separation_ = split(lift_->enhanced(), lifted, dimension_, true, lift_);
  sphere_ = separation_.sphere;
  auto og = orient(host());
  if (!og) throw PreconditionError("intersection: enhanced host is not orientable");
  host_orientation_ = std::move(*og.orientation);
  auto oh = orient(sphere_);
  if (!oh) throw PreconditionError("intersection: enhanced sphere is not orientable");
  sphere_orientation_ = std::move(*oh.orientation);
}

// Side of y relative to the sphere near a: +1 when (w, sigma) read with the
// sphere orientation on sigma agrees with the host orientation of the
// d-simplex sigma ∪ {w}. When y spans no such simplex with a top simplex of
// the sphere, w is found by walking from y inside S(a) off the sphere.
int IntersectionSetup::side(Vertex y, Vertex a, const Orientation& oh, std::size_t index) const {
  const Graph& g1 = host();
  std::set<Vertex> seen{y};
  std::deque<Vertex> queue{y};
  while (!queue.empty()) {
    Vertex w = queue.front();
    queue.pop_front();
    for (const auto& [sigma, sign] : oh.signs) {
      if (!sigma.contains(a)) continue;
      bool spans = std::all_of(sigma.begin(), sigma.end(), [&](Vertex v) { return g1.adjacent(v, w); });
      if (!spans) continue;
      std::vector<Vertex> ordered{w};
      ordered.insert(ordered.end(), sigma.begin(), sigma.end());
      return permutation_sign(ordered) * sign * host_orientation_.sign(sigma.with(w));
    }
    for (Vertex u : g1.neighbors(w)) {
      if (u == a || !g1.adjacent(u, a) || sphere_.has_vertex(u)) continue;
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  throw PreconditionError("malformed geometry: no d-simplex at curve index " + std::to_string(index));
}

IntersectionCount IntersectionSetup::count_impl(const Curve& c, int oc, const Orientation& oh) const {
  if (oc != 1 && oc != -1) throw PreconditionError("curve orientation must be +1 or -1");
  if (oh.dimension != sphere_orientation_.dimension || oh.signs.size() != sphere_orientation_.signs.size())
    throw PreconditionError("sphere orientation does not match H1");
  for (const auto& [s, v] : sphere_orientation_.signs)
    if (!oh.signs.count(s)) throw PreconditionError("sphere orientation is missing a simplex");
  for (Vertex v : c.vertices())
    if (!host().has_vertex(v)) throw PreconditionError("curve leaves the enhanced graph");

  // Crossings count +1 under the reference orientations; a flip of either
  // orientation negates them.
  int sphere_sign = 0;
  if (oh.signs == sphere_orientation_.signs) sphere_sign = 1;
  else if (oh.signs == sphere_orientation_.flipped().signs) sphere_sign = -1;
  else throw PreconditionError("sphere orientation is neither the reference nor its reverse");

  IntersectionCount out;
  out.curve_orientation = oc;
  out.sphere_orientation = oh;
  const Curve walk = oc == 1 ? c : c.reversed();
  const auto& xs = walk.vertices();
  const std::size_t n = xs.size();
  auto inside = [&](std::size_t i) { return sphere_.has_vertex(xs[i % n]); };

  std::size_t start = 0;
  while (start < n && inside(start)) ++start;
  if (start == n) return out;  // curve inside the sphere

  const std::size_t span = walk.closed() ? n : n - start;
  std::size_t i = 1;
  while (i < span) {
    if (!inside(start + i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < span && inside(start + j)) ++j;
    if (j == span && !walk.closed()) break;  // run reaches the open end
    IntersectionEvent ev;
    ev.first = (start + i) % n;
    ev.last = (start + j - 1) % n;
    ev.before = xs[(start + i - 1) % n];
    ev.after = xs[(start + j) % n];
    int s_in = side(ev.before, xs[ev.first], oh, ev.first);
    int s_out = side(ev.after, xs[ev.last], oh, ev.last);
    ev.incoming = s_in == 1;
    ev.outgoing = s_out == 1;
    ev.crossing = s_in != s_out;
    ev.contribution = ev.crossing ? oc * sphere_sign : 2 * s_in * oc;
    out.total += ev.contribution;
    out.events.push_back(ev);
    i = j;
  }
  return out;
}

IntersectionCount IntersectionSetup::count(const Curve& c, int oc, const Orientation& oh) const {
  if (!c.closed()) throw PreconditionError("intersection_number: curve must be closed");
  return count_impl(c, oc, oh);
}

std::size_t IntersectionSetup::side_changes(const Curve& c) const {
  const auto& xs = c.vertices();
  std::vector<int> sides;
  for (Vertex v : xs) {
    if (set_contains(separation_.a_raw, v)) sides.push_back(0);
    else if (set_contains(separation_.b_raw, v)) sides.push_back(1);
  }
  if (sides.empty()) return 0;
  std::size_t changes = 0;
  for (std::size_t i = 0; i + 1 < sides.size(); ++i) changes += sides[i] != sides[i + 1];
  if (c.closed()) changes += sides.back() != sides.front();
  return changes;
}

int IntersectionSetup::parity(const Curve& c) const {
  auto count = count_impl(c, 1, sphere_orientation_);
  for (const auto& ev : count.events) {
    bool apart = set_contains(separation_.a_raw, ev.before) != set_contains(separation_.a_raw, ev.after);
    if (apart != ev.crossing)
      throw TheoremViolation("local side test disagrees with the separation at curve index " +
                             std::to_string(ev.first));
  }
  const int p = ((count.total % 2) + 2) % 2;
  if (static_cast<int>(side_changes(c) % 2) != p)
    throw TheoremViolation("intersection parity disagrees with the side change count");
  return p;
}

IntersectionCount intersection_number(const Curve& c, const Graph& h, const Graph& g, int oc,
                                      const Orientation& oh) {
  return IntersectionSetup(h, g).count(c, oc, oh);
}

int intersection_parity(const Curve& c, const Graph& h, const Graph& g) {
  return IntersectionSetup(h, g).parity(c);
}

ParityReport parity_homotopy_invariance(const Curve& c, const DeformationTrace& steps, const IntersectionSetup& s) {
  if (!(steps.initial == hypersurface_from_curve(c)))
    throw PreconditionError("trace does not start at the curve");
  const Graph& g1 = s.host();
  std::optional<Vertex> front, back;
  if (!c.closed()) {
    front = c.vertices().front();
    back = c.vertices().back();
  }
  ParityReport report;
  report.parities.push_back(s.parity(c));
  Hypersurface h = steps.initial;
  for (std::size_t k = 0; k < steps.steps.size(); ++k) {
    const auto& step = steps.steps[k];
    if (!same_step(deformation_step(g1, h, step.carrier), step))
      throw PreconditionError("trace step " + std::to_string(k) + " is not a deformation of the current curve");
    h = apply_step(h, step);
    int p = 0;
    if (!h.empty()) {
      auto next = curve_from_hypersurface(g1, h, front);
      if (!next || next->closed() != c.closed() || (back && next->vertices().back() != *back))
        throw PreconditionError("trace step " + std::to_string(k) + " does not leave a simple curve");
      p = s.parity(*next);
    } else if (!c.closed()) {
      throw PreconditionError("trace step " + std::to_string(k) + " removes an open curve");
    }
    report.parities.push_back(p);
    if (p != report.parities.front() && report.preserved) {
      report.preserved = false;
      report.first_violation = k;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Schoenflies

std::size_t enclosed_count(const std::vector<Simplex>& region, const Hypersurface& h) {
  auto inside = all_faces(region);
  auto surface = all_faces(std::vector<Simplex>(h.facets.begin(), h.facets.end()));
  std::size_t n = 0;
  for (const auto& s : inside) n += surface.count(s) == 0;
  return n;
}

namespace {

bool facets_form_sphere(const std::set<Simplex>& facets, int dim) {
  Graph poset = face_poset_graph(std::vector<Simplex>(facets.begin(), facets.end()));
  auto s = is_sphere(poset);
  return s && s->dimension == dim;
}

SchoenfliesSide shrink(const Graph& g, std::vector<Simplex> region, const Hypersurface& start) {
  SchoenfliesSide side;
  side.region = region;
  side.trace.initial = start;
  Hypersurface h = start;
  std::size_t current = enclosed_count(region, h);
  side.measure.push_back(current);
  while (region.size() > 1) {
    std::optional<std::size_t> best;
    std::size_t best_measure = current;
    DeformationStep best_step;
    for (std::size_t i = 0; i < region.size(); ++i) {
      const auto& t = region[i];
      DeformationStep step;
      try {
        step = deformation_step(g, h, t);
      } catch (const PreconditionError&) {
        continue;
      }
      Hypersurface next = apply_step(h, step);
      std::vector<Simplex> rest = region;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      std::size_t m = enclosed_count(rest, next);
      if (m >= best_measure) continue;
      if (!facets_form_sphere(next.facets, h.facet_dim)) continue;
      best = i;
      best_measure = m;
      best_step = std::move(step);
    }
    if (!best) {
      std::vector<VertexSet> left;
      for (const auto& t : region) left.push_back(t.tuple());
      throw TheoremViolation("no eligible simplex while shrinking a side", std::move(left));
    }
    h = apply_step(h, best_step);
    side.trace.steps.push_back(std::move(best_step));
    region.erase(region.begin() + static_cast<std::ptrdiff_t>(*best));
    current = best_measure;
    side.measure.push_back(current);
  }
  if (region.empty()) throw TheoremViolation("side contains no top simplex");
  side.last = region.front();
  if (h.facet_dim >= 0) {
    auto faces = side.last.facets();
    if (h.facets != std::set<Simplex>(faces.begin(), faces.end()))
      throw TheoremViolation("final hypersurface is not the boundary of the last simplex", {side.last.tuple()});
  }
  return side;
}

}  // namespace

SchoenfliesCertificate schoenflies(const Graph& h, const Graph& g, bool check_balls) {
  SchoenfliesCertificate cert;
  cert.separation = separate(h, g, SeparationMode::enhanced);
  const int d = cert.separation.dimension;
  cert.dimension = d;
  const EnhancedGraph& e = *cert.separation.lift;

  Hypersurface start;
  start.facet_dim = d - 1;
  if (d >= 1)
    for (auto& f : cliques_of_dimension(h, d - 1)) start.facets.insert(std::move(f));

  std::vector<Simplex> region_a, region_b;
  for (const auto& t : cliques_of_dimension(g, d)) {
    Vertex v = e.vertex_of(t);
    if (set_contains(cert.separation.a_raw, v)) region_a.push_back(t);
    else if (set_contains(cert.separation.b_raw, v)) region_b.push_back(t);
  }
  cert.a = shrink(g, std::move(region_a), start);
  cert.b = shrink(g, std::move(region_b), start);

  if (check_balls) {
    cert.a.ball = is_ball(cert.separation.a).certificate;
    cert.b.ball = is_ball(cert.separation.b).certificate;
    if (is_embedded(h, g).embedded) {
      auto direct = separate(h, g, SeparationMode::direct);
      Vertex probe = e.vertex_of(Simplex{direct.a_raw.front()});
      bool aligned = set_contains(cert.separation.a_raw, probe);
      cert.a.direct_ball = is_ball(aligned ? direct.a : direct.b).certificate;
      cert.b.direct_ball = is_ball(aligned ? direct.b : direct.a).certificate;
      cert.a.direct_checked = cert.b.direct_checked = true;
    }
  }
  return cert;
}

}  // namespace evako
