#include "evako/classify.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "evako/canonical.hpp"

namespace evako {

// ---------------------------------------------------------------------------
// Certificate relabeling

namespace {

template <class F>
ContractionCertificate relabeled(const ContractionCertificate& c, const F& f) {
  ContractionCertificate out;
  out.removal_order.reserve(c.removal_order.size());
  for (Vertex v : c.removal_order) out.removal_order.push_back(f(v));
  out.links.reserve(c.links.size());
  for (const auto& l : c.links) out.links.push_back(relabeled(l, f));
  out.last = f(c.last);
  return out;
}

// Vertex lists are sorted, so relabeling may permute the per-vertex links.
template <class F>
SphereCertificate relabeled(const SphereCertificate& c, const F& f) {
  SphereCertificate out;
  out.dimension = c.dimension;
  if (c.dimension < 0) return out;
  std::vector<std::pair<Vertex, std::size_t>> order;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) order.emplace_back(f(c.vertices[i]), i);
  std::sort(order.begin(), order.end());
  for (auto [v, i] : order) {
    out.vertices.push_back(v);
    out.links.push_back(relabeled(c.links[i], f));
  }
  out.puncture = f(c.puncture);
  out.punctured = relabeled(c.punctured, f);
  return out;
}

template <class F>
BallCertificate relabeled(const BallCertificate& c, const F& f) {
  BallCertificate out;
  out.dimension = c.dimension;
  auto reorder = [&](const VertexSet& vs, const auto& links, VertexSet& out_vs, auto& out_links) {
    std::vector<std::pair<Vertex, std::size_t>> order;
    for (std::size_t i = 0; i < vs.size(); ++i) order.emplace_back(f(vs[i]), i);
    std::sort(order.begin(), order.end());
    for (auto [v, i] : order) {
      out_vs.push_back(v);
      out_links.push_back(relabeled(links[i], f));
    }
  };
  reorder(c.interior, c.interior_links, out.interior, out.interior_links);
  reorder(c.boundary, c.boundary_links, out.boundary, out.boundary_links);
  out.boundary_sphere = relabeled(c.boundary_sphere, f);
  out.contraction = relabeled(c.contraction, f);
  return out;
}

template <class F>
Refutation relabeled(const Refutation& r, const F& f) {
  Refutation out = r;
  for (auto& v : out.path) v = f(v);
  return out;
}

template <class C, class F>
Outcome<C> relabeled(const Outcome<C>& o, const F& f) {
  if (o) return Outcome<C>::accept(relabeled(*o.certificate, f));
  return Outcome<C>::reject(relabeled(o.refutation, f));
}

Rational relabeled(const Rational& r, const auto&) { return r; }

// Memo keyed by canonical form. Exact keys store values in canonical
// positions; inexact keys store the representative and only hit on an
// identical graph.
template <class Value>
class Memo {
 public:
  std::optional<Value> find(const CanonicalForm& cf, const Graph& g) const {
    auto it = slots_.find(cf.key);
    if (it == slots_.end()) return std::nullopt;
    for (const auto& e : it->second) {
      if (cf.exact) {
        return relabeled(e.value, [&](Vertex pos) { return cf.order[pos]; });
      }
      if (e.representative == g) return e.value;
    }
    return std::nullopt;
  }

  void insert(const CanonicalForm& cf, const Graph& g, const Value& v) {
    auto& slot = slots_[cf.key];
    if (cf.exact) {
      if (!slot.empty()) return;
      std::unordered_map<Vertex, Vertex> pos;
      for (std::size_t i = 0; i < cf.order.size(); ++i) pos[cf.order[i]] = static_cast<Vertex>(i);
      slot.push_back({Graph{}, relabeled(v, [&](Vertex x) { return pos.at(x); })});
    } else {
      for (const auto& e : slot)
        if (e.representative == g) return;
      slot.push_back({g, v});
    }
  }

  void clear() { slots_.clear(); }

 private:
  struct Entry {
    Graph representative;
    Value value;
  };
  std::unordered_map<std::string, std::vector<Entry>> slots_;
};

}  // namespace

struct Classifier::Caches {
  Memo<Outcome<ContractionCertificate>> contractible;
  Memo<Rational> dimension;
  Memo<Outcome<SphereCertificate>> sphere;
  Memo<Outcome<BallCertificate>> ball;
};

// Resets the node counter at the outermost call and holds the lock for the
// whole classification.
struct Classifier::Scope {
  Classifier& self;
  std::lock_guard<std::recursive_mutex> lock;
  explicit Scope(Classifier& c) : self(c), lock(c.mutex_) {
    if (self.depth_++ == 0) self.nodes_used_ = 0;
  }
  ~Scope() { --self.depth_; }
};

Classifier::Classifier(std::uint64_t node_budget)
    : node_budget_(node_budget), caches_(std::make_unique<Caches>()) {}

Classifier::~Classifier() = default;

void Classifier::clear() {
  std::lock_guard lock(mutex_);
  caches_ = std::make_unique<Caches>();
}

void Classifier::charge() {
  if (++nodes_used_ > node_budget_)
    throw ResourceLimitError("classification exceeded node budget of " + std::to_string(node_budget_));
}

Outcome<ContractionCertificate> Classifier::contractible(const Graph& g) {
  Scope scope(*this);
  return contractible_impl(g);
}

Rational Classifier::dimension(const Graph& g) {
  Scope scope(*this);
  return dimension_impl(g);
}

Outcome<SphereCertificate> Classifier::sphere(const Graph& g) {
  Scope scope(*this);
  return sphere_impl(g);
}

Outcome<BallCertificate> Classifier::ball(const Graph& g) {
  Scope scope(*this);
  return ball_impl(g);
}

// ---------------------------------------------------------------------------
// Contractibility

Outcome<ContractionCertificate> Classifier::contractible_impl(const Graph& g) {
  using Result = Outcome<ContractionCertificate>;
  if (g.empty()) return Result::reject({"empty graph is not contractible", {}, 0});
  if (g.order() == 1) return Result::accept({{}, {}, g.vertices()[0]});
  if (g.order() == 2 && g.size() == 1) {
    ContractionCertificate c;
    c.removal_order = {g.vertices()[0]};
    c.links = {ContractionCertificate{{}, {}, g.vertices()[1]}};
    c.last = g.vertices()[1];
    return Result::accept(std::move(c));
  }

  auto cf = canonical_form(g);
  if (auto hit = caches_->contractible.find(cf, g)) return *hit;

  Result result;
  if (!is_connected(g)) {
    result = Result::reject({"disconnected", {}, 0});
  } else if (euler_characteristic(g) != 1) {
    // Reduction steps preserve the Euler characteristic and chi(K1) = 1.
    result = Result::reject({"euler characteristic " + std::to_string(euler_characteristic(g)), {}, 0});
  } else {
    charge();
    std::uint64_t explored = 0;
    for (Vertex x : g.vertices()) {
      auto link = contractible_impl(unit_sphere(g, x));
      if (!link) continue;
      ++explored;
      auto rest = contractible_impl(remove_vertex(g, x));
      if (!rest) {
        explored += rest.refutation.explored;
        continue;
      }
      ContractionCertificate c;
      c.removal_order.reserve(g.order() - 1);
      c.removal_order.push_back(x);
      c.links.push_back(std::move(*link.certificate));
      auto& r = *rest.certificate;
      c.removal_order.insert(c.removal_order.end(), r.removal_order.begin(), r.removal_order.end());
      for (auto& l : r.links) c.links.push_back(std::move(l));
      c.last = r.last;
      result = Result::accept(std::move(c));
      break;
    }
    if (!result) result = Result::reject({"no removal sequence reaches K1", {}, explored});
  }
  caches_->contractible.insert(cf, g, result);
  return result;
}

// ---------------------------------------------------------------------------
// Dimension

Rational Classifier::dimension_impl(const Graph& g) {
  if (g.empty()) return Rational(-1);
  if (g.order() == 1) return Rational(0);
  auto cf = canonical_form(g);
  if (auto hit = caches_->dimension.find(cf, g)) return *hit;
  Rational sum;
  for (Vertex x : g.vertices()) sum += dimension_impl(unit_sphere(g, x));
  Rational d = Rational(1) + sum / Rational(static_cast<std::int64_t>(g.order()));
  caches_->dimension.insert(cf, g, d);
  return d;
}

// ---------------------------------------------------------------------------
// Spheres

Outcome<SphereCertificate> Classifier::sphere_impl(const Graph& g) {
  using Result = Outcome<SphereCertificate>;
  if (g.empty()) return Result::accept(SphereCertificate{});

  auto cf = canonical_form(g);
  if (auto hit = caches_->sphere.find(cf, g)) return *hit;

  auto compute = [&]() -> Result {
    Rational dim = dimension_impl(g);
    if (!dim.is_integer()) return Result::reject({"dimension " + dim.str() + " is not integral", {}, 0});
    const int d = static_cast<int>(dim.numerator());
    SphereCertificate c;
    c.dimension = d;
    for (Vertex x : g.vertices()) {
      auto link = sphere_impl(unit_sphere(g, x));
      if (!link) {
        Refutation r = link.refutation;
        r.path.insert(r.path.begin(), x);
        r.reason = "unit sphere not a sphere: " + r.reason;
        return Result::reject(std::move(r));
      }
      if (link->dimension != d - 1) {
        return Result::reject({"unit sphere is a " + std::to_string(link->dimension) +
                                   "-sphere, expected " + std::to_string(d - 1),
                               {x}, 0});
      }
      c.vertices.push_back(x);
      c.links.push_back(std::move(*link.certificate));
    }
    for (Vertex x : g.vertices()) {
      auto rest = contractible_impl(remove_vertex(g, x));
      if (rest) {
        c.puncture = x;
        c.punctured = std::move(*rest.certificate);
        return Result::accept(std::move(c));
      }
    }
    return Result::reject({"no vertex leaves a contractible graph", {}, 0});
  };

  Result result = compute();
  caches_->sphere.insert(cf, g, result);
  return result;
}

// ---------------------------------------------------------------------------
// Balls

Outcome<BallCertificate> Classifier::ball_impl(const Graph& g) {
  using Result = Outcome<BallCertificate>;
  if (g.empty()) return Result::reject({"empty graph is not a ball", {}, 0});

  auto cf = canonical_form(g);
  if (auto hit = caches_->ball.find(cf, g)) return *hit;

  auto compute = [&]() -> Result {
    Rational dim = dimension_impl(g);
    if (!dim.is_integer()) return Result::reject({"dimension " + dim.str() + " is not integral", {}, 0});
    const int d = static_cast<int>(dim.numerator());
    BallCertificate c;
    c.dimension = d;
    for (Vertex x : g.vertices()) {
      Graph s = unit_sphere(g, x);
      auto as_sphere = sphere_impl(s);
      if (as_sphere && as_sphere->dimension == d - 1) {
        c.interior.push_back(x);
        c.interior_links.push_back(std::move(*as_sphere.certificate));
        continue;
      }
      auto as_ball = d >= 1 ? ball_impl(s) : Result::reject({"no (-1)-balls", {}, 0});
      if (as_ball && as_ball->dimension == d - 1) {
        c.boundary.push_back(x);
        c.boundary_links.push_back(std::move(*as_ball.certificate));
        continue;
      }
      return Result::reject({"unit sphere is neither a " + std::to_string(d - 1) + "-sphere nor a " +
                                 std::to_string(d - 1) + "-ball",
                             {x}, 0});
    }
    auto delta = sphere_impl(induced_subgraph(g, c.boundary));
    if (!delta || delta->dimension != d - 1)
      return Result::reject({"boundary does not generate a " + std::to_string(d - 1) + "-sphere", {}, 0});
    c.boundary_sphere = std::move(*delta.certificate);
    auto con = contractible_impl(g);
    if (!con) {
      Refutation r = con.refutation;
      r.reason = "not contractible: " + r.reason;
      return Result::reject(std::move(r));
    }
    c.contraction = std::move(*con.certificate);
    return Result::accept(std::move(c));
  };

  Result result = compute();
  caches_->ball.insert(cf, g, result);
  return result;
}

// ---------------------------------------------------------------------------
// Free functions

Classifier& default_classifier() {
  static Classifier instance;
  return instance;
}

Outcome<ContractionCertificate> is_contractible(const Graph& g) { return default_classifier().contractible(g); }
Rational inductive_dimension(const Graph& g) { return default_classifier().dimension(g); }
Outcome<SphereCertificate> is_sphere(const Graph& g) { return default_classifier().sphere(g); }
Outcome<BallCertificate> is_ball(const Graph& g) { return default_classifier().ball(g); }

GeometricReport is_geometric(const Graph& g) {
  if (g.empty()) throw PreconditionError("is_geometric: empty graph");
  GeometricReport report;
  std::optional<int> dim;
  bool any_ball = false;
  for (Vertex x : g.vertices()) {
    Graph s = unit_sphere(g, x);
    int here;
    bool ball_here = false;
    if (auto sp = is_sphere(s)) {
      here = sp->dimension + 1;
    } else if (auto b = (s.empty() ? Outcome<BallCertificate>{} : is_ball(s))) {
      here = b->dimension + 1;
      ball_here = true;
    } else {
      report.witness = x;
      report.reason = "unit sphere is neither a sphere nor a ball";
      return report;
    }
    if (dim && *dim != here) {
      report.witness = x;
      report.reason = "unit sphere dimensions disagree";
      return report;
    }
    dim = here;
    if (ball_here) {
      any_ball = true;
      report.boundary.push_back(x);
    }
  }
  report.dimension = *dim;
  if (!any_ball) {
    report.kind = GeometricKind::geometric;
    return report;
  }
  // an all-boundary graph would recurse on itself
  bool whole = report.boundary.size() == g.order();
  auto delta = whole ? GeometricReport{} : is_geometric(induced_subgraph(g, report.boundary));
  if (whole || delta.kind != GeometricKind::geometric || delta.dimension != *dim - 1) {
    report.reason = "boundary is not a closed geometric graph of dimension " + std::to_string(*dim - 1);
    report.witness = report.boundary.front();
    report.boundary.clear();
    return report;
  }
  report.kind = GeometricKind::with_boundary;
  return report;
}

Graph boundary(const Graph& g) {
  if (g.empty()) throw PreconditionError("boundary: empty graph");
  auto report = is_geometric(g);
  if (report.kind != GeometricKind::with_boundary)
    throw PreconditionError("boundary: graph is not geometric with boundary");
  return induced_subgraph(g, report.boundary);
}

// ---------------------------------------------------------------------------
// Orientation

int Orientation::sign(const Simplex& s) const {
  auto it = signs.find(s);
  if (it == signs.end()) throw PreconditionError("orientation has no sign for simplex");
  return it->second;
}

Orientation Orientation::flipped() const {
  Orientation out = *this;
  for (auto& [s, v] : out.signs) v = -v;
  return out;
}

int permutation_sign(std::vector<Vertex> ordered) {
  int sign = 1;
  for (std::size_t i = 0; i < ordered.size(); ++i)
    for (std::size_t j = i + 1; j < ordered.size(); ++j)
      if (ordered[i] > ordered[j]) sign = -sign;
  return sign;
}

int induced_face_sign(const Simplex& simplex, int sign, const Simplex& face) {
  for (std::size_t i = 0; i < simplex.size(); ++i)
    if (!face.contains(simplex[i])) return (i % 2 == 0) ? sign : -sign;
  throw PreconditionError("induced_face_sign: not a facet");
}

OrientationResult orient(const Graph& g) {
  if (g.empty()) throw PreconditionError("orient: empty graph");
  auto report = is_geometric(g);
  if (report.kind == GeometricKind::neither) throw PreconditionError("orient: graph is not geometric");
  const int d = report.dimension;
  auto top = cliques_of_dimension(g, d);
  if (d == 0) {
    // Points share only the empty face; any choice of signs is consistent.
    Orientation o;
    for (auto& s : top) o.signs.emplace(std::move(s), 1);
    return {std::move(o), {}};
  }

  std::map<Simplex, std::vector<std::size_t>> by_facet;
  for (std::size_t i = 0; i < top.size(); ++i)
    for (auto& f : top[i].facets()) by_facet[f].push_back(i);

  std::vector<int> sign(top.size(), 0);
  std::vector<std::size_t> parent(top.size(), SIZE_MAX);
  for (std::size_t root = 0; root < top.size(); ++root) {
    if (sign[root]) continue;
    sign[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      auto i = queue.front();
      queue.pop_front();
      for (auto& f : top[i].facets()) {
        int want_face = -induced_face_sign(top[i], sign[i], f);
        for (auto j : by_facet[f]) {
          if (j == i) continue;
          // sign for j such that j induces want_face on f
          int sj = induced_face_sign(top[j], 1, f) == want_face ? 1 : -1;
          if (!sign[j]) {
            sign[j] = sj;
            parent[j] = i;
            queue.push_back(j);
          } else if (sign[j] != sj) {
            // Close the loop through the BFS tree.
            std::vector<std::size_t> pa{i}, pb{j};
            while (parent[pa.back()] != SIZE_MAX) pa.push_back(parent[pa.back()]);
            while (parent[pb.back()] != SIZE_MAX) pb.push_back(parent[pb.back()]);
            while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
              pa.pop_back();
              pb.pop_back();
            }
            OrientationResult out;
            for (auto k : pa) out.conflict_loop.push_back(top[k]);
            for (auto it = pb.rbegin() + 1; it != pb.rend(); ++it) out.conflict_loop.push_back(top[*it]);
            return out;
          }
        }
      }
    }
  }
  Orientation o;
  o.dimension = d;
  for (std::size_t i = 0; i < top.size(); ++i) o.signs.emplace(top[i], sign[i]);
  return {std::move(o), {}};
}

// ---------------------------------------------------------------------------
// Random graph expectation

Polynomial expected_dimension_polynomial(int n) {
  if (n < 0 || n > kMaxExpectationOrder)
    throw PreconditionError("expected_dimension_polynomial: n must lie in [0, " +
                            std::to_string(kMaxExpectationOrder) + "]");
  // d[k] = expected dimension of G(k, p); d[0] is the empty graph.
  std::vector<Polynomial> d{Polynomial::constant(-1)};
  const Polynomial p = Polynomial::linear(0, 1);
  const Polynomial q = Polynomial::linear(1, -1);
  for (int m = 0; m <= n; ++m) {
    // d[m+1] = 1 + sum_k C(m,k) p^k (1-p)^(m-k) d[k]
    Polynomial next = Polynomial::constant(1);
    std::int64_t binom = 1;
    for (int k = 0; k <= m; ++k) {
      Polynomial term = Polynomial::constant(binom);
      for (int i = 0; i < k; ++i) term *= p;
      for (int i = 0; i < m - k; ++i) term *= q;
      next += term * d[k];
      binom = binom * (m - k) / (k + 1);
    }
    d.push_back(std::move(next));
  }
  return d[n + 1];
}

}  // namespace evako
