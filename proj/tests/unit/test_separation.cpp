#include <doctest.h>

#include <algorithm>
#include <random>

#include "evako/canonical.hpp"
#include "evako/classify.hpp"
#include "evako/embed.hpp"
#include "evako/generators.hpp"
#include "evako/separation.hpp"
#include "cycles.hpp"

using namespace evako;

namespace {

Graph equator() { return induced_subgraph(gen::octahedron(), std::vector<Vertex>{0, 1, 2, 3}); }

// Oracle for a closed curve: side changes counted directly on A''/B''.
int component_parity(const Curve& c, const SeparationResult& r) {
  std::vector<int> sides;
  for (Vertex v : c.vertices()) {
    if (set_contains(r.a_raw, v)) sides.push_back(0);
    if (set_contains(r.b_raw, v)) sides.push_back(1);
  }
  int changes = 0;
  for (std::size_t i = 0; i < sides.size(); ++i) changes += sides[i] != sides[(i + 1) % sides.size()];
  return changes % 2;
}

}  // namespace

TEST_CASE("the equator splits the octahedron into two wheels") {
  auto o = gen::octahedron();
  auto r = separate(equator(), o, SeparationMode::direct);
  CHECK(r.a_raw == VertexSet{4});
  CHECK(r.b_raw == VertexSet{5});
  CHECK(isomorphic(r.a, gen::wheel(4)));
  CHECK(isomorphic(r.b, gen::wheel(4)));
  CHECK(separation_invariant_failure(r).empty());
  auto e = euler_budget_check(r);
  CHECK(e.sum_is_two);
  CHECK(e.each_is_one);
}

TEST_CASE("small separations") {
  // the empty graph in P2
  auto p2 = gen::edgeless(2);
  auto r0 = separate(Graph{}, p2, SeparationMode::direct);
  CHECK(isomorphic(r0.a, gen::complete(1)));
  CHECK(isomorphic(r0.b, gen::complete(1)));
  auto r0e = separate(Graph{}, p2);
  CHECK(r0e.a.order() == 1);
  CHECK(euler_budget_check(r0e).sum_is_two);
  // P2 in C4: each side joined with H is the path 0 - 1 - 2
  auto c4 = gen::cycle(4);
  auto pair = induced_subgraph(c4, std::vector<Vertex>{0, 2});
  auto r1 = separate(pair, c4, SeparationMode::direct);
  CHECK(r1.a_raw == VertexSet{1});
  CHECK(isomorphic(r1.a, gen::line(3)));
  CHECK(isomorphic(r1.b, gen::line(3)));
  CHECK(separation_invariant_failure(r1).empty());
}

TEST_CASE("a unit circle of the icosahedron") {
  auto ico = gen::icosahedron();
  auto s = unit_sphere(ico, 0);
  auto r = separate(s, ico, SeparationMode::direct);
  CHECK(isomorphic(r.a, gen::wheel(5)));
  CHECK(r.b.order() == 11);
  CHECK(is_ball(r.b));
  CHECK(euler_budget_check(r).each_is_one);
}

TEST_CASE("enhanced separations of random cycles") {
  std::mt19937_64 rng(41);
  for (auto g : {gen::octahedron(), gen::icosahedron()}) {
    for (int trial = 0; trial < 15; ++trial) {
      auto c = testing::random_cycle(g, rng, 4);
      std::vector<Vertex> vs = c.vertices();
      std::sort(vs.begin(), vs.end());
      std::vector<Edge> es;
      for (const auto& e : c.edges()) es.emplace_back(*e.begin(), *(e.begin() + 1));
      Graph h(vs, es);
      auto r = separate(h, g);
      CHECK(r.enhanced);
      CHECK(separation_invariant_failure(r).empty());
      CHECK(euler_budget_check(r).sum_is_two);
      CHECK(r.a_raw.front() < r.b_raw.front());
    }
  }
}

TEST_CASE("direct separation needs an embedded sphere") {
  auto o = gen::octahedron();
  // Hamiltonian cycle 0 1 4 2 3 5: a 1-sphere but not induced
  Graph h({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 4}, {2, 4}, {2, 3}, {3, 5}, {0, 5}});
  CHECK_THROWS_AS(separate(h, o, SeparationMode::direct), PreconditionError);
  auto r = separate(h, o);
  CHECK(r.host.order() == 26);
  CHECK(separation_invariant_failure(r).empty());
}

TEST_CASE("separation preconditions") {
  CHECK_THROWS_AS(separate(gen::cycle(4), gen::cube()), PreconditionError);
  // 0 - 2 is no edge of the octahedron
  Graph not_sub({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK_THROWS_AS(separate(not_sub, gen::octahedron()), PreconditionError);
  // C5 runs through the octahedron without being induced
  auto r = separate(gen::cycle(5), gen::octahedron());
  CHECK(separation_invariant_failure(r).empty());
  CHECK_THROWS_AS(separate(gen::cycle(5), gen::octahedron(), SeparationMode::direct), PreconditionError);
}

TEST_CASE("crossings and touch-downs of the equator") {
  auto o = gen::octahedron();
  IntersectionSetup s(equator(), o);
  const auto& e = s.lift();
  auto v = [&](std::vector<Vertex> xs) { return e.vertex_of(Simplex(std::move(xs))); };
  // meridian 4 0 5 2 lifted through its edges
  Curve c(s.host(), {v({4}), v({0, 4}), v({0}), v({0, 5}), v({5}), v({2, 5}), v({2}), v({2, 4})}, true);
  auto n = s.count(c);
  REQUIRE(n.events.size() == 2);
  for (const auto& ev : n.events) {
    CHECK(ev.crossing);
    CHECK(ev.contribution == 1);
  }
  CHECK(n.total == 2);
  CHECK(s.parity(c) == 0);
  // down to 0 and back up, then down to 2 and back up
  Curve t(s.host(), {v({4}), v({0, 4}), v({0}), v({0, 1, 4}), v({1, 4}), v({1, 2, 4}), v({2}), v({2, 3, 4})}, true);
  auto m = s.count(t);
  REQUIRE(m.events.size() == 2);
  for (const auto& ev : m.events) {
    CHECK_FALSE(ev.crossing);
    CHECK(std::abs(ev.contribution) == 2);
  }
  CHECK(s.parity(t) == 0);
  // inside H only
  std::mt19937_64 rng(1);
  auto around = testing::hamiltonian_cycle(s.sphere(), rng);
  REQUIRE(!around.empty());
  CHECK(s.count(Curve(s.host(), around, true)).total == 0);
}

TEST_CASE("flipping an orientation negates every contribution") {
  std::mt19937_64 rng(43);
  auto ico = gen::icosahedron();
  IntersectionSetup s(unit_sphere(ico, 0), ico);
  int events = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto c = testing::random_cycle(s.host(), rng, 6);
    auto base = s.count(c, 1, s.sphere_orientation());
    auto fc = s.count(c, -1, s.sphere_orientation());
    auto fh = s.count(c, 1, s.sphere_orientation().flipped());
    auto both = s.count(c, -1, s.sphere_orientation().flipped());
    REQUIRE(fc.events.size() == base.events.size());
    REQUIRE(fh.events.size() == base.events.size());
    CHECK(fc.total == -base.total);
    CHECK(fh.total == -base.total);
    CHECK(both.total == base.total);
    for (std::size_t i = 0; i < base.events.size(); ++i)
      CHECK(fh.events[i].contribution == -base.events[i].contribution);
    // the reversed traversal meets the same runs, possibly rotated
    std::vector<int> x, y;
    for (const auto& ev : base.events) x.push_back(-ev.contribution);
    for (const auto& ev : fc.events) y.push_back(ev.contribution);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    CHECK(x == y);
    events += static_cast<int>(base.events.size());
  }
  CHECK(events > 20);
}

TEST_CASE("closed curves meet a sphere an even number of times") {
  std::mt19937_64 rng(44);
  for (auto g : {gen::octahedron(), gen::icosahedron()}) {
    auto h = g.order() == 6 ? equator() : unit_sphere(g, 0);
    IntersectionSetup s(h, g);
    for (int trial = 0; trial < 40; ++trial) {
      auto c = testing::random_cycle(s.host(), rng, 4);
      auto n = s.count(c);
      CHECK(n.total % 2 == 0);
      CHECK(s.parity(c) == 0);
      CHECK(component_parity(c, s.separation()) == 0);
      CHECK(s.side_changes(c) % 2 == 0);
    }
  }
}

TEST_CASE("open curves from one side to the other") {
  auto o = gen::octahedron();
  IntersectionSetup s(equator(), o);
  const auto& e = s.lift();
  auto v = [&](std::vector<Vertex> xs) { return e.vertex_of(Simplex(std::move(xs))); };
  Curve c(s.host(), {v({4}), v({0, 4}), v({0}), v({0, 5}), v({5})}, false);
  CHECK(s.parity(c) == 1);
  CHECK_THROWS_AS(s.count(c), PreconditionError);
  Curve stay(s.host(), {v({4}), v({0, 4}), v({0}), v({0, 1, 4}), v({1, 4})}, false);
  CHECK(s.parity(stay) == 0);
}

TEST_CASE("parity survives deformations of the curve") {
  std::mt19937_64 rng(45);
  auto o = gen::octahedron();
  IntersectionSetup s(equator(), o);
  auto triangles = cliques_of_dimension(s.host(), 2);
  int steps = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto c = testing::random_cycle(s.host(), rng, 4);
    DeformationTrace trace{hypersurface_from_curve(c), {}};
    auto h = trace.initial;
    for (int k = 0; k < 4; ++k) {
      const auto& t = triangles[rng() % triangles.size()];
      try {
        auto st = deformation_step(s.host(), h, t);
        auto next = apply_step(h, st);
        if (!next.empty() && !curve_from_hypersurface(s.host(), next)) continue;
        trace.steps.push_back(st);
        h = next;
      } catch (const PreconditionError&) {
      }
    }
    auto rep = parity_homotopy_invariance(c, trace, s);
    CHECK(rep.preserved);
    CHECK(rep.parities.size() == trace.steps.size() + 1);
    steps += static_cast<int>(trace.steps.size());
  }
  CHECK(steps > 10);
}
