#include <doctest.h>

#include <random>

#include "evako/classify.hpp"
#include "evako/enhance.hpp"
#include "evako/generators.hpp"
#include "evako/homotopy.hpp"
#include "evako/verify.hpp"
#include "cycles.hpp"

using namespace evako;

TEST_CASE("curves") {
  auto o = gen::octahedron();
  Curve c(o, {0, 1, 2, 3, 0}, true);
  CHECK(c.length() == 4);
  CHECK(c.simple());
  CHECK(c.at(-1) == 3);
  CHECK(c.at(5) == 1);
  auto r = c.reversed();
  CHECK(r.vertices() == std::vector<Vertex>{0, 3, 2, 1});
  CHECK(c.edges().size() == 4);
  Curve open(o, {4, 0, 5}, false);
  CHECK(open.edges().size() == 2);
  CHECK(open.reversed().vertices() == std::vector<Vertex>{5, 0, 4});
  CHECK_THROWS_AS(Curve(o, {0, 2}, false), InputError);
  CHECK_FALSE(Curve(o, {0, 1, 0, 3}, true).simple());
}

TEST_CASE("homotopy steps keep the euler characteristic") {
  auto g = gen::wheel(6);
  auto r = reduce_step(g, 0);
  CHECK(r.order() == 6);
  CHECK(euler_characteristic(r) == euler_characteristic(g));
  CHECK_THROWS_AS(reduce_step(g, 6), PreconditionError);  // the hub sees C6
  std::vector<Vertex> w{1, 2, 3};
  auto e = extend_step(g, w, 20);
  CHECK(e.order() == 8);
  CHECK(e.degree(20) == 3);
  CHECK(euler_characteristic(e) == euler_characteristic(g));
  std::vector<Vertex> bad{1, 3};
  CHECK_THROWS_AS(extend_step(g, bad, 21), PreconditionError);
}

TEST_CASE("deformation steps") {
  auto o = gen::octahedron();
  Hypersurface eq{1, {Simplex({0, 1}), Simplex({1, 2}), Simplex({2, 3}), Simplex({0, 3})}};
  auto st = deformation_step(o, eq, Simplex({0, 1, 4}));
  CHECK(st.removed == std::vector<Simplex>{Simplex({0, 1})});
  CHECK(st.added == std::vector<Simplex>{Simplex({0, 4}), Simplex({1, 4})});
  auto next = apply_step(eq, st);
  CHECK(next.facets.size() == 5);
  CHECK_THROWS_AS(deformation_step(o, eq, Simplex({0, 1, 2})), PreconditionError);  // not a clique
  CHECK_THROWS_AS(deformation_step(o, next, Simplex({0, 1, 5})), PreconditionError);  // nothing to remove
  CHECK_THROWS_AS(deform_hypersurface(o, eq, Simplex({0, 1, 4}), {}), PreconditionError);
}

TEST_CASE("a deformation step undone by the same carrier") {
  std::mt19937_64 rng(4);
  auto g1 = enhanced(gen::octahedron()).enhanced();
  auto triangles = cliques_of_dimension(g1, 2);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto c = testing::random_cycle(g1, rng, 3);
    auto h = hypersurface_from_curve(c);
    const auto& t = triangles[rng() % triangles.size()];
    DeformationStep st;
    try {
      st = deformation_step(g1, h, t);
    } catch (const PreconditionError&) {
      continue;
    }
    auto once = apply_step(h, st);
    auto back = deformation_step(g1, once, t);
    CHECK(back.removed == st.added);
    CHECK(back.added == st.removed);
    CHECK(apply_step(once, back) == h);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("curves from facet sets") {
  auto o = gen::octahedron();
  Curve c(o, {0, 1, 5, 3}, true);
  auto h = hypersurface_from_curve(c);
  auto back = curve_from_hypersurface(o, h);
  REQUIRE(back);
  CHECK(back->closed());
  CHECK(back->length() == 4);
  Curve path(o, {4, 0, 1, 5}, false);
  auto p = curve_from_hypersurface(o, hypersurface_from_curve(path), 5);
  REQUIRE(p);
  CHECK(p->vertices() == std::vector<Vertex>{5, 1, 0, 4});
  Hypersurface fork{1, {Simplex({0, 1}), Simplex({0, 3}), Simplex({0, 4})}};
  CHECK_FALSE(curve_from_hypersurface(o, fork));
}

TEST_CASE("closed curves contract in spheres") {
  std::mt19937_64 rng(12);
  std::vector<Graph> hosts{gen::octahedron(), gen::icosahedron(), enhanced(gen::octahedron()).enhanced()};
  for (const auto& g : hosts) {
    for (int trial = 0; trial < 8; ++trial) {
      auto c = testing::random_cycle(g, rng, 3);
      auto trace = contract_curve(g, c);
      CHECK(trace.initial == hypersurface_from_curve(c));
      CHECK(trace.replay().empty());
      // every step is the one the host dictates
      auto h = trace.initial;
      for (const auto& st : trace.steps) {
        auto again = deformation_step(g, h, st.carrier);
        CHECK(again.removed == st.removed);
        CHECK(again.added == st.added);
        h = apply_step(h, st);
        if (!h.empty()) CHECK(curve_from_hypersurface(g, h));
      }
    }
  }
  CHECK_THROWS_AS(contract_curve(gen::cycle(6), Curve(gen::cycle(6), {0, 1, 2, 3, 4, 5}, true)), PreconditionError);
}

TEST_CASE("contraction budget") {
  auto g = gen::icosahedron();
  std::mt19937_64 rng(1);
  auto c = testing::random_cycle(g, rng, 9);
  CHECK_THROWS_AS(contract_curve(g, c, 2), ResourceLimitError);
}
