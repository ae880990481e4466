#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "evako/canonical.hpp"
#include "evako/classify.hpp"
#include "evako/enhance.hpp"
#include "evako/generators.hpp"
#include "oracles.hpp"

using namespace evako;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> labels(g.order());
  std::iota(labels.begin(), labels.end(), 100);
  std::shuffle(labels.begin(), labels.end(), rng);
  return relabel(g, labels);
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  auto bv = b.vertices();
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(bv[p[a.index_of(u)]], bv[p[a.index_of(v)]])) { ok = false; break; }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(gen::complete(5).size() == 10);
  CHECK(gen::cycle(6).size() == 6);
  CHECK(gen::line(4).size() == 3);
  CHECK(gen::edgeless(3).size() == 0);
  auto w = gen::wheel(5);
  CHECK(w.order() == 6);
  CHECK(w.degree(5) == 5);
  CHECK(gen::octahedron().size() == 12);
  auto ico = gen::icosahedron();
  CHECK(ico.order() == 12);
  CHECK(ico.size() == 30);
  for (Vertex v : ico.vertices()) CHECK(isomorphic(unit_sphere(ico, v), gen::cycle(5)));
  CHECK(gen::cube().size() == 12);
  CHECK(gen::house().size() == 6);
  for (int d = 0; d <= 4; ++d) CHECK(gen::cross_polytope(d).order() == static_cast<std::size_t>(2 * d + 2));
  CHECK(isomorphic(gen::suspension(gen::cycle(4)), gen::octahedron()));
  CHECK(isomorphic(gen::cross_polytope(2), gen::octahedron()));
  CHECK(gen::join(gen::cycle(5), gen::edgeless(2)).size() == 15);
  CHECK_THROWS_AS(gen::moebius_band(8), InputError);
  CHECK_THROWS_AS(gen::wheel(3), InputError);
  CHECK(gen::random_graph(9, 0.5, 4) == gen::random_graph(9, 0.5, 4));
  CHECK(gen::random_graph(7, 0.0, 1).size() == 0);
  CHECK(gen::random_graph(7, 1.0, 1).size() == 21);
  CHECK(gen::by_name("cycle", {7}) == gen::cycle(7));
  CHECK_THROWS_AS(gen::by_name("nope", {}), InputError);
}

TEST_CASE("canonical key is a complete invariant on small graphs") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto a = gen::random_graph(n, 0.5, rng());
    auto b = gen::random_graph(n, 0.5, rng());
    CHECK(canonical_key(a) == canonical_key(shuffled(a, rng)));
    CHECK((canonical_key(a) == canonical_key(b)) == brute_isomorphic(a, b));
    CHECK(canonical_form(a).exact);
  }
}

TEST_CASE("canonical key on larger graphs") {
  std::mt19937_64 rng(9);
  auto ico = gen::icosahedron();
  CHECK(canonical_key(ico) == canonical_key(shuffled(ico, rng)));
  auto big = enhanced(gen::octahedron()).enhanced();
  CHECK(big.order() == 26);
  CHECK(isomorphic(big, shuffled(big, rng)));
  CHECK_FALSE(isomorphic(gen::cycle(14), gen::disjoint_union(gen::cycle(7), gen::cycle(7))));
  CHECK_FALSE(isomorphic(gen::cube(), gen::cycle(8)));
}

TEST_CASE("enhanced graphs of small graphs") {
  CHECK(isomorphic(enhanced(gen::cycle(4)).enhanced(), gen::cycle(8)));
  CHECK(isomorphic(enhanced(gen::complete(3)).enhanced(), gen::wheel(6)));
  auto eo = enhanced(gen::octahedron());
  CHECK(eo.enhanced().order() == 26);
  CHECK(is_sphere(eo.enhanced()));
  CHECK(is_sphere(eo.enhanced())->dimension == 2);
  CHECK(enhanced(gen::icosahedron()).enhanced().order() == 62);
  CHECK(enhanced(Graph{}).enhanced().empty());
}

TEST_CASE("enhanced vertices follow clique order") {
  auto g = gen::house();
  auto e = enhanced(g);
  auto cs = cliques(g);
  REQUIRE(e.simplices() == cs);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    CHECK(e.vertex_of(cs[i]) == i);
    CHECK(e.simplex_of(static_cast<Vertex>(i)) == cs[i]);
  }
  // adjacency is proper containment
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      bool contain = cs[i].is_face_of(cs[j]) || cs[j].is_face_of(cs[i]);
      CHECK(e.enhanced().adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == contain);
    }
}

TEST_CASE("enhancement keeps the euler characteristic") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = gen::random_graph(3 + static_cast<int>(rng() % 5), 0.5, rng());
    CHECK(euler_characteristic(enhanced(g).enhanced()) == euler_characteristic(g));
  }
  // and sphericity of spheres
  for (auto g : {gen::cycle(5), gen::octahedron(), gen::cross_polytope(3)}) {
    auto s = is_sphere(g);
    auto s1 = is_sphere(enhanced(g).enhanced());
    REQUIRE(s1);
    CHECK(s1->dimension == s->dimension);
  }
}

TEST_CASE("lifted subgraphs") {
  auto g = gen::octahedron();
  auto e = enhanced(g);
  Graph eq = induced_subgraph(g, std::vector<Vertex>{0, 1, 2, 3});
  auto h1 = lift_subgraph(e, eq);
  CHECK(h1.order() == 8);
  CHECK(isomorphic(h1, gen::cycle(8)));
  CHECK(lift_vertices(e, eq).size() == 8);
}

TEST_CASE("graph polynomial and product") {
  auto p = graph_polynomial(gen::complete(2));
  CHECK(p.monomials.size() == 3);
  CHECK(p.str() == "x0 + x1 + x0*x1");
  CHECK(graph_polynomial(Graph{}).is_zero());
  auto prod = graph_product(gen::line(3), gen::line(3));
  CHECK(prod.graph.order() == 25);
  CHECK(prod.map.size() == 25);
  // K1 x G is the enhanced graph of G
  for (auto g : {gen::cycle(4), gen::house()}) {
    CHECK(isomorphic(graph_product(gen::complete(1), g).graph, enhanced(g).enhanced()));
  }
  CHECK(euler_characteristic(prod.graph) == 1);
}

TEST_CASE("face poset graph") {
  std::vector<Simplex> faces;
  auto g = face_poset_graph({Simplex({0, 1, 2})}, &faces);
  CHECK(faces.size() == 7);
  CHECK(isomorphic(g, gen::wheel(6)));
}
