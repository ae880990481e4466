#include <doctest.h>

#include <random>

#include "evako/certificates.hpp"
#include "evako/classify.hpp"
#include "evako/generators.hpp"
#include "evako/verify.hpp"
#include "cycles.hpp"

using namespace evako;

namespace {

Graph equator() { return induced_subgraph(gen::octahedron(), std::vector<Vertex>{0, 1, 2, 3}); }

// Re-seals a payload edit so that only the replay can catch it.
std::string reseal(json doc) {
  doc["input_digest"] = sha256_hex(doc["inputs"].dump());
  doc["payload_digest"] = sha256_hex(doc["payload"].dump());
  return doc.dump();
}

}  // namespace

TEST_CASE("schoenflies on the octahedron equator") {
  auto o = gen::octahedron();
  auto c = schoenflies(equator(), o);
  CHECK(c.dimension == 2);
  for (const auto* side : {&c.a, &c.b}) {
    CHECK(side->region.size() == 4);
    REQUIRE(side->measure.size() == side->trace.steps.size() + 1);
    for (std::size_t i = 1; i < side->measure.size(); ++i) CHECK(side->measure[i] < side->measure[i - 1]);
    CHECK(side->last.dimension() == 2);
    Hypersurface last{1, {}};
    for (const auto& f : side->last.facets()) last.facets.insert(f);
    CHECK(side->trace.replay() == last);
    CHECK(side->ball);
    CHECK(side->direct_checked);
    CHECK(side->direct_ball);
  }
}

TEST_CASE("schoenflies on a non embedded sphere") {
  auto o = gen::octahedron();
  Graph h({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 4}, {2, 4}, {2, 3}, {3, 5}, {0, 5}});
  auto c = schoenflies(h, o);
  CHECK_FALSE(c.a.direct_checked);
  CHECK(c.a.ball);
  CHECK(c.b.ball);
  CHECK(c.a.region.size() + c.b.region.size() == 8);
}

TEST_CASE("enclosed count") {
  std::vector<Simplex> one{Simplex({0, 1, 2})};
  Hypersurface none{1, {}};
  CHECK(enclosed_count(one, none) == 7);
  Hypersurface rim{1, {Simplex({0, 1}), Simplex({1, 2}), Simplex({0, 2})}};
  CHECK(enclosed_count(one, rim) == 1);
}

TEST_CASE("every certificate kind verifies") {
  auto o = gen::octahedron();
  std::vector<CertificateDocument> docs;
  docs.push_back(sphere_document(o, *is_sphere(o)));
  docs.push_back(ball_document(gen::wheel(5), *is_ball(gen::wheel(5))));
  docs.push_back(contraction_document(gen::complete(4), *is_contractible(gen::complete(4))));
  docs.push_back(separation_document(equator(), o, separate(equator(), o)));
  docs.push_back(separation_document(equator(), o, separate(equator(), o, SeparationMode::direct)));
  docs.push_back(schoenflies_document(equator(), o, schoenflies(equator(), o)));
  Curve c(o, {0, 1, 2, 3}, true);
  docs.push_back(trace_document(o, false, contract_curve(o, c)));
  IntersectionSetup s(equator(), o);
  std::mt19937_64 rng(3);
  auto cc = testing::random_cycle(s.host(), rng, 6);
  docs.push_back(intersection_document(equator(), o, s, cc, s.count(cc)));
  for (const auto& d : docs) {
    auto v = verify_document(serialize_certificate(d));
    CHECK_MESSAGE(v.ok, d.kind << ": " << v.message);
  }
}

TEST_CASE("tampered certificates are rejected") {
  auto o = gen::octahedron();
  Curve c(o, {0, 1, 2, 3}, true);
  auto text = serialize_certificate(trace_document(o, false, contract_curve(o, c)));
  auto doc = json::parse(text);

  SUBCASE("digest") {
    auto d = doc;
    d["payload"]["steps"][0]["carrier"][0] = 1;
    auto v = verify_document(d.dump());
    CHECK_FALSE(v.ok);
  }
  SUBCASE("carrier moved") {
    auto d = doc;
    d["payload"]["steps"][1]["carrier"] = json::array({1, 2, 5});
    auto v = verify_document(reseal(d));
    CHECK_FALSE(v.ok);
    REQUIRE(v.failing_step);
    CHECK(*v.failing_step == 1);
  }
  SUBCASE("step dropped") {
    auto d = doc;
    d["payload"]["steps"].erase(0);
    CHECK_FALSE(verify_document(reseal(d)).ok);
  }
  SUBCASE("final altered") {
    auto d = doc;
    d["payload"]["final"]["facets"] = json::array({json::array({0, 1})});
    CHECK_FALSE(verify_document(reseal(d)).ok);
  }
  SUBCASE("input graph altered") {
    auto d = doc;
    d["inputs"]["G"]["edges"].erase(0);
    CHECK_FALSE(verify_document(reseal(d)).ok);
  }
  SUBCASE("garbage") {
    CHECK_FALSE(verify_document("{").ok);
    CHECK_FALSE(verify_document("[]").ok);
  }
}

TEST_CASE("tampered sphere certificates are rejected") {
  auto o = gen::octahedron();
  auto doc = json::parse(serialize_certificate(sphere_document(o, *is_sphere(o))));
  auto d = doc;
  d["payload"]["certificate"]["dimension"] = 1;
  CHECK_FALSE(verify_document(reseal(d)).ok);
  auto cube = json::parse(serialize_certificate(sphere_document(o, *is_sphere(o))));
  cube["inputs"]["G"] = json(gen::cube());
  CHECK_FALSE(verify_document(reseal(cube)).ok);
}

TEST_CASE("tampered intersection events are rejected") {
  auto o = gen::octahedron();
  IntersectionSetup s(equator(), o);
  const auto& e = s.lift();
  auto v = [&](std::vector<Vertex> xs) { return e.vertex_of(Simplex(std::move(xs))); };
  Curve c(s.host(), {v({4}), v({0, 4}), v({0}), v({0, 5}), v({5}), v({2, 5}), v({2}), v({2, 4})}, true);
  auto doc = json::parse(serialize_certificate(intersection_document(equator(), o, s, c, s.count(c))));
  CHECK(verify_document(doc.dump()).ok);
  auto d = doc;
  d["payload"]["events"][0]["contribution"] = -1;
  d["payload"]["total"] = 0;
  CHECK_FALSE(verify_document(reseal(d)).ok);
  auto f = doc;
  f["payload"]["sphere_orientation"] = json(s.sphere_orientation().flipped());
  CHECK_FALSE(verify_document(reseal(f)).ok);
}
