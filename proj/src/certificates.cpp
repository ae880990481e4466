#include "evako/certificates.hpp"

namespace evako {

namespace {

json inputs_of(const Graph& g) { return json{{"G", g}}; }

json inputs_of(const Graph& g, const Graph& h) { return json{{"G", g}, {"H", h}}; }

json separation_payload(const Graph& h, const Graph& g, const SeparationResult& r) {
  auto gs = is_sphere(g);
  auto hs = is_sphere(h);
  if (!gs || !hs) throw PreconditionError("separation certificate needs sphere inputs");
  return json{{"a_raw", r.a_raw},
              {"b_raw", r.b_raw},
              {"dimension", r.dimension},
              {"g_sphere", *gs},
              {"h_sphere", *hs},
              {"mode", r.enhanced ? "enhanced" : "direct"}};
}

json side_json(const SchoenfliesSide& s) {
  return json{{"ball", s.ball ? json(*s.ball) : json(nullptr)},
              {"last", s.last},
              {"measure", s.measure},
              {"region", s.region},
              {"steps", s.trace.steps}};
}

}  // namespace

CertificateDocument contraction_document(const Graph& g, const ContractionCertificate& c) {
  return {"contraction", inputs_of(g), json{{"certificate", c}}};
}

CertificateDocument sphere_document(const Graph& g, const SphereCertificate& c) {
  return {"sphere", inputs_of(g), json{{"certificate", c}}};
}

CertificateDocument ball_document(const Graph& g, const BallCertificate& c) {
  return {"ball", inputs_of(g), json{{"certificate", c}}};
}

CertificateDocument separation_document(const Graph& h, const Graph& g, const SeparationResult& r) {
  return {"separation", inputs_of(g, h), separation_payload(h, g, r)};
}

CertificateDocument schoenflies_document(const Graph& h, const Graph& g, const SchoenfliesCertificate& c) {
  json payload{{"separation", separation_payload(h, g, c.separation)},
               {"sides", json::array({side_json(c.a), side_json(c.b)})}};
  return {"schoenflies", inputs_of(g, h), std::move(payload)};
}

CertificateDocument trace_document(const Graph& g, bool enhanced_host, const DeformationTrace& t) {
  json payload{{"final", t.replay()},
               {"host", enhanced_host ? "enhanced" : "base"},
               {"initial", t.initial},
               {"steps", t.steps}};
  return {"trace", inputs_of(g), std::move(payload)};
}

json event_json(const IntersectionEvent& e) {
  return json{{"after", e.after},
              {"before", e.before},
              {"contribution", e.contribution},
              {"crossing", e.crossing},
              {"first", e.first},
              {"incoming", e.incoming},
              {"last", e.last},
              {"outgoing", e.outgoing}};
}

CertificateDocument intersection_document(const Graph& h, const Graph& g, const IntersectionSetup& s,
                                          const Curve& c, const IntersectionCount& count) {
  json events = json::array();
  for (const auto& e : count.events) events.push_back(event_json(e));
  json payload{{"closed", c.closed()},
               {"curve", c.vertices()},
               {"curve_orientation", count.curve_orientation},
               {"events", std::move(events)},
               {"host_orientation", s.host_orientation()},
               {"separation", separation_payload(h, g, s.separation())},
               {"sphere_orientation", count.sphere_orientation},
               {"sphere_reference", s.sphere_orientation()},
               {"total", count.total}};
  return {"intersection", inputs_of(g, h), std::move(payload)};
}

}  // namespace evako
