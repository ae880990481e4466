#pragma once

// Independent certificate replay. Nothing here searches: each claim is
// checked step by step with graph primitives only, so a certificate stands
// on its own without the classifiers that produced it.
//
// Payloads by kind (inputs always hold "G", and "H" where a sphere is
// cut out):
//   contraction | sphere | ball   {"certificate"}
//   separation   {"a_raw", "b_raw", "dimension", "g_sphere", "h_sphere", "mode"}
//   schoenflies  {"separation", "sides": [{"ball", "last", "measure", "region", "steps"}]}
//   trace        {"final", "host", "initial", "steps"}
//   intersection {"closed", "curve", "curve_orientation", "events", "host_orientation",
//                 "separation", "sphere_orientation", "sphere_reference", "total"}

#include <optional>
#include <string>
#include <string_view>

#include "evako/classify.hpp"
#include "evako/graph.hpp"

namespace evako {

struct Verdict {
  bool ok = true;
  std::string message;
  /// Index of the first rejected trace step, when a step is at fault.
  std::optional<std::size_t> failing_step;
  explicit operator bool() const { return ok; }
};

Verdict check_contraction(const Graph& g, const ContractionCertificate& c);
Verdict check_sphere(const Graph& g, const SphereCertificate& c);
Verdict check_ball(const Graph& g, const BallCertificate& c);

/// Replays a serialized certificate document, then checks both digests.
Verdict verify_document(std::string_view text);

}  // namespace evako
