#pragma once

// Graph documents, certificate documents and their JSON forms.
//
// A graph document is {"edges": [[u, v], ...], "map": [...], "name": "...",
// "vertices": [...]} with sorted vertices, sorted edges (u < v) and no
// duplicates; "map" is optional. Keys are written sorted and without
// whitespace, so serialization is byte-stable.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>  // vendored nlohmann/json

#include "evako/classify.hpp"
#include "evako/graph.hpp"
#include "evako/homotopy.hpp"

namespace evako {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "1.0.0";

struct GraphDocument {
  std::string name;
  Graph graph;
  /// One entry per vertex when present (simplex or simplex pair).
  std::optional<json> map;
};

/// Throws InputError naming the line (syntax) or the field (validation).
GraphDocument parse_graph(std::string_view text);
std::string serialize_graph(const GraphDocument& doc);
std::string serialize_graph(const Graph& g, const std::string& name = {});

/// Lines "u v" (an edge) or "u" (an isolated vertex); '#' starts a comment.
Graph parse_edge_list(std::string_view text);

std::string sha256_hex(std::string_view bytes);

// JSON conversions, found by nlohmann through ADL.
void to_json(json& j, const Simplex& s);
void from_json(const json& j, Simplex& s);
void to_json(json& j, const Graph& g);
void from_json(const json& j, Graph& g);
void to_json(json& j, const ContractionCertificate& c);
void from_json(const json& j, ContractionCertificate& c);
void to_json(json& j, const SphereCertificate& c);
void from_json(const json& j, SphereCertificate& c);
void to_json(json& j, const BallCertificate& c);
void from_json(const json& j, BallCertificate& c);
void to_json(json& j, const DeformationStep& s);
void from_json(const json& j, DeformationStep& s);
void to_json(json& j, const Hypersurface& h);
void from_json(const json& j, Hypersurface& h);
void to_json(json& j, const Orientation& o);
void from_json(const json& j, Orientation& o);

/// {"input_digest", "inputs", "kind", "payload", "payload_digest",
/// "version"}. The digests are SHA-256 of the compact dumps of `inputs`
/// and `payload`.
struct CertificateDocument {
  std::string kind;
  json inputs;
  json payload;
};

std::string serialize_certificate(const CertificateDocument& doc);
/// Parses the envelope only; digests are checked by the verifier.
json parse_certificate_envelope(std::string_view text);

}  // namespace evako
