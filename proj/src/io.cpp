#include "evako/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <sstream>

namespace evako {

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // byte is 1-based and points just past the failure
    std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    throw InputError(std::string(what) + ": syntax error on line " + std::to_string(line_of(text, byte)));
  }
}

std::vector<Vertex> vertex_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw InputError("field '" + field + "' must be an array");
  std::vector<Vertex> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& v = j[i];
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 0xffffffffLL)
      throw InputError("field '" + field + "[" + std::to_string(i) + "]' must be a non-negative integer");
    out.push_back(static_cast<Vertex>(v.get<long long>()));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph documents

GraphDocument parse_graph(std::string_view text) {
  json j = parse_json(text, "graph document");
  if (!j.is_object()) throw InputError("graph document must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "name" && it.key() != "vertices" && it.key() != "edges" && it.key() != "map")
      throw InputError("unknown field '" + it.key() + "'");
  if (!j.contains("vertices")) throw InputError("missing field 'vertices'");
  if (!j.contains("edges")) throw InputError("missing field 'edges'");

  GraphDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("field 'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  auto vs = vertex_list(j["vertices"], "vertices");
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (vs[i - 1] >= vs[i]) throw InputError("field 'vertices' must be strictly increasing");

  const json& je = j["edges"];
  if (!je.is_array()) throw InputError("field 'edges' must be an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < je.size(); ++i) {
    const std::string field = "edges[" + std::to_string(i) + "]";
    auto pair = vertex_list(je[i], field);
    if (pair.size() != 2) throw InputError("field '" + field + "' must be a pair");
    if (pair[0] >= pair[1]) throw InputError("field '" + field + "' must satisfy u < v");
    for (Vertex v : pair)
      if (!std::binary_search(vs.begin(), vs.end(), v))
        throw InputError("field '" + field + "' names undeclared vertex " + std::to_string(v));
    Edge e{pair[0], pair[1]};
    if (!edges.empty() && !(edges.back() < e))
      throw InputError("field '" + field + "' is out of order or duplicated");
    edges.push_back(e);
  }
  if (j.contains("map")) {
    if (!j["map"].is_array() || j["map"].size() != vs.size())
      throw InputError("field 'map' must be an array with one entry per vertex");
    doc.map = j["map"];
  }
  doc.graph = Graph(std::move(vs), edges);
  return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
  json j = doc.graph;
  j["name"] = doc.name;
  if (doc.map) j["map"] = *doc.map;
  return j.dump() + "\n";
}

std::string serialize_graph(const Graph& g, const std::string& name) { return serialize_graph({name, g, {}}); }

Graph parse_edge_list(std::string_view text) {
  std::vector<Vertex> vs;
  std::vector<Edge> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> xs;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        long long x = std::stoll(tok, &used);
        if (used != tok.size() || x < 0 || x > 0xffffffffLL) throw std::invalid_argument(tok);
        xs.push_back(x);
      } catch (const std::exception&) {
        throw InputError("edge list: bad vertex '" + tok + "' on line " + std::to_string(number));
      }
    }
    if (xs.empty()) continue;
    if (xs.size() > 2) throw InputError("edge list: too many fields on line " + std::to_string(number));
    for (auto x : xs) vs.push_back(static_cast<Vertex>(x));
    if (xs.size() == 2) {
      if (xs[0] == xs[1]) throw InputError("edge list: self loop on line " + std::to_string(number));
      Vertex u = static_cast<Vertex>(xs[0]), v = static_cast<Vertex>(xs[1]);
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  return Graph(std::move(vs), edges);
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON forms

void to_json(json& j, const Simplex& s) { j = s.tuple(); }

void from_json(const json& j, Simplex& s) { s = Simplex(vertex_list(j, "simplex")); }

void to_json(json& j, const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j = json{{"edges", std::move(edges)}, {"vertices", g.vertex_set()}};
}

void from_json(const json& j, Graph& g) { g = parse_graph(j.dump()).graph; }

void to_json(json& j, const ContractionCertificate& c) {
  j = json{{"last", c.last}, {"links", c.links}, {"removal_order", c.removal_order}};
}

void from_json(const json& j, ContractionCertificate& c) {
  c.removal_order = vertex_list(j.at("removal_order"), "removal_order");
  c.links = j.at("links").get<std::vector<ContractionCertificate>>();
  c.last = j.at("last").get<Vertex>();
}

void to_json(json& j, const SphereCertificate& c) {
  j = json{{"dimension", c.dimension}};
  if (c.dimension < 0) return;
  j["vertices"] = c.vertices;
  j["links"] = c.links;
  j["puncture"] = c.puncture;
  j["punctured"] = c.punctured;
}

void from_json(const json& j, SphereCertificate& c) {
  c = {};
  c.dimension = j.at("dimension").get<int>();
  if (c.dimension < 0) return;
  c.vertices = vertex_list(j.at("vertices"), "vertices");
  c.links = j.at("links").get<std::vector<SphereCertificate>>();
  c.puncture = j.at("puncture").get<Vertex>();
  c.punctured = j.at("punctured").get<ContractionCertificate>();
}

void to_json(json& j, const BallCertificate& c) {
  j = json{{"boundary", c.boundary},
           {"boundary_links", c.boundary_links},
           {"boundary_sphere", c.boundary_sphere},
           {"contraction", c.contraction},
           {"dimension", c.dimension},
           {"interior", c.interior},
           {"interior_links", c.interior_links}};
}

void from_json(const json& j, BallCertificate& c) {
  c.dimension = j.at("dimension").get<int>();
  c.interior = vertex_list(j.at("interior"), "interior");
  c.boundary = vertex_list(j.at("boundary"), "boundary");
  c.interior_links = j.at("interior_links").get<std::vector<SphereCertificate>>();
  c.boundary_links = j.at("boundary_links").get<std::vector<BallCertificate>>();
  c.boundary_sphere = j.at("boundary_sphere").get<SphereCertificate>();
  c.contraction = j.at("contraction").get<ContractionCertificate>();
}

void to_json(json& j, const DeformationStep& s) {
  j = json{{"added", s.added}, {"carrier", s.carrier}, {"removed", s.removed}};
}

void from_json(const json& j, DeformationStep& s) {
  s.carrier = j.at("carrier").get<Simplex>();
  s.removed = j.at("removed").get<std::vector<Simplex>>();
  s.added = j.at("added").get<std::vector<Simplex>>();
}

void to_json(json& j, const Hypersurface& h) {
  j = json{{"facet_dim", h.facet_dim}, {"facets", std::vector<Simplex>(h.facets.begin(), h.facets.end())}};
}

void from_json(const json& j, Hypersurface& h) {
  h.facet_dim = j.at("facet_dim").get<int>();
  h.facets.clear();
  for (auto& f : j.at("facets").get<std::vector<Simplex>>())
    if (!h.facets.insert(f).second) throw InputError("hypersurface lists a facet twice");
}

void to_json(json& j, const Orientation& o) {
  json signs = json::array();
  for (const auto& [s, v] : o.signs) signs.push_back({s, v});
  j = json{{"dimension", o.dimension}, {"signs", std::move(signs)}};
}

void from_json(const json& j, Orientation& o) {
  o.dimension = j.at("dimension").get<int>();
  o.signs.clear();
  for (const auto& entry : j.at("signs")) {
    if (!entry.is_array() || entry.size() != 2) throw InputError("orientation entry must be [simplex, sign]");
    int v = entry[1].get<int>();
    if (v != 1 && v != -1) throw InputError("orientation sign must be +1 or -1");
    if (!o.signs.emplace(entry[0].get<Simplex>(), v).second) throw InputError("orientation lists a simplex twice");
  }
}

// ---------------------------------------------------------------------------
// Certificate documents

std::string serialize_certificate(const CertificateDocument& doc) {
  json j{{"input_digest", sha256_hex(doc.inputs.dump())},
         {"inputs", doc.inputs},
         {"kind", doc.kind},
         {"payload", doc.payload},
         {"payload_digest", sha256_hex(doc.payload.dump())},
         {"version", kToolVersion}};
  return j.dump() + "\n";
}

json parse_certificate_envelope(std::string_view text) {
  json j = parse_json(text, "certificate");
  if (!j.is_object()) throw InputError("certificate must be an object");
  for (const char* key : {"input_digest", "inputs", "kind", "payload", "payload_digest", "version"})
    if (!j.contains(key)) throw InputError(std::string("certificate is missing field '") + key + "'");
  if (!j["kind"].is_string()) throw InputError("certificate field 'kind' must be a string");
  return j;
}

}  // namespace evako
