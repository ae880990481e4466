#include "evako/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "evako/certificates.hpp"
#include "evako/classify.hpp"
#include "evako/embed.hpp"
#include "evako/enhance.hpp"
#include "evako/generators.hpp"
#include "evako/homotopy.hpp"
#include "evako/io.hpp"
#include "evako/separation.hpp"
#include "evako/verify.hpp"

namespace evako::cli {

namespace {

struct Options {
  bool human = false;
  bool edge_list = false;
  std::string certificate;
  std::optional<std::uint64_t> budget;
  std::optional<int> max_dim;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  Options opt;
  bool stdin_used = false;

  std::string read(const std::string& path) {
    if (path.empty() || path == "-") {
      if (stdin_used) throw InputError("standard input can only be read once");
      stdin_used = true;
      return {std::istreambuf_iterator<char>(in), {}};
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(f), {}};
  }

  GraphDocument load(const std::string& path) {
    std::string text = read(path);
    if (opt.edge_list) return {{}, parse_edge_list(text), {}};
    return parse_graph(text);
  }

  void emit(const json& j, const std::string& human) {
    if (opt.human) out << human << "\n";
    else out << j.dump() << "\n";
  }

  void certify(const CertificateDocument& doc) {
    if (opt.certificate.empty()) return;
    std::ofstream f(opt.certificate, std::ios::binary);
    if (!f) throw InputError("cannot write '" + opt.certificate + "'");
    f << serialize_certificate(doc);
  }

  void no_certificate(const char* command) {
    if (!opt.certificate.empty()) throw InputError(std::string("--certificate is not supported by ") + command);
  }
};

std::vector<Vertex> parse_vertices(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<Vertex> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || v > 0xffffffffLL) throw InputError("bad vertex '" + tok + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::optional<std::uint64_t> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end) throw InputError(std::string(name) + " must be a non-negative integer");
  return v;
}

std::string join_vertices(std::span<const Vertex> xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_gen(Context& cx, const std::string& name, const std::vector<std::string>& params,
            std::optional<std::uint64_t> seed) {
  cx.no_certificate("gen");
  Graph g;
  std::string title = name;
  if (name == "random_graph") {
    if (params.size() != 2) throw InputError("random_graph needs n and p");
    int n = 0;
    double p = 0;
    try {
      n = std::stoi(params[0]);
      p = std::stod(params[1]);
    } catch (const std::exception&) {
      throw InputError("random_graph needs an integer n and a real p");
    }
    std::uint64_t s = seed ? *seed : env_number("EVAKO_SEED").value_or(0);
    g = gen::random_graph(n, p, s);
    title += "(" + params[0] + "," + params[1] + ";seed=" + std::to_string(s) + ")";
  } else {
    std::vector<long long> ints;
    for (const auto& p : params) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(p, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != p.size()) throw InputError("generator parameter '" + p + "' is not an integer");
      ints.push_back(v);
    }
    g = gen::by_name(name, ints);
    if (!params.empty()) {
      title += "(";
      for (std::size_t i = 0; i < params.size(); ++i) title += (i ? "," : "") + params[i];
      title += ")";
    }
  }
  GraphDocument doc{title, g, {}};
  if (cx.opt.human) cx.out << title << ": " << g.order() << " vertices, " << g.size() << " edges\n";
  else cx.out << serialize_graph(doc);
  return kExitOk;
}

int cmd_classify(Context& cx, const std::string& path) {
  const Graph g = cx.load(path).graph;
  if (auto s = is_sphere(g)) {
    cx.certify(sphere_document(g, *s));
    cx.emit({{"dimension", s->dimension}, {"verdict", "sphere"}}, "sphere d=" + std::to_string(s->dimension));
    return kExitOk;
  } else if (!g.empty()) {
    if (auto b = is_ball(g)) {
      cx.certify(ball_document(g, *b));
      cx.emit({{"dimension", b->dimension}, {"verdict", "ball"}}, "ball d=" + std::to_string(b->dimension));
      return kExitOk;
    }
    if (auto c = is_contractible(g)) {
      cx.certify(contraction_document(g, *c));
      cx.emit({{"verdict", "contractible"}}, "contractible");
      return kExitOk;
    }
    cx.emit({{"reason", s.refutation.reason}, {"verdict", "neither"}}, "neither");
    return kExitNegative;
  }
  return kExitNegative;  // unreachable: the empty graph is a sphere
}

int cmd_dim(Context& cx, const std::string& path) {
  cx.no_certificate("dim");
  Rational d = inductive_dimension(cx.load(path).graph);
  cx.emit({{"dimension", d.str()}, {"value", d.to_double()}}, "dim=" + d.str());
  return kExitOk;
}

int cmd_euler(Context& cx, const std::string& path) {
  cx.no_certificate("euler");
  auto counts = clique_counts(cx.load(path).graph);
  if (cx.opt.max_dim && *cx.opt.max_dim + 1 < static_cast<int>(counts.size()))
    counts.resize(static_cast<std::size_t>(std::max(0, *cx.opt.max_dim + 1)));
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(counts[k]);
  cx.emit({{"clique_counts", counts}, {"euler_characteristic", chi}}, "chi=" + std::to_string(chi));
  return kExitOk;
}

int cmd_enhance(Context& cx, const std::string& path) {
  cx.no_certificate("enhance");
  auto doc = cx.load(path);
  std::vector<Simplex> faces;
  Graph g1 = face_poset_graph(cliques(doc.graph, cx.opt.max_dim), &faces);
  GraphDocument out{doc.name.empty() ? "enhanced" : "enhanced(" + doc.name + ")", g1, json(faces)};
  if (cx.opt.human) cx.out << out.name << ": " << g1.order() << " vertices, " << g1.size() << " edges\n";
  else cx.out << serialize_graph(out);
  return kExitOk;
}

int cmd_product(Context& cx, const std::string& a, const std::string& b) {
  cx.no_certificate("product");
  auto h = cx.load(a);
  auto k = cx.load(b);
  auto p = graph_product(h.graph, k.graph);
  json map = json::array();
  for (const auto& [s, t] : p.map) map.push_back({s, t});
  GraphDocument out{"product", p.graph, std::move(map)};
  if (cx.opt.human) cx.out << "product: " << p.graph.order() << " vertices, " << p.graph.size() << " edges\n";
  else cx.out << serialize_graph(out);
  return kExitOk;
}

int cmd_embed(Context& cx, const std::string& hp, const std::string& gp) {
  cx.no_certificate("embed-check");
  const Graph h = cx.load(hp).graph;
  const Graph g = cx.load(gp).graph;
  auto r = is_embedded(h, g);
  json j{{"checked", r.checked}, {"embedded", r.embedded}};
  std::string human = "embedded";
  if (!r.embedded) {
    j["witness"] = *r.witness;
    j["intersection"] = r.intersection;
    human = "not embedded: intersection at " + join_vertices(r.witness->vertices()) + " is not a sphere";
  }
  cx.emit(j, human);
  return r.embedded ? kExitOk : kExitNegative;
}

int cmd_separate(Context& cx, const std::string& hp, const std::string& gp, bool direct) {
  const Graph h = cx.load(hp).graph;
  const Graph g = cx.load(gp).graph;
  auto r = separate(h, g, direct ? SeparationMode::direct : SeparationMode::enhanced);
  if (auto why = separation_invariant_failure(r); !why.empty()) throw TheoremViolation(why, {r.a_raw, r.b_raw});
  cx.certify(separation_document(h, g, r));
  json j{{"a", r.a},
         {"a_raw", r.a_raw},
         {"b", r.b},
         {"b_raw", r.b_raw},
         {"dimension", r.dimension},
         {"mode", r.enhanced ? "enhanced" : "direct"},
         {"sphere", r.sphere.vertex_set()}};
  cx.emit(j, std::string("separated (") + (r.enhanced ? "enhanced" : "direct") + "): " +
                 std::to_string(r.a_raw.size()) + " and " + std::to_string(r.b_raw.size()) + " vertices off the sphere");
  return kExitOk;
}

int cmd_schoenflies(Context& cx, const std::string& hp, const std::string& gp) {
  const Graph h = cx.load(hp).graph;
  const Graph g = cx.load(gp).graph;
  auto c = schoenflies(h, g, true);
  for (const auto* side : {&c.a, &c.b}) {
    if (!side->ball) throw TheoremViolation("a side certified by its trace is not recognized as a ball");
    if (side->direct_checked && !side->direct_ball)
      throw TheoremViolation("a direct side is not recognized as a ball");
  }
  cx.certify(schoenflies_document(h, g, c));
  json sides = json::array();
  for (const auto* side : {&c.a, &c.b}) {
    sides.push_back({{"ball", side->ball.has_value()},
                     {"direct_ball", side->direct_checked ? json(side->direct_ball.has_value()) : json(nullptr)},
                     {"last", side->last},
                     {"measure", side->measure},
                     {"steps", side->trace.steps.size()}});
  }
  cx.emit({{"dimension", c.dimension}, {"sides", sides}},
          "schoenflies d=" + std::to_string(c.dimension) + ": both sides are balls (" +
              std::to_string(c.a.trace.steps.size()) + " and " + std::to_string(c.b.trace.steps.size()) + " steps)");
  return kExitOk;
}

int cmd_intersect(Context& cx, const std::string& hp, const std::string& gp, const std::string& curve, bool open,
                  bool base_curve) {
  const Graph h = cx.load(hp).graph;
  const Graph g = cx.load(gp).graph;
  IntersectionSetup setup(h, g);
  auto xs = parse_vertices(curve);
  if (base_curve) {
    std::vector<Vertex> lifted;
    const std::size_t links = open ? xs.size() - 1 : xs.size();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      lifted.push_back(setup.lift().vertex_of(Simplex{xs[i]}));
      if (i < links) {
        Vertex u = xs[i], v = xs[(i + 1) % xs.size()];
        if (!g.adjacent(u, v)) throw InputError("curve step " + std::to_string(i) + " is not an edge of G");
        lifted.push_back(setup.lift().vertex_of(Simplex{std::min(u, v), std::max(u, v)}));
      }
    }
    xs = std::move(lifted);
  }
  Curve c(setup.host(), xs, !open);
  const int parity = setup.parity(c);
  if (open) {
    cx.no_certificate("intersect --open");
    cx.emit({{"parity", parity}}, "parity=" + std::to_string(parity));
    return kExitOk;
  }
  auto count = setup.count(c);
  cx.certify(intersection_document(h, g, setup, c, count));
  json events = json::array();
  for (const auto& e : count.events) events.push_back(event_json(e));
  cx.emit({{"events", events}, {"parity", parity}, {"total", count.total}},
          "total=" + std::to_string(count.total) + " parity=" + std::to_string(parity) + " events=" +
              std::to_string(count.events.size()));
  return kExitOk;
}

int cmd_deform(Context& cx, const std::string& gp, const std::string& facets, const std::string& carrier,
               bool lifted) {
  const Graph g = cx.load(gp).graph;
  json jf;
  try {
    jf = json::parse(facets);
  } catch (const json::exception&) {
    throw InputError("--facets must be a JSON array of simplices");
  }
  Hypersurface h;
  try {
    auto list = jf.get<std::vector<Simplex>>();
    if (list.empty()) throw InputError("--facets is empty");
    h.facet_dim = list.front().dimension();
    for (auto& f : list) {
      if (f.dimension() != h.facet_dim) throw InputError("--facets mixes dimensions");
      h.facets.insert(std::move(f));
    }
  } catch (const json::exception&) {
    throw InputError("--facets must be a JSON array of simplices");
  }
  std::optional<EnhancedGraph> e;
  if (lifted) e.emplace(g);
  const Graph& host = lifted ? e->enhanced() : g;
  DeformationTrace trace;
  trace.initial = h;
  trace.steps.push_back(deformation_step(host, h, Simplex(parse_vertices(carrier))));
  Hypersurface result = trace.replay();
  cx.certify(trace_document(g, lifted, trace));
  json j = result;
  j["step"] = trace.steps.front();
  cx.emit(j, std::to_string(trace.steps.front().removed.size()) + " facets replaced by " +
                 std::to_string(trace.steps.front().added.size()));
  return kExitOk;
}

int cmd_contract(Context& cx, const std::string& gp, const std::string& curve, std::uint64_t states) {
  const Graph g = cx.load(gp).graph;
  Curve c(g, parse_vertices(curve), true);
  auto trace = contract_curve(g, c, states);
  cx.certify(trace_document(g, false, trace));
  cx.emit({{"steps", trace.steps}}, "contracted in " + std::to_string(trace.steps.size()) + " steps");
  return kExitOk;
}

int cmd_verify(Context& cx, const std::string& path) {
  cx.no_certificate("verify");
  Verdict v = verify_document(cx.read(path));
  json j{{"ok", v.ok}};
  std::string human = "ok";
  if (!v.ok) {
    j["message"] = v.message;
    if (v.failing_step) j["failing_step"] = *v.failing_step;
    human = "rejected";
    if (v.failing_step) human += " at step " + std::to_string(*v.failing_step);
    human += ": " + v.message;
  }
  cx.emit(j, human);
  return v.ok ? kExitOk : kExitNegative;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete spheres, balls and their separation on finite simple graphs", "evako"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--human", opt.human, "Print a short summary instead of JSON");
  app.add_flag("--edge-list", opt.edge_list, "Read graphs as plain edge lists");
  app.add_option("--certificate", opt.certificate, "Write a certificate document to this path");
  std::uint64_t budget = 0;
  auto* budget_opt = app.add_option("--budget", budget, "Classifier node budget (EVAKO_BUDGET_NODES)");
  int max_dim = 0;
  auto* max_dim_opt = app.add_option("--max-dim", max_dim, "Largest simplex dimension for euler and enhance");

  std::string a, b;
  std::vector<std::string> params;
  std::uint64_t seed = 0;
  std::string curve, facets, carrier;
  bool open = false, base_curve = false, direct = false, lifted = false;
  std::uint64_t states = kDefaultContractionStates;

  auto* gen_cmd = app.add_subcommand("gen", "Write a named graph");
  gen_cmd->add_option("name", a, "Generator name")->required();
  gen_cmd->add_option("params", params, "Generator parameters");
  auto* seed_opt = gen_cmd->add_option("--seed", seed, "Seed for random_graph (EVAKO_SEED)");

  auto graph_arg = [&](CLI::App* s) { s->add_option("graph", a, "Graph document (stdin when absent)"); };
  auto* classify_cmd = app.add_subcommand("classify", "sphere, ball, contractible or neither");
  graph_arg(classify_cmd);
  auto* dim_cmd = app.add_subcommand("dim", "Inductive dimension");
  graph_arg(dim_cmd);
  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic and clique counts");
  graph_arg(euler_cmd);
  auto* enhance_cmd = app.add_subcommand("enhance", "Enhanced graph of simplices");
  graph_arg(enhance_cmd);

  auto* product_cmd = app.add_subcommand("product", "Graph product");
  product_cmd->add_option("first", a, "First factor")->required();
  product_cmd->add_option("second", b, "Second factor")->required();

  auto pair_args = [&](CLI::App* s) {
    s->add_option("sphere", a, "Sub-sphere H")->required();
    s->add_option("graph", b, "Host G")->required();
  };
  auto* embed_cmd = app.add_subcommand("embed-check", "Is H embedded in G");
  pair_args(embed_cmd);
  auto* separate_cmd = app.add_subcommand("separate", "Split G along H");
  pair_args(separate_cmd);
  auto* mode = separate_cmd->add_option_group("mode");
  mode->add_flag("--direct", direct, "Separate G itself (H must be embedded)");
  mode->add_flag("--enhanced", "Separate G1 along H1 (default)");
  mode->require_option(0, 1);
  auto* schoen_cmd = app.add_subcommand("schoenflies", "Certify both sides of H as balls");
  pair_args(schoen_cmd);
  auto* intersect_cmd = app.add_subcommand("intersect", "Intersection number of a curve with H");
  pair_args(intersect_cmd);
  intersect_cmd->add_option("--curve", curve, "Curve vertices in G1, comma separated")->required();
  intersect_cmd->add_flag("--open", open, "Treat the curve as open");
  intersect_cmd->add_flag("--base-curve", base_curve, "Curve given in G; lifted through edge simplices");

  auto* deform_cmd = app.add_subcommand("deform", "One deformation step of a facet set");
  deform_cmd->add_option("graph", a)->required();
  deform_cmd->add_option("--facets", facets, "JSON array of facets")->required();
  deform_cmd->add_option("--carrier", carrier, "Carrier simplex, comma separated")->required();
  deform_cmd->add_flag("--lifted", lifted, "Facets and carrier live in G1");

  auto* contract_cmd = app.add_subcommand("contract", "Deform a closed curve in a sphere to nothing");
  contract_cmd->add_option("graph", a)->required();
  contract_cmd->add_option("--curve", curve, "Closed curve, comma separated")->required();
  contract_cmd->add_option("--states", states, "Search state budget");

  auto* verify_cmd = app.add_subcommand("verify", "Replay a certificate document");
  verify_cmd->add_option("certificate", a, "Certificate document (stdin when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  Context cx{in, out, opt};
  try {
    if (budget_opt->count()) cx.opt.budget = budget;
    else cx.opt.budget = env_number("EVAKO_BUDGET_NODES");
    if (cx.opt.budget) default_classifier().set_node_budget(*cx.opt.budget);
    if (max_dim_opt->count()) cx.opt.max_dim = max_dim;

    if (*gen_cmd) return cmd_gen(cx, a, params, seed_opt->count() ? std::optional(seed) : std::nullopt);
    if (*classify_cmd) return cmd_classify(cx, a);
    if (*dim_cmd) return cmd_dim(cx, a);
    if (*euler_cmd) return cmd_euler(cx, a);
    if (*enhance_cmd) return cmd_enhance(cx, a);
    if (*product_cmd) return cmd_product(cx, a, b);
    if (*embed_cmd) return cmd_embed(cx, a, b);
    if (*separate_cmd) return cmd_separate(cx, a, b, direct);
    if (*schoen_cmd) return cmd_schoenflies(cx, a, b);
    if (*intersect_cmd) return cmd_intersect(cx, a, b, curve, open, base_curve);
    if (*deform_cmd) return cmd_deform(cx, a, facets, carrier, lifted);
    if (*contract_cmd) return cmd_contract(cx, a, curve, states);
    if (*verify_cmd) return cmd_verify(cx, a);
  } catch (const TheoremViolation& e) {
    json j{{"error", "theorem_violation"}, {"found", e.found()}, {"message", e.what()}};
    err << j.dump() << "\n";
    return kExitTheorem;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace evako::cli
