#include "evako/generators.hpp"

#include <random>

namespace evako::gen {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = static_cast<Vertex>(i);
  return v;
}

Edge edge(int a, int b) {
  return {static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
}

// Relabels h to 0.. and k to |h|.. and optionally adds all cross edges.
Graph combine(const Graph& h, const Graph& k, bool cross) {
  const int nh = static_cast<int>(h.order());
  const int nk = static_cast<int>(k.order());
  std::vector<Edge> edges;
  for (auto [u, v] : h.edges())
    edges.push_back(edge(static_cast<int>(h.index_of(u)), static_cast<int>(h.index_of(v))));
  for (auto [u, v] : k.edges())
    edges.push_back(edge(nh + static_cast<int>(k.index_of(u)), nh + static_cast<int>(k.index_of(v))));
  if (cross)
    for (int i = 0; i < nh; ++i)
      for (int j = 0; j < nk; ++j) edges.push_back(edge(i, nh + j));
  return Graph(iota_vertices(nh + nk), edges);
}

}  // namespace

Graph complete(int n) {
  require(n >= 0, "complete: n must be >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back(edge(i, j));
  return Graph(iota_vertices(n), edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(edge(i, (i + 1) % n));
  return Graph(iota_vertices(n), edges);
}

Graph line(int n) {
  require(n >= 1, "line: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(edge(i, i + 1));
  return Graph(iota_vertices(n), edges);
}

Graph edgeless(int n) {
  require(n >= 0, "edgeless: n must be >= 0");
  return Graph(iota_vertices(n), {});
}

Graph wheel(int n) {
  require(n >= 4, "wheel: n must be >= 4");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back(edge(i, (i + 1) % n));
    edges.push_back(edge(i, n));
  }
  return Graph(iota_vertices(n + 1), edges);
}

Graph join(const Graph& h, const Graph& k) { return combine(h, k, true); }

Graph disjoint_union(const Graph& h, const Graph& k) { return combine(h, k, false); }

Graph suspension(const Graph& g) { return join(g, edgeless(2)); }

Graph cross_polytope(int d) {
  require(d >= 0 && d <= 5, "cross_polytope: d must lie in [0, 5]");
  Graph g = edgeless(2);
  for (int i = 0; i < d; ++i) g = join(g, edgeless(2));
  return g;
}

Graph octahedron() { return suspension(cycle(4)); }

Graph icosahedron() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    int up = 1 + i, up_next = 1 + (i + 1) % 5;
    int low = 6 + i, low_next = 6 + (i + 1) % 5;
    edges.push_back(edge(0, up));
    edges.push_back(edge(up, up_next));
    edges.push_back(edge(low, low_next));
    edges.push_back(edge(up, low));
    edges.push_back(edge(up, low_next));
    edges.push_back(edge(11, low));
  }
  return Graph(iota_vertices(12), edges);
}

Graph cube() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit)
      if (int w = v ^ (1 << bit); v < w) edges.push_back(edge(v, w));
  return Graph(iota_vertices(8), edges);
}

Graph house() {
  return Graph(iota_vertices(5), {edge(0, 1), edge(1, 2), edge(2, 3), edge(3, 0), edge(2, 4), edge(3, 4)});
}

Graph moebius_band(int n) {
  require(n >= 10 && n % 2 == 0, "moebius_band: n must be even and >= 10");
  const int k = n / 2;
  // column i, row r in {0, 1, 2}; column k is column 0 flipped
  auto v = [k](int i, int r) {
    if (i == k) { i = 0; r = 2 - r; }
    return r == 0 ? i : r == 2 ? k + i : 2 * k + i;
  };
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    for (int r = 0; r < 3; ++r) edges.push_back(edge(v(i, r), v(i + 1, r)));
    for (int r = 0; r < 2; ++r) {
      edges.push_back(edge(v(i, r), v(i, r + 1)));
      edges.push_back(edge(v(i, r), v(i + 1, r + 1)));
    }
  }
  return Graph(iota_vertices(3 * k), edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  require(n >= 0, "random_graph: n must be >= 0");
  require(p >= 0.0 && p <= 1.0, "random_graph: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back(edge(i, j));
    }
  }
  return Graph(iota_vertices(n), edges);
}

std::vector<std::string> names() {
  return {"complete", "cycle",      "line",       "edgeless", "wheel",        "cross_polytope",
          "octahedron", "icosahedron", "cube",     "house",    "moebius_band", "random_graph"};
}

Graph by_name(const std::string& name, const std::vector<long long>& params) {
  auto arg = [&](std::size_t i) -> int {
    if (i >= params.size()) throw InputError("generator '" + name + "' needs parameter " + std::to_string(i + 1));
    return static_cast<int>(params[i]);
  };
  if (name == "complete") return complete(arg(0));
  if (name == "cycle") return cycle(arg(0));
  if (name == "line") return line(arg(0));
  if (name == "edgeless") return edgeless(arg(0));
  if (name == "wheel") return wheel(arg(0));
  if (name == "cross_polytope") return cross_polytope(arg(0));
  if (name == "octahedron") return octahedron();
  if (name == "icosahedron") return icosahedron();
  if (name == "cube") return cube();
  if (name == "house") return house();
  if (name == "moebius_band") return moebius_band(arg(0));
  throw InputError("unknown generator '" + name + "'");
}

}  // namespace evako::gen
