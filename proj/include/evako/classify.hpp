#pragma once

// Recursive classifiers for contractibility, inductive dimension, spheres,
// balls and geometric graphs.
//
// Every positive verdict comes with a certificate that can be replayed
// without search (see verify.hpp). Results are memoized by canonical key in
// a Classifier; the free functions use a process-wide default instance.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "evako/graph.hpp"
#include "evako/rational.hpp"

namespace evako {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

/// Removal sequence ending in K1. `links[i]` certifies that the unit sphere
/// of `removal_order[i]` is contractible in the graph left after the first
/// i removals.
struct ContractionCertificate {
  std::vector<Vertex> removal_order;
  std::vector<ContractionCertificate> links;
  Vertex last = 0;
};

/// Sphere of dimension `dimension`. For d = -1 the graph is empty and all
/// other fields are unused. `links` follows the sorted vertex order.
struct SphereCertificate {
  int dimension = -1;
  std::vector<Vertex> vertices;
  std::vector<SphereCertificate> links;
  Vertex puncture = 0;
  ContractionCertificate punctured;
};

struct BallCertificate {
  int dimension = 0;
  VertexSet interior;
  VertexSet boundary;
  std::vector<SphereCertificate> interior_links;
  std::vector<BallCertificate> boundary_links;
  SphereCertificate boundary_sphere;
  ContractionCertificate contraction;
};

/// Why a classification failed. `path` names the chain of vertices whose
/// nested unit spheres lead to the failing check.
struct Refutation {
  std::string reason;
  std::vector<Vertex> path;
  std::uint64_t explored = 0;
};

template <class Certificate>
struct Outcome {
  std::optional<Certificate> certificate;
  Refutation refutation;

  explicit operator bool() const { return certificate.has_value(); }
  const Certificate& operator*() const { return *certificate; }
  const Certificate* operator->() const { return &*certificate; }

  static Outcome accept(Certificate c) { return {std::move(c), {}}; }
  static Outcome reject(Refutation r) { return {std::nullopt, std::move(r)}; }
};

enum class GeometricKind { geometric, with_boundary, neither };

struct GeometricReport {
  GeometricKind kind = GeometricKind::neither;
  int dimension = 0;
  VertexSet boundary;               // vertices whose unit sphere is a ball
  std::optional<Vertex> witness;    // failing vertex for `neither`
  std::string reason;
};

/// Sign (+1/-1, relative to sorted vertex order) of every top simplex.
struct Orientation {
  int dimension = 0;
  std::map<Simplex, int> signs;

  int sign(const Simplex& s) const;
  Orientation flipped() const;
};

struct OrientationResult {
  std::optional<Orientation> orientation;
  /// Closed chain of top simplices, consecutive ones sharing a facet, along
  /// which the induced orientations cannot be made consistent.
  std::vector<Simplex> conflict_loop;
  explicit operator bool() const { return orientation.has_value(); }
};

/// Induced orientation sign of `face` (a facet of `simplex`) when `simplex`
/// carries `sign` relative to its sorted order.
int induced_face_sign(const Simplex& simplex, int sign, const Simplex& face);

/// Sign of the permutation sorting `ordered` (+1 even, -1 odd).
int permutation_sign(std::vector<Vertex> ordered);

class Classifier {
 public:
  explicit Classifier(std::uint64_t node_budget = kDefaultNodeBudget);
  ~Classifier();
  Classifier(const Classifier&) = delete;
  Classifier& operator=(const Classifier&) = delete;

  std::uint64_t node_budget() const { return node_budget_; }
  void set_node_budget(std::uint64_t nodes) { node_budget_ = nodes; }
  void clear();

  Outcome<ContractionCertificate> contractible(const Graph& g);
  Rational dimension(const Graph& g);
  Outcome<SphereCertificate> sphere(const Graph& g);
  Outcome<BallCertificate> ball(const Graph& g);

 private:
  struct Caches;
  struct Scope;

  Outcome<ContractionCertificate> contractible_impl(const Graph& g);
  Rational dimension_impl(const Graph& g);
  Outcome<SphereCertificate> sphere_impl(const Graph& g);
  Outcome<BallCertificate> ball_impl(const Graph& g);
  void charge();

  std::uint64_t node_budget_;
  std::uint64_t nodes_used_ = 0;
  int depth_ = 0;
  std::recursive_mutex mutex_;
  std::unique_ptr<Caches> caches_;
};

/// Shared instance used by the free functions below. Its budget can be set
/// once at startup (the CLI reads EVAKO_BUDGET_NODES).
Classifier& default_classifier();

Outcome<ContractionCertificate> is_contractible(const Graph& g);
Rational inductive_dimension(const Graph& g);
Outcome<SphereCertificate> is_sphere(const Graph& g);
Outcome<BallCertificate> is_ball(const Graph& g);

/// Requires a non-empty graph.
GeometricReport is_geometric(const Graph& g);
/// Boundary graph of a geometric graph with boundary.
Graph boundary(const Graph& g);
/// Requires is_geometric(g) to succeed (boundary allowed).
OrientationResult orient(const Graph& g);

/// Largest n accepted by expected_dimension_polynomial.
inline constexpr int kMaxExpectationOrder = 16;

/// Expected inductive dimension of G(n+1, p) as a polynomial in p.
Polynomial expected_dimension_polynomial(int n);

}  // namespace evako
