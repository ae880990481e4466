#pragma once

// Separation of a sphere by a hypersurface sphere, intersection numbers of
// curves with it, and ball certification of both sides.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "evako/classify.hpp"
#include "evako/enhance.hpp"
#include "evako/graph.hpp"
#include "evako/homotopy.hpp"

namespace evako {

enum class SeparationMode { enhanced, direct };

struct SeparationResult {
  /// G1 in enhanced mode, G otherwise; `sphere` is H1 or H accordingly.
  Graph host;
  Graph sphere;
  /// Each side with the sphere added, generated in `host`.
  Graph a, b;
  /// Complement components; `a_raw` holds the smallest complement label.
  VertexSet a_raw, b_raw;
  bool enhanced = true;
  int dimension = 0;
  /// Set in enhanced mode.
  std::shared_ptr<const EnhancedGraph> lift;
};

/// G must be a d-sphere and H a (d-1)-sphere subgraph. Direct mode also
/// requires H to be embedded. Throws TheoremViolation carrying the
/// components when the complement does not split into exactly two.
SeparationResult separate(const Graph& h, const Graph& g, SeparationMode mode = SeparationMode::enhanced);

/// Checks A ∩ B = sphere, A ∪ B = host and that the raw sides are disjoint,
/// non-empty and connected. Returns an empty string when all hold.
std::string separation_invariant_failure(const SeparationResult& r);

struct EulerBudget {
  std::int64_t chi_a = 0;
  std::int64_t chi_b = 0;
  bool sum_is_two = false;
  bool each_is_one = false;
};

EulerBudget euler_budget_check(const SeparationResult& r);

// ---------------------------------------------------------------------------
// Intersection numbers

struct IntersectionEvent {
  /// Curve positions of the first and last vertex of the run inside H1.
  std::size_t first = 0;
  std::size_t last = 0;
  Vertex before = 0;  // y
  Vertex after = 0;   // z
  int incoming = 0;   // 0 or 1
  int outgoing = 0;   // 0 or 1
  bool crossing = false;
  /// Crossing: +1 under the reference orientations of C and H1, negated by
  /// flipping either. Touch-down: +-2, sign from the side it bounces off.
  int contribution = 0;
};

struct IntersectionCount {
  int total = 0;
  std::vector<IntersectionEvent> events;
  int curve_orientation = 1;
  Orientation sphere_orientation;
};

/// Orientations and lifts shared by every curve tested against one sphere.
class IntersectionSetup {
 public:
  /// G a d-sphere with d >= 1, H a (d-1)-sphere subgraph.
  IntersectionSetup(const Graph& h, const Graph& g);

  const EnhancedGraph& lift() const { return *lift_; }
  const Graph& host() const { return lift_->enhanced(); }
  const Graph& sphere() const { return sphere_; }
  const Orientation& host_orientation() const { return host_orientation_; }
  /// Orientation of H1 fixed at construction.
  const Orientation& sphere_orientation() const { return sphere_orientation_; }
  int dimension() const { return dimension_; }

  /// Curve given in G1. `curve_orientation` is +1 to traverse C as stored,
  /// -1 for the reverse. Throws PreconditionError for open curves.
  IntersectionCount count(const Curve& c, int curve_orientation, const Orientation& sphere_orientation) const;
  IntersectionCount count(const Curve& c) const { return count(c, 1, sphere_orientation_); }

  /// Total mod 2. Open curves are accepted here (runs touching an end are
  /// skipped). Cross-checked against the side components of the enhanced
  /// separation; a mismatch throws TheoremViolation.
  int parity(const Curve& c) const;

  /// Number of side changes of C between consecutive off-sphere vertices,
  /// read from the separation components.
  std::size_t side_changes(const Curve& c) const;

  const SeparationResult& separation() const { return separation_; }

 private:
  IntersectionCount count_impl(const Curve& c, int curve_orientation, const Orientation& oh) const;
  int side(Vertex y, Vertex a, const Orientation& oh, std::size_t index) const;

  std::shared_ptr<const EnhancedGraph> lift_;
  Graph sphere_;
  Orientation host_orientation_;
  Orientation sphere_orientation_;
  int dimension_ = 0;
  SeparationResult separation_;
};

IntersectionCount intersection_number(const Curve& c, const Graph& h, const Graph& g, int curve_orientation,
                                      const Orientation& sphere_orientation);
int intersection_parity(const Curve& c, const Graph& h, const Graph& g);

struct ParityReport {
  bool preserved = true;
  std::optional<std::size_t> first_violation;  // step index
  std::vector<int> parities;                    // before step 0, after each step
};

/// Trace over facet_dim 1 in G1 starting from C's edge set. Open curves
/// keep their end points.
ParityReport parity_homotopy_invariance(const Curve& c, const DeformationTrace& steps, const IntersectionSetup& s);

// ---------------------------------------------------------------------------
// Schoenflies

struct SchoenfliesSide {
  /// d-simplices of G lying on this side, in clique order.
  std::vector<Simplex> region;
  DeformationTrace trace;
  /// Enclosed simplex count before the first step and after every step.
  std::vector<std::size_t> measure;
  Simplex last;
  std::optional<BallCertificate> ball;         // side of the enhanced separation
  std::optional<BallCertificate> direct_ball;  // side of the direct separation
  bool direct_checked = false;
};

struct SchoenfliesCertificate {
  SeparationResult separation;
  SchoenfliesSide a, b;
  int dimension = 0;
};

/// Enclosed simplices: faces of `region` that are not faces of any facet of
/// the hypersurface.
std::size_t enclosed_count(const std::vector<Simplex>& region, const Hypersurface& h);

/// Shrinks H inside each side to the boundary of one d-simplex. When
/// `check_balls` is set, both enhanced sides (and the direct sides when H
/// is embedded) are classified with is_ball.
SchoenfliesCertificate schoenflies(const Graph& h, const Graph& g, bool check_balls = true);

}  // namespace evako
