#pragma once

#include <string>
#include <vector>

#include "evako/graph.hpp"

namespace evako {

/// Canonical labeling of a graph.
///
/// `order[i]` is the original vertex placed at canonical position i. When
/// `exact` is true the key determines the graph up to isomorphism and two
/// graphs share a key iff they are isomorphic. When `exact` is false the
/// search exceeded its leaf budget: the key is an isomorphism-invariant
/// hash and `order` is simply the sorted vertex order, so cache users must
/// compare the stored representative before trusting a hit.
struct CanonicalForm {
  std::string key;
  std::vector<Vertex> order;
  bool exact = true;
};

/// Graphs up to this many vertices are always labeled exactly.
inline constexpr std::size_t kExactCanonicalVertices = 12;

CanonicalForm canonical_form(const Graph& g, std::size_t leaf_budget = 4096);
std::string canonical_key(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace evako
