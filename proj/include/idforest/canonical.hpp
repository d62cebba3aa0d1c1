#pragma once

#include <string>
#include <vector>

#include "idforest/graph.hpp"

namespace idforest {

/// Largest order accepted by the canonical labeler (enumeration regime).
inline constexpr int kCanonicalMaxVertices = 12;

struct CanonicalLabeling {
  /// position[v] is the canonical index of vertex v.
  std::vector<Vertex> position;
  /// graph6 of the relabeled graph; equal iff the inputs are isomorphic.
  std::string form;
};

/// Colour refinement followed by an individualization search that keeps the
/// lexicographically largest adjacency certificate. Branches are pruned with
/// automorphisms discovered on the way and with twin transpositions.
CanonicalLabeling canonical_labeling(const Graph& g);

std::string canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace idforest
