#pragma once

#include <optional>
#include <vector>

#include "idforest/graph.hpp"

namespace idforest {

/// Witness that `pattern` is a minor of some host graph: branch_sets[x] is the
/// connected host vertex set standing in for pattern vertex x.
struct MinorModel {
  Graph pattern;
  std::vector<std::vector<Vertex>> branch_sets;
};

/// Disjoint, non-empty, connected branch sets, and a host edge between the
/// branch sets of every pattern edge.
bool verify_model(const MinorModel& model, const Graph& host);

inline constexpr int kModelSearchMaxVertices = 32;

/// Backtracking search for a model of `pattern` in `host`. Exponential; meant
/// for hosts of a few dozen vertices at most. Throws SizeLimitError above
/// kModelSearchMaxVertices.
std::optional<MinorModel> find_minor_model(const Graph& pattern, const Graph& host);

}  // namespace idforest
