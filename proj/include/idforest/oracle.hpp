#pragma once

#include <optional>

#include "idforest/graph.hpp"
#include "idforest/minor_model.hpp"

/// Brute-force references. Nothing here reuses the reduction code of the fast
/// solvers; each routine evaluates its definition directly.
namespace idforest::oracle {

inline constexpr int kBruteIdfMaxVertices = 9;
inline constexpr int kBruteVcMaxVertices = 20;
inline constexpr int kBruteEcfMaxEdges = 20;
inline constexpr int kBruteMinorMaxVertices = 12;

struct EcfValue {
  int value = 0;
  /// Contracting these edges (identifying each component of the spanning
  /// subgraph they form) yields a forest.
  EdgeSet witness;
};

/// Minimum order of a partition of a vertex subset whose identification is a
/// forest: subsets by increasing size, set partitions as restricted-growth strings.
int brute_idf(const Graph& g);

/// Minimum vertex cover size by subset enumeration.
int brute_vc(const Graph& g);

/// Minimum number of edge contractions turning g into a forest.
EcfValue brute_ecf(const Graph& g);

/// Model of h in g, found by growing connected branch sets one pattern vertex
/// at a time. Returns nullopt when h has more vertices than g.
std::optional<MinorModel> brute_minor(const Graph& h, const Graph& g);

/// True iff the quotient of g by `klass` (klass[v] = class id) is acyclic.
bool quotient_is_forest(const Graph& g, const std::vector<int>& klass, int classes);

}  // namespace idforest::oracle
