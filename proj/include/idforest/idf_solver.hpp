#pragma once

#include "json.hpp"

#include "idforest/graph.hpp"
#include "idforest/identify.hpp"
#include "idforest/vc.hpp"

namespace idforest {

/// Optimal identification of a graph to a forest.
struct IdfCertificate {
  int value = 0;
  /// One block per 2-edge-connected piece that needs identifying; no singletons.
  VertexPartition partition;
  /// The identified graph, always a forest.
  Graph forest;
  HeirMap heirs;
};

struct IdfInstance {
  Graph graph;
  int budget = 0;
};

struct Apexed {
  Graph graph;
  Vertex apex = 0;
};

/// idf(g) = vc of g with its bridges removed. The witness identifies, inside
/// every component of the bridgeless core, the part of a minimum vertex cover
/// lying in it. Throws SizeLimitError above kVcExactMaxVertices.
IdfCertificate idf_exact(const Graph& g);

/// idf(g) <= k. Negative k is always a no.
bool idf_decision(const Graph& g, int k);

/// Adds a vertex adjacent to every non-isolated vertex. The result is
/// bridgeless and, if g has an edge, its vertex cover number is vc(g)+1.
Apexed apex_bridgeless(const Graph& g);

/// Reduction from vertex cover: (g,k) if g is bridgeless, otherwise the apexed
/// graph with budget k+1.
IdfInstance vc_to_idf(const Graph& g, int k);

/// Kernel with at most 2k+1 vertices and budget at most k+1: remove bridges,
/// apply nt_kernel, then apex the result if it still has a bridge.
///
/// For k = 0 no such no-instance with a non-negative budget exists (every
/// graph on one vertex is a forest), so a zero-budget no-instance is reported
/// as the empty graph with budget -1.
KernelInstance idf_kernel(const Graph& g, int k);

/// {"idf": int, "partition": [[int]], "forest_graph6": string}
nlohmann::json to_json(const IdfCertificate& cert);

}  // namespace idforest
