#include "idforest/idf_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "idforest/graph_io.hpp"

namespace idforest {

IdfCertificate idf_exact(const Graph& g) {
  const Graph core = remove_bridges(g);
  const VcSolution cover = vc_exact(core);

  std::vector<char> in_cover(g.vertex_count(), 0);
  for (Vertex v : cover.cover) in_cover[v] = 1;

  // Blocks never span two components of the core, so re-adding the bridges
  // cannot close a cycle.
  std::vector<std::vector<Vertex>> blocks;
  for (const auto& comp : connected_components(core)) {
    std::vector<Vertex> block;
    for (Vertex v : comp) {
      if (in_cover[v]) block.push_back(v);
    }
    if (block.size() >= 2) blocks.push_back(std::move(block));
  }

  IdfCertificate cert;
  cert.value = cover.value;
  cert.partition = normalize_partition(VertexPartition(std::move(blocks)));
  Identified identified = identify_partition(g, cert.partition);
  cert.forest = std::move(identified.graph);
  cert.heirs = std::move(identified.heirs);
  if (cert.partition.order() != cert.value || !is_forest(cert.forest)) {
    throw std::logic_error("idf_exact: witness does not certify the computed value");
  }
  return cert;
}

bool idf_decision(const Graph& g, int k) {
  if (k < 0) return false;
  return vc_decision(remove_bridges(g), k);
}

Apexed apex_bridgeless(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > 0) edges.emplace_back(v, n);
  }
  return {Graph(n + 1, edges), n};
}

IdfInstance vc_to_idf(const Graph& g, int k) {
  if (is_bridgeless(g)) return {g, k};
  return {apex_bridgeless(g).graph, k + 1};
}

KernelInstance idf_kernel(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("idf_kernel: negative budget");
  KernelInstance kernel = nt_kernel(remove_bridges(g), k);
  if (kernel.trivial_no && k == 0) {
    kernel.graph = Graph(0);
    kernel.budget = -1;
    kernel.origin.clear();
    return kernel;
  }
  if (is_bridgeless(kernel.graph)) return kernel;

  kernel.graph = apex_bridgeless(kernel.graph).graph;
  kernel.budget += 1;
  kernel.origin.push_back(-1);
  return kernel;
}

nlohmann::json to_json(const IdfCertificate& cert) {
  return {
      {"idf", cert.value},
      {"partition", cert.partition.blocks()},
      {"forest_graph6", to_graph6(cert.forest)},
  };
}

}  // namespace idforest
