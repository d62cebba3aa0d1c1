#pragma once

#include <vector>

#include "idforest/graph.hpp"

namespace idforest {

/// Largest order vc_exact accepts.
inline constexpr int kVcExactMaxVertices = 64;

struct VcSolution {
  std::vector<Vertex> cover;
  int value = 0;
};

/// Optimal half-integral solution of the vertex cover LP: 0 on `zero`,
/// 1/2 on `half`, 1 on `one`.
struct HalfIntegralLp {
  std::vector<Vertex> zero;
  std::vector<Vertex> half;
  std::vector<Vertex> one;

  /// Twice the LP objective, so it stays integral.
  int doubled_value() const { return static_cast<int>(half.size() + 2 * one.size()); }
};

/// An instance (graph, budget) equivalent to the one it was reduced from.
struct KernelInstance {
  Graph graph;
  /// May be negative only for the zero-budget identification kernel of a
  /// no-instance; see idf_kernel.
  int budget = 0;
  /// Vertices already committed to the cover, in the caller's labels.
  std::vector<Vertex> forced;
  /// origin[i] is the caller's label of kernel vertex i, or -1 for vertices
  /// the reduction introduced.
  std::vector<Vertex> origin;
  /// Set when the reduction decided "no" and emitted the canonical no-instance.
  bool trivial_no = false;
};

/// Computed from a minimum vertex cover of the bipartite double cover
/// (König's theorem over a maximum matching).
HalfIntegralLp lp_half_integral(const Graph& g);

/// Nemhauser–Trotter reduction. Decided no-instances come back as the
/// canonical (K2, 0).
KernelInstance nt_kernel(const Graph& g, int k);

/// Minimum vertex cover with witness. Throws SizeLimitError above 64 vertices.
VcSolution vc_exact(const Graph& g);

/// vc(g) <= k, via nt_kernel then exact search on the kernel.
bool vc_decision(const Graph& g, int k);

}  // namespace idforest
