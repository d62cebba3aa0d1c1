#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "idforest/graph.hpp"
#include "idforest/identify.hpp"
#include "idforest/minor_model.hpp"

namespace idforest {

inline constexpr int kDetectorMaxVertices = 16;
inline constexpr int kMargueriteMaxVertices = 12;

/// C_n on 0..n-1, edges (i, i+1 mod n). n >= 3.
Graph gen_cycle(int n);
/// m disjoint triangles; triangle i is {3i, 3i+1, 3i+2}. m >= 1.
Graph gen_triangles(int m);
/// m triangles sharing the hub 0; petal i is {2i+1, 2i+2}. m >= 1.
Graph gen_marguerite(int m);
/// Cycle p_1..p_{3k} on vertices 0..3k-1 plus a_1, a_2, a_3 on 3k..3k+2, with
/// a_i adjacent to every p_j with j = i (mod 3). k >= 1.
Graph gen_antichain_h(int k);

/// Vertices of a longest cycle in order, empty if g is a forest.
std::vector<Vertex> longest_cycle(const Graph& g);
int circumference(const Graph& g);

/// A maximum family of vertex-disjoint cycles, each listed in cyclic order.
std::vector<std::vector<Vertex>> cycle_packing(const Graph& g);
int max_cycle_packing(const Graph& g);

/// Largest m such that gen_marguerite(m) is a minor of g (0 if none).
int max_marguerite(const Graph& g);

/// Minimum feedback vertex set, by subsets of increasing size.
std::vector<Vertex> min_feedback_vertex_set(const Graph& g);

enum class Family { cycle, triangles, marguerite };

std::string_view family_name(Family f);
/// The generator graph for a family at parameter k.
Graph family_graph(Family f, int k);

struct FamilyWitness {
  Family family = Family::cycle;
  int k = 0;
  MinorModel model;
};

struct DichotomyOutcome {
  std::variant<FamilyWitness, VertexPartition> result;
  /// Uncovered edges of the bridgeless core patched after the tree-trimming
  /// construction; zero whenever the construction alone already covers.
  int repaired = 0;

  bool is_witness() const { return std::holds_alternative<FamilyWitness>(result); }
  const FamilyWitness& witness() const { return std::get<FamilyWitness>(result); }
  const VertexPartition& id_set() const { return std::get<VertexPartition>(result); }
};

/// Either a model of C_k, k*K3-packing or the k-marguerite in g (checked in
/// the order packing, cycle, marguerite), or a partition whose identification
/// turns g into a forest. Requires k >= 1 and |V(g)| <= kDetectorMaxVertices;
/// the cycle family is only tried for k >= 3.
DichotomyOutcome dichotomy(const Graph& g, int k);

/// Witness models must realise exactly family_graph(family, k) in g; id sets
/// must identify g to a forest.
bool validate_outcome(const DichotomyOutcome& outcome, const Graph& g);

/// {"family", "k", "branch_sets"} or {"id_set"}.
nlohmann::json to_json(const DichotomyOutcome& outcome);

}  // namespace idforest
