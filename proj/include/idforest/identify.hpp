#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "idforest/graph.hpp"

namespace idforest {

/// Disjoint, non-empty vertex blocks over some host graph. Blocks are kept in
/// the order given; each block is stored sorted.
class VertexPartition {
 public:
  VertexPartition() = default;
  /// Throws InvalidBlockError on empty, overlapping or negative blocks.
  explicit VertexPartition(std::vector<std::vector<Vertex>> blocks);

  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  bool empty() const noexcept { return blocks_.empty(); }
  /// Number of vertices touched by the partition.
  int order() const noexcept;
  std::vector<Vertex> support() const;

  /// Throws InvalidBlockError if a block names a vertex outside g.
  void validate_for(const Graph& g) const;

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<std::vector<Vertex>> blocks_;
};

/// Vertex images after an identification. Untouched vertices keep their
/// relative order; heirs follow, one per block, blocks sorted by minimum vertex.
struct HeirMap {
  /// image[v] is the vertex of the identified graph that v became.
  std::vector<Vertex> image;
  /// block_heir[i] is the heir of the i-th block of the input partition.
  std::vector<Vertex> block_heir;
};

struct IdentifiedSet {
  Graph graph;
  Vertex heir = 0;
  std::vector<Vertex> image;
};

struct Identified {
  Graph graph;
  HeirMap heirs;
};

/// G//X: delete X and add a heir adjacent to N_G(X).
IdentifiedSet identify_set(const Graph& g, std::span<const Vertex> x);
Identified identify_partition(const Graph& g, const VertexPartition& p);
bool is_id_forest_partition(const Graph& g, const VertexPartition& p);

/// Drops singleton blocks (identity operations) and sorts blocks by minimum vertex.
VertexPartition normalize_partition(const VertexPartition& p);

/// "0,2;1,3" style text. An empty string is the empty partition.
VertexPartition parse_partition(std::string_view text);
std::string format_partition(const VertexPartition& p);

}  // namespace idforest
