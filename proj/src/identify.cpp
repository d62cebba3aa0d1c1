#include "idforest/identify.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "idforest/errors.hpp"

namespace idforest {

VertexPartition::VertexPartition(std::vector<std::vector<Vertex>> blocks) : blocks_(std::move(blocks)) {
  std::set<Vertex> seen;
  for (auto& block : blocks_) {
    if (block.empty()) throw InvalidBlockError("empty block");
    std::sort(block.begin(), block.end());
    for (Vertex v : block) {
      if (v < 0) throw InvalidBlockError("negative vertex " + std::to_string(v));
      if (!seen.insert(v).second) {
        throw InvalidBlockError("vertex " + std::to_string(v) + " appears in two blocks");
      }
    }
  }
}

int VertexPartition::order() const noexcept {
  int total = 0;
  for (const auto& block : blocks_) total += static_cast<int>(block.size());
  return total;
}

std::vector<Vertex> VertexPartition::support() const {
  std::vector<Vertex> out;
  for (const auto& block : blocks_) out.insert(out.end(), block.begin(), block.end());
  std::sort(out.begin(), out.end());
  return out;
}

void VertexPartition::validate_for(const Graph& g) const {
  for (const auto& block : blocks_) {
    for (Vertex v : block) {
      if (!g.has_vertex(v)) {
        throw InvalidBlockError("vertex " + std::to_string(v) + " not in graph of order " +
                                std::to_string(g.vertex_count()));
      }
    }
  }
}

IdentifiedSet identify_set(const Graph& g, std::span<const Vertex> x) {
  if (x.empty()) throw InvalidBlockError("cannot identify an empty set");
  const VertexPartition p({std::vector<Vertex>(x.begin(), x.end())});
  Identified r = identify_partition(g, p);
  return {std::move(r.graph), r.heirs.block_heir.front(), std::move(r.heirs.image)};
}

Identified identify_partition(const Graph& g, const VertexPartition& p) {
  p.validate_for(g);
  const int n = g.vertex_count();
  std::vector<int> block_of(n, -1);
  for (int b = 0; b < p.block_count(); ++b) {
    for (Vertex v : p.blocks()[b]) block_of[v] = b;
  }

  HeirMap heirs;
  heirs.image.assign(n, -1);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (block_of[v] == -1) heirs.image[v] = next++;
  }
  std::vector<int> by_min(p.block_count());
  std::iota(by_min.begin(), by_min.end(), 0);
  std::sort(by_min.begin(), by_min.end(),
            [&](int a, int b) { return p.blocks()[a].front() < p.blocks()[b].front(); });
  heirs.block_heir.assign(p.block_count(), -1);
  for (int b : by_min) heirs.block_heir[b] = next++;
  for (Vertex v = 0; v < n; ++v) {
    if (block_of[v] != -1) heirs.image[v] = heirs.block_heir[block_of[v]];
  }

  std::vector<Edge> mapped;
  mapped.reserve(g.edge_count());
  for (const Edge& e : g.edges()) mapped.emplace_back(heirs.image[e.u], heirs.image[e.v]);
  return {Graph::simplified(next, mapped), std::move(heirs)};
}

bool is_id_forest_partition(const Graph& g, const VertexPartition& p) {
  return is_forest(identify_partition(g, p).graph);
}

VertexPartition normalize_partition(const VertexPartition& p) {
  std::vector<std::vector<Vertex>> kept;
  for (const auto& block : p.blocks()) {
    if (block.size() >= 2) kept.push_back(block);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return VertexPartition(std::move(kept));
}

VertexPartition parse_partition(std::string_view text) {
  std::vector<std::vector<Vertex>> blocks;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\n')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return {};
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    std::string_view block_text = text.substr(pos, end - pos);
    std::vector<Vertex> block;
    std::size_t bpos = 0;
    while (bpos <= block_text.size()) {
      const std::size_t bend = std::min(block_text.find(',', bpos), block_text.size());
      const std::string_view item = trim(block_text.substr(bpos, bend - bpos));
      int v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
        throw ParseError("expected a vertex index in partition", pos + bpos);
      }
      block.push_back(v);
      bpos = bend + 1;
    }
    blocks.push_back(std::move(block));
    pos = end + 1;
  }
  return VertexPartition(std::move(blocks));
}

std::string format_partition(const VertexPartition& p) {
  std::string out;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b > 0) out += ';';
    for (std::size_t i = 0; i < p.blocks()[b].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(p.blocks()[b][i]);
    }
  }
  return out;
}

}  // namespace idforest
