#include "idforest/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "idforest/errors.hpp"

namespace idforest {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) {
    throw NotPresentError("vertex " + std::to_string(v) + " not in graph of order " +
                          std::to_string(g.vertex_count()));
  }
}

void require_edge(const Graph& g, Edge e) {
  if (!g.has_vertex(e.u) || !g.has_vertex(e.v) || !g.has_edge(e.u, e.v)) {
    throw NotPresentError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} not in graph");
  }
}

// Low-link DFS shared by bridge and cut-vertex detection.
struct LowLink {
  std::vector<int> disc;
  std::vector<int> low;
  EdgeSet bridge_edges;
  std::vector<char> is_cut;

  explicit LowLink(const Graph& g)
      : disc(g.vertex_count(), -1), low(g.vertex_count(), 0), is_cut(g.vertex_count(), 0) {
    const int n = g.vertex_count();
    int timer = 0;
    struct Frame {
      Vertex v;
      Vertex parent;
      std::size_t next;
    };
    std::vector<Frame> stack;
    for (Vertex root = 0; root < n; ++root) {
      if (disc[root] != -1) continue;
      int root_children = 0;
      disc[root] = low[root] = timer++;
      stack.push_back({root, -1, 0});
      while (!stack.empty()) {
        Frame& f = stack.back();
        auto nbrs = g.neighbors(f.v);
        if (f.next < nbrs.size()) {
          Vertex w = nbrs[f.next++];
          if (w == f.parent) continue;
          if (disc[w] == -1) {
            disc[w] = low[w] = timer++;
            if (f.v == root) ++root_children;
            stack.push_back({w, f.v, 0});
          } else {
            low[f.v] = std::min(low[f.v], disc[w]);
          }
          continue;
        }
        const Vertex v = f.v;
        const Vertex p = f.parent;
        stack.pop_back();
        if (p == -1) continue;
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) bridge_edges.emplace_back(p, v);
        if (p != root && low[v] >= disc[p]) is_cut[p] = 1;
      }
      if (root_children >= 2) is_cut[root] = 1;
    }
    std::sort(bridge_edges.begin(), bridge_edges.end());
  }
};

}  // namespace

Graph::Graph(int vertex_count) : adjacency_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : Graph(vertex_count) {
  std::vector<Edge> list(edges.begin(), edges.end());
  for (const Edge& e : list) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(list.begin(), list.end());
  if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  build(std::move(list));
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(vertex_count, [&] {
        std::vector<Edge> list;
        for (auto [a, b] : edges) list.emplace_back(a, b);
        return list;
      }()) {}

Graph Graph::simplified(int vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    if (e.u < 0 || e.v >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
    list.push_back(e);
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  g.build(std::move(list));
  return g;
}

void Graph::build(std::vector<Edge> edges) {
  edges_ = std::move(edges);
  for (auto& nbrs : adjacency_) nbrs.clear();
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (vertex_count() > 64) throw SizeLimitError("adjacency_masks", 64, vertex_count());
  std::vector<std::uint64_t> masks(vertex_count(), 0);
  for (const Edge& e : edges_) {
    masks[e.u] |= std::uint64_t{1} << e.v;
    masks[e.v] |= std::uint64_t{1} << e.u;
  }
  return masks;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex w : g.neighbors(queue[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    blocks.push_back(queue);
  }
  return blocks;
}

int component_count(const Graph& g) { return static_cast<int>(connected_components(g).size()); }

EdgeSet bridges(const Graph& g) { return LowLink(g).bridge_edges; }

Graph remove_bridges(const Graph& g) {
  const EdgeSet b = bridges(g);
  return b.empty() ? g : delete_edges(g, b);
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  LowLink ll(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (ll.is_cut[v]) out.push_back(v);
  }
  return out;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_forest(const Graph& g) { return g.edge_count() == g.vertex_count() - component_count(g); }

bool is_2_connected(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.vertex_count() == 2) return g.edge_count() == 1;
  if (g.vertex_count() < 3) return false;
  return cut_vertices(g).empty();
}

bool is_bridgeless(const Graph& g) { return bridges(g).empty(); }

Graph delete_vertex(const Graph& g, Vertex v) {
  require_vertex(g, v);
  const Vertex vs[] = {v};
  return delete_vertices(g, vs);
}

Graph delete_vertices(const Graph& g, std::span<const Vertex> vs) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (Vertex v : vs) {
    require_vertex(g, v);
    gone[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph delete_edge(const Graph& g, Edge e) {
  require_edge(g, e);
  const Edge es[] = {e};
  return delete_edges(g, es);
}

Graph delete_edges(const Graph& g, std::span<const Edge> es) {
  std::vector<Edge> drop(es.begin(), es.end());
  for (const Edge& e : drop) require_edge(g, e);
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  std::set_difference(g.edges().begin(), g.edges().end(), drop.begin(), drop.end(),
                      std::back_inserter(kept));
  return Graph(g.vertex_count(), kept);
}

Graph contract_edge(const Graph& g, Edge e) {
  require_edge(g, e);
  const int n = g.vertex_count();
  std::vector<Vertex> image(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v != e.u && v != e.v) image[v] = next++;
  }
  image[e.u] = image[e.v] = next;
  std::vector<Edge> mapped;
  for (const Edge& f : g.edges()) mapped.emplace_back(image[f.u], image[f.v]);
  return Graph::simplified(n - 1, mapped);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  std::vector<Vertex> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    require_vertex(g, vs[i]);
    if (pos[vs[i]] != -1) throw std::invalid_argument("repeated vertex in induced_subgraph");
    pos[vs[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    if (pos[e.u] >= 0 && pos[e.v] >= 0) kept.emplace_back(pos[e.u], pos[e.v]);
  }
  return Graph(static_cast<int>(vs.size()), kept);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> all(a.edges().begin(), a.edges().end());
  const int shift = a.vertex_count();
  for (const Edge& e : b.edges()) all.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), all);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count()) {
    throw std::invalid_argument("relabel: permutation size mismatch");
  }
  std::vector<Edge> mapped;
  for (const Edge& e : g.edges()) mapped.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.vertex_count(), mapped);
}

Graph strip_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph empty_graph(int n) { return Graph(n); }

}  // namespace idforest
