#include "idforest/minor_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "idforest/errors.hpp"

namespace idforest {

namespace {

using Mask = std::uint32_t;

void require_at_least(const char* what, int value, int minimum) {
  if (value < minimum) {
    throw std::invalid_argument(std::string(what) + ": parameter must be at least " +
                                std::to_string(minimum));
  }
}

void guard(const char* what, const Graph& g, int limit) {
  if (g.vertex_count() > limit) throw SizeLimitError(what, limit, g.vertex_count());
}

std::vector<Mask> masks_of(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

Mask reach_within(const std::vector<Mask>& adj, Mask seeds, Mask allowed) {
  Mask seen = seeds & allowed;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask rest = frontier; rest; rest &= rest - 1) next |= adj[std::countr_zero(rest)];
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

class LongestCycleSearch {
 public:
  explicit LongestCycleSearch(const Graph& g) : n_(g.vertex_count()), adj_(masks_of(g)) {}

  std::vector<Vertex> run() {
    for (int s = 0; s < n_ && static_cast<int>(best_.size()) < n_; ++s) {
      if (n_ - s <= static_cast<int>(best_.size())) break;
      start_ = s;
      path_ = {s};
      extend(Mask{1} << s);
    }
    return best_;
  }

 private:
  void extend(Mask visited) {
    const int cur = path_.back();
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && (adj_[cur] >> start_ & 1u) && len > static_cast<int>(best_.size())) best_ = path_;
    if (static_cast<int>(best_.size()) == n_) return;

    const Mask above = ~((Mask{2} << start_) - 1);
    const Mask allowed = above & ~visited;
    const Mask reachable = reach_within(adj_, adj_[cur], allowed);
    if (len + std::popcount(reachable) <= static_cast<int>(best_.size())) return;
    for (Mask rest = adj_[cur] & allowed; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      path_.push_back(w);
      extend(visited | Mask{1} << w);
      path_.pop_back();
      if (static_cast<int>(best_.size()) == n_) return;
    }
  }

  int n_;
  std::vector<Mask> adj_;
  int start_ = 0;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
};

class PackingSearch {
 public:
  explicit PackingSearch(const Graph& g) : n_(g.vertex_count()), adj_(masks_of(g)) {}

  int value(Mask alive) {
    alive = prune(alive);
    if (!alive) return 0;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    const int v = branch_vertex(alive);
    int best = value(alive & ~(Mask{1} << v));
    for (const auto& cycle : induced_cycles_through(v, alive)) {
      Mask used = 0;
      for (Vertex x : cycle) used |= Mask{1} << x;
      best = std::max(best, 1 + value(alive & ~used));
    }
    memo_.emplace(alive, best);
    return best;
  }

  std::vector<std::vector<Vertex>> cycles(Mask alive) {
    std::vector<std::vector<Vertex>> out;
    while (true) {
      alive = prune(alive);
      const int target = value(alive);
      if (target == 0) return out;
      const int v = branch_vertex(alive);
      bool took = false;
      for (const auto& cycle : induced_cycles_through(v, alive)) {
        Mask used = 0;
        for (Vertex x : cycle) used |= Mask{1} << x;
        if (1 + value(alive & ~used) == target) {
          out.push_back(cycle);
          alive &= ~used;
          took = true;
          break;
        }
      }
      if (!took) alive &= ~(Mask{1} << v);
    }
  }

 private:
  // Vertices of degree at most one lie on no cycle.
  Mask prune(Mask alive) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Mask rest = alive; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (std::popcount(adj_[v] & alive) <= 1) {
          alive &= ~(Mask{1} << v);
          changed = true;
        }
      }
    }
    return alive;
  }

  // A minimum-degree vertex on a shortest cycle.
  int branch_vertex(Mask alive) const {
    int best_len = n_ + 1;
    Mask on_best = 0;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      const int s = std::countr_zero(rest);
      const int len = shortest_cycle_through(s, alive);
      if (len < best_len) {
        best_len = len;
        on_best = 0;
      }
      if (len == best_len) on_best |= Mask{1} << s;
    }
    int pick = std::countr_zero(on_best);
    for (Mask rest = on_best; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (std::popcount(adj_[v] & alive) < std::popcount(adj_[pick] & alive)) pick = v;
    }
    return pick;
  }

  int shortest_cycle_through(int s, Mask alive) const {
    std::vector<int> dist(n_, -1), root(n_, -1);
    std::vector<int> queue;
    dist[s] = 0;
    for (Mask rest = adj_[s] & alive; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      dist[w] = 1;
      root[w] = w;
      queue.push_back(w);
    }
    int best = n_ + 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int x = queue[i];
      for (Mask rest = adj_[x] & alive; rest; rest &= rest - 1) {
        const int y = std::countr_zero(rest);
        if (y == s) continue;
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          root[y] = root[x];
          queue.push_back(y);
        } else if (root[y] != root[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
    return best;
  }

  std::vector<std::vector<Vertex>> induced_cycles_through(int v, Mask alive) const {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> path{v};
    walk(path, alive, Mask{1} << v, out);
    return out;
  }

  void walk(std::vector<Vertex>& path, Mask alive, Mask on_path,
            std::vector<std::vector<Vertex>>& out) const {
    const int v = path.front();
    const int cur = path.back();
    // Vertices adjacent to an inner path vertex other than cur would form a chord.
    Mask blocked = 0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) blocked |= adj_[path[i]];
    for (Mask rest = adj_[cur] & alive & ~on_path & ~blocked; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      path.push_back(w);
      if (path.size() >= 3 && (adj_[w] >> v & 1u)) {
        if (path[1] < w) out.push_back(path);
      } else {
        walk(path, alive, on_path | Mask{1} << w, out);
      }
      path.pop_back();
    }
  }

  int n_;
  std::vector<Mask> adj_;
  std::unordered_map<Mask, int> memo_;
};

Mask all_vertices(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

bool forest_avoiding(const Graph& g, Mask removed) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    if ((removed >> e.u & 1u) || (removed >> e.v & 1u)) continue;
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

MinorModel packing_model(const std::vector<std::vector<Vertex>>& cycles, int k) {
  MinorModel model{gen_triangles(k), {}};
  for (int i = 0; i < k; ++i) {
    const auto& c = cycles[i];
    model.branch_sets.push_back({c[0]});
    model.branch_sets.push_back({c[1]});
    std::vector<Vertex> rest(c.begin() + 2, c.end());
    std::sort(rest.begin(), rest.end());
    model.branch_sets.push_back(std::move(rest));
  }
  return model;
}

MinorModel cycle_model(const std::vector<Vertex>& cycle, int k) {
  MinorModel model{gen_cycle(k), {}};
  for (int i = 0; i + 1 < k; ++i) model.branch_sets.push_back({cycle[i]});
  std::vector<Vertex> rest(cycle.begin() + (k - 1), cycle.end());
  std::sort(rest.begin(), rest.end());
  model.branch_sets.push_back(std::move(rest));
  return model;
}

// Identification set from an exact feedback vertex set X of the bridgeless
// core: X, the internal nodes of every tree of core - X trimmed down to the
// neighbourhood of a component of core[X], and the endpoints of forest edges
// left outside all trimmed trees.
DichotomyOutcome identification_set(const Graph& g) {
  const Graph core = remove_bridges(g);
  const int n = core.vertex_count();
  std::vector<char> chosen(n, 0);
  for (Vertex x : min_feedback_vertex_set(core)) chosen[x] = 1;
  const std::vector<char> in_x = chosen;

  std::vector<Edge> forest_edges;
  for (const Edge& e : core.edges()) {
    if (!in_x[e.u] && !in_x[e.v]) forest_edges.push_back(e);
  }
  const Graph forest(n, forest_edges);
  std::vector<int> tree_of(n, -1);
  const auto trees = connected_components(forest);
  for (std::size_t t = 0; t < trees.size(); ++t) {
    for (Vertex v : trees[t]) tree_of[v] = static_cast<int>(t);
  }

  std::vector<Vertex> xs;
  for (Vertex v = 0; v < n; ++v) {
    if (in_x[v]) xs.push_back(v);
  }
  const Graph x_graph = induced_subgraph(core, xs);

  std::vector<char> trimmed_edge(forest.edge_count(), 0);
  auto edge_index = [&](Vertex a, Vertex b) {
    const Edge e(a, b);
    return std::lower_bound(forest.edges().begin(), forest.edges().end(), e) - forest.edges().begin();
  };

  for (const auto& comp_local : connected_components(x_graph)) {
    std::vector<char> touches(n, 0);
    for (Vertex local : comp_local) {
      for (Vertex w : core.neighbors(xs[local])) {
        if (!in_x[w]) touches[w] = 1;
      }
    }
    std::vector<char> tree_seen(trees.size(), 0);
    for (Vertex w = 0; w < n; ++w) {
      if (!touches[w] || tree_seen[tree_of[w]]) continue;
      const auto& tree = trees[tree_of[w]];
      tree_seen[tree_of[w]] = 1;

      std::vector<char> alive(n, 0);
      std::vector<int> deg(n, 0);
      for (Vertex v : tree) {
        alive[v] = 1;
        deg[v] = forest.degree(v);
      }
      std::vector<Vertex> leaves;
      for (Vertex v : tree) {
        if (deg[v] <= 1 && !touches[v]) leaves.push_back(v);
      }
      while (!leaves.empty()) {
        const Vertex v = leaves.back();
        leaves.pop_back();
        if (!alive[v]) continue;
        alive[v] = 0;
        for (Vertex u : forest.neighbors(v)) {
          if (alive[u] && --deg[u] <= 1 && !touches[u]) leaves.push_back(u);
        }
      }
      for (Vertex v : tree) {
        if (!alive[v]) continue;
        if (deg[v] >= 2) chosen[v] = 1;
        for (Vertex u : forest.neighbors(v)) {
          if (alive[u]) trimmed_edge[edge_index(v, u)] = 1;
        }
      }
    }
  }

  for (std::size_t i = 0; i < forest_edges.size(); ++i) {
    if (!trimmed_edge[i]) {
      chosen[forest.edges()[i].u] = 1;
      chosen[forest.edges()[i].v] = 1;
    }
  }

  DichotomyOutcome outcome;
  for (const Edge& e : core.edges()) {
    if (!chosen[e.u] && !chosen[e.v]) {
      chosen[e.u] = 1;
      ++outcome.repaired;
    }
  }

  std::vector<std::vector<Vertex>> blocks;
  for (const auto& comp : connected_components(core)) {
    std::vector<Vertex> block;
    for (Vertex v : comp) {
      if (chosen[v]) block.push_back(v);
    }
    if (block.size() >= 2) blocks.push_back(std::move(block));
  }
  outcome.result = normalize_partition(VertexPartition(std::move(blocks)));
  return outcome;
}

}  // namespace

Graph gen_cycle(int n) {
  require_at_least("gen_cycle", n, 3);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph gen_triangles(int m) {
  require_at_least("gen_triangles", m, 1);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(3 * i, 3 * i + 1);
    edges.emplace_back(3 * i, 3 * i + 2);
    edges.emplace_back(3 * i + 1, 3 * i + 2);
  }
  return Graph(3 * m, edges);
}

Graph gen_marguerite(int m) {
  require_at_least("gen_marguerite", m, 1);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(0, 2 * i + 1);
    edges.emplace_back(0, 2 * i + 2);
    edges.emplace_back(2 * i + 1, 2 * i + 2);
  }
  return Graph(2 * m + 1, edges);
}

Graph gen_antichain_h(int k) {
  require_at_least("gen_antichain_h", k, 1);
  const int len = 3 * k;
  std::vector<Edge> edges;
  for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
  for (int i = 1; i <= 3; ++i) {
    for (int j = i; j <= len; j += 3) edges.emplace_back(len + i - 1, j - 1);
  }
  return Graph(len + 3, edges);
}

std::vector<Vertex> longest_cycle(const Graph& g) {
  guard("longest_cycle", g, kDetectorMaxVertices);
  return LongestCycleSearch(g).run();
}

int circumference(const Graph& g) { return static_cast<int>(longest_cycle(g).size()); }

std::vector<std::vector<Vertex>> cycle_packing(const Graph& g) {
  guard("cycle_packing", g, kDetectorMaxVertices);
  return PackingSearch(g).cycles(all_vertices(g.vertex_count()));
}

int max_cycle_packing(const Graph& g) {
  guard("max_cycle_packing", g, kDetectorMaxVertices);
  return PackingSearch(g).value(all_vertices(g.vertex_count()));
}

int max_marguerite(const Graph& g) {
  guard("max_marguerite", g, kMargueriteMaxVertices);
  int m = 0;
  while (2 * (m + 1) + 1 <= g.vertex_count() && find_minor_model(gen_marguerite(m + 1), g)) ++m;
  return m;
}

std::vector<Vertex> min_feedback_vertex_set(const Graph& g) {
  guard("min_feedback_vertex_set", g, kDetectorMaxVertices);
  const int n = g.vertex_count();
  for (int size = 0; size <= n; ++size) {
    if (size == 0) {
      if (forest_avoiding(g, 0)) return {};
      continue;
    }
    // Gosper's hack over n-bit masks of the given popcount.
    Mask set = (Mask{1} << size) - 1;
    const Mask limit = Mask{1} << n;
    while (set < limit) {
      if (forest_avoiding(g, set)) {
        std::vector<Vertex> out;
        for (Mask rest = set; rest; rest &= rest - 1) out.push_back(std::countr_zero(rest));
        return out;
      }
      const Mask low = set & (~set + 1);
      const Mask ripple = set + low;
      set = (((ripple ^ set) >> 2) / low) | ripple;
    }
  }
  return {};
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::cycle:
      return "cycle";
    case Family::triangles:
      return "triangles";
    case Family::marguerite:
      return "marguerite";
  }
  return "";
}

Graph family_graph(Family f, int k) {
  switch (f) {
    case Family::cycle:
      return gen_cycle(k);
    case Family::triangles:
      return gen_triangles(k);
    case Family::marguerite:
      return gen_marguerite(k);
  }
  throw std::invalid_argument("family_graph: unknown family");
}

DichotomyOutcome dichotomy(const Graph& g, int k) {
  require_at_least("dichotomy", k, 1);
  guard("dichotomy", g, kDetectorMaxVertices);

  const auto packing = cycle_packing(g);
  if (static_cast<int>(packing.size()) >= k) {
    return {FamilyWitness{Family::triangles, k, packing_model(packing, k)}};
  }
  if (k >= 3) {
    const auto cycle = longest_cycle(g);
    if (static_cast<int>(cycle.size()) >= k) return {FamilyWitness{Family::cycle, k, cycle_model(cycle, k)}};
  }
  if (auto model = find_minor_model(gen_marguerite(k), g)) {
    return {FamilyWitness{Family::marguerite, k, std::move(*model)}};
  }
  return identification_set(g);
}

bool validate_outcome(const DichotomyOutcome& outcome, const Graph& g) {
  if (outcome.is_witness()) {
    const auto& w = outcome.witness();
    return w.model.pattern == family_graph(w.family, w.k) && verify_model(w.model, g);
  }
  try {
    return is_id_forest_partition(g, outcome.id_set());
  } catch (const std::exception&) {
    return false;
  }
}

nlohmann::json to_json(const DichotomyOutcome& outcome) {
  if (outcome.is_witness()) {
    const auto& w = outcome.witness();
    return {{"family", family_name(w.family)}, {"k", w.k}, {"branch_sets", w.model.branch_sets}};
  }
  return {{"id_set", outcome.id_set().blocks()}};
}

}  // namespace idforest
