#include "idforest/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

#include "idforest/errors.hpp"

namespace idforest {

bool verify_model(const MinorModel& model, const Graph& host) {
  const int hn = model.pattern.vertex_count();
  if (static_cast<int>(model.branch_sets.size()) != hn) return false;
  std::vector<int> owner(host.vertex_count(), -1);
  for (int x = 0; x < hn; ++x) {
    const auto& set = model.branch_sets[x];
    if (set.empty()) return false;
    for (Vertex v : set) {
      if (!host.has_vertex(v) || owner[v] != -1) return false;
      owner[v] = x;
    }
  }
  for (int x = 0; x < hn; ++x) {
    const auto& set = model.branch_sets[x];
    std::vector<Vertex> queue{set.front()};
    std::vector<char> seen(host.vertex_count(), 0);
    seen[set.front()] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex w : host.neighbors(queue[i])) {
        if (owner[w] == x && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    if (queue.size() != set.size()) return false;
  }
  for (const Edge& e : model.pattern.edges()) {
    bool realized = false;
    for (Vertex a : model.branch_sets[e.u]) {
      for (Vertex b : host.neighbors(a)) realized = realized || owner[b] == e.v;
    }
    if (!realized) return false;
  }
  return true;
}

namespace oracle {

namespace {

using Mask = std::uint32_t;

struct UnionFind {
  std::array<int, 64> parent{};
  explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early when visit returns true.
template <typename Visit>
bool for_each_subset(int n, int k, Visit&& visit) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return false;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Restricted-growth strings of length s: every set partition exactly once.
template <typename Visit>
bool for_each_set_partition(int s, Visit&& visit) {
  std::vector<int> rgs(s, 0);
  std::vector<int> prefix_max(s, 0);
  while (true) {
    if (visit(rgs)) return true;
    int i = s - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i <= 0) return false;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < s; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

class ModelSearch {
 public:
  ModelSearch(const Graph& h, const Graph& g) : hn_(h.vertex_count()), gn_(g.vertex_count()) {
    for (const Edge& e : h.edges()) {
      hadj_[e.u] |= Mask{1} << e.v;
      hadj_[e.v] |= Mask{1} << e.u;
    }
    for (const Edge& e : g.edges()) {
      gadj_[e.u] |= Mask{1} << e.v;
      gadj_[e.v] |= Mask{1} << e.u;
    }
    order_pattern(h);
  }

  std::optional<std::vector<std::vector<Vertex>>> run() {
    if (!place(0, 0)) return std::nullopt;
    std::vector<std::vector<Vertex>> sets(hn_);
    for (int x = 0; x < hn_; ++x) {
      for (Mask rest = sets_[x]; rest; rest &= rest - 1) sets[x].push_back(std::countr_zero(rest));
    }
    return sets;
  }

 private:
  // Components largest first; BFS from a maximum-degree vertex inside each,
  // so every later vertex of a component has an earlier neighbour.
  void order_pattern(const Graph& h) {
    auto comps = connected_components(h);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& comp : comps) {
      Vertex start = comp.front();
      for (Vertex v : comp) {
        if (h.degree(v) > h.degree(start)) start = v;
      }
      std::vector<Vertex> queue{start};
      std::vector<char> seen(hn_, 0);
      seen[start] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Vertex w : h.neighbors(queue[i])) {
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
      order_.insert(order_.end(), queue.begin(), queue.end());
    }
    for (int i = 0; i < hn_; ++i) pos_[order_[i]] = i;
    for (int x = 0; x < hn_; ++x) {
      for (int t = 0; t < hn_; ++t) {
        const bool twin = t != x && (hadj_[x] & ~(Mask{1} << t)) == (hadj_[t] & ~(Mask{1} << x));
        if (twin && pos_[t] < pos_[x]) earlier_twins_[x] |= Mask{1} << t;
      }
    }
  }

  Mask host_neighbors(Mask set) const {
    Mask out = 0;
    for (Mask rest = set; rest; rest &= rest - 1) out |= gadj_[std::countr_zero(rest)];
    return out & ~set;
  }

  int later_neighbors(int z, int i) const {
    int count = 0;
    for (Mask rest = hadj_[z]; rest; rest &= rest - 1) count += pos_[std::countr_zero(rest)] > i;
    return count;
  }

  bool place(int i, Mask used) {
    if (i == hn_) return true;
    const int x = order_[i];
    const Mask all = gn_ == 32 ? ~Mask{0} : (Mask{1} << gn_) - 1;
    const Mask free = all & ~used;
    const int max_size = std::popcount(free) - (hn_ - i - 1);
    if (max_size < 1) return false;

    Mask anchor_nbrs = 0;
    bool anchored = false;
    for (Mask rest = hadj_[x]; rest; rest &= rest - 1) {
      const int y = std::countr_zero(rest);
      if (pos_[y] >= i) continue;
      const Mask cand = host_neighbors(sets_[y]) & free;
      if (!anchored || std::popcount(cand) < std::popcount(anchor_nbrs)) anchor_nbrs = cand;
      anchored = true;
    }
    const Mask roots = anchored ? anchor_nbrs : free;

    for (Mask rest = roots; rest; rest &= rest - 1) {
      const int r = std::countr_zero(rest);
      const Mask below = (Mask{1} << r) - 1;
      const Mask region = free & ~(roots & below);
      if (grow(i, x, used, Mask{1} << r, 0, region, max_size)) return true;
    }
    return false;
  }

  // Binary branching over the lowest frontier vertex: each connected set
  // inside `region` containing `set` is reached exactly once.
  bool grow(int i, int x, Mask used, Mask set, Mask excluded, Mask region, int max_size) {
    const Mask frontier = host_neighbors(set) & region & ~excluded;
    if (!frontier || std::popcount(set) >= max_size) return accept(i, x, used, set);
    const Mask v = frontier & (~frontier + 1);
    if (grow(i, x, used, set, excluded | v, region, max_size)) return true;
    return grow(i, x, used, set | v, excluded, region, max_size);
  }

  bool accept(int i, int x, Mask used, Mask set) {
    for (Mask rest = hadj_[x]; rest; rest &= rest - 1) {
      const int y = std::countr_zero(rest);
      if (pos_[y] < i && !(host_neighbors(sets_[y]) & set)) return false;
    }
    for (Mask rest = earlier_twins_[x]; rest; rest &= rest - 1) {
      const int t = std::countr_zero(rest);
      if (std::countr_zero(sets_[t]) > std::countr_zero(set)) return false;
    }
    sets_[x] = set;
    const Mask now_used = used | set;
    for (int j = 0; j <= i; ++j) {
      const int z = order_[j];
      const int need = later_neighbors(z, i);
      if (need > 0 && std::popcount(host_neighbors(sets_[z]) & ~now_used) < need) {
        sets_[x] = 0;
        return false;
      }
    }
    if (place(i + 1, now_used)) return true;
    sets_[x] = 0;
    return false;
  }

  int hn_;
  int gn_;
  std::array<Mask, 32> hadj_{};
  std::array<Mask, 32> gadj_{};
  std::array<Mask, 32> earlier_twins_{};
  std::array<Mask, 32> sets_{};
  std::array<int, 32> pos_{};
  std::vector<int> order_;
};

}  // namespace

bool quotient_is_forest(const Graph& g, const std::vector<int>& klass, int classes) {
  std::vector<char> joined(static_cast<std::size_t>(classes) * classes, 0);
  UnionFind uf(classes);
  for (const Edge& e : g.edges()) {
    int a = klass[e.u];
    int b = klass[e.v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    char& seen = joined[static_cast<std::size_t>(a) * classes + b];
    if (seen) continue;
    seen = 1;
    if (!uf.unite(a, b)) return false;
  }
  return true;
}

int brute_idf(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kBruteIdfMaxVertices) throw SizeLimitError("brute_idf", kBruteIdfMaxVertices, n);

  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (quotient_is_forest(g, identity, n)) return 0;

  std::vector<int> klass(n);
  for (int size = 1; size <= n; ++size) {
    const bool hit = for_each_subset(n, size, [&](const std::vector<int>& chosen) {
      std::vector<char> in_x(n, 0);
      for (int v : chosen) in_x[v] = 1;
      int next = 0;
      for (int v = 0; v < n; ++v) {
        if (!in_x[v]) klass[v] = next++;
      }
      const int base = next;
      return for_each_set_partition(size, [&](const std::vector<int>& rgs) {
        int blocks = 0;
        for (int i = 0; i < size; ++i) {
          klass[chosen[i]] = base + rgs[i];
          blocks = std::max(blocks, rgs[i] + 1);
        }
        return quotient_is_forest(g, klass, base + blocks);
      });
    });
    if (hit) return size;
  }
  return n;
}

int brute_vc(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kBruteVcMaxVertices) throw SizeLimitError("brute_vc", kBruteVcMaxVertices, n);
  for (int size = 0; size <= n; ++size) {
    const bool hit = for_each_subset(n, size, [&](const std::vector<int>& chosen) {
      Mask set = 0;
      for (int v : chosen) set |= Mask{1} << v;
      return std::all_of(g.edges().begin(), g.edges().end(),
                         [&](const Edge& e) { return ((set >> e.u) | (set >> e.v)) & 1u; });
    });
    if (hit) return size;
  }
  return n;
}

EcfValue brute_ecf(const Graph& g) {
  const int m = g.edge_count();
  if (m > kBruteEcfMaxEdges) throw SizeLimitError("brute_ecf", kBruteEcfMaxEdges, m);
  const int n = g.vertex_count();
  EcfValue out;
  std::vector<int> klass(n);
  for (int size = 0; size <= m; ++size) {
    const bool hit = for_each_subset(m, size, [&](const std::vector<int>& chosen) {
      std::vector<int> parent(n);
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      for (int idx : chosen) parent[find(g.edges()[idx].u)] = find(g.edges()[idx].v);
      std::vector<int> id(n, -1);
      int classes = 0;
      for (int v = 0; v < n; ++v) {
        const int root = find(v);
        if (id[root] == -1) id[root] = classes++;
        klass[v] = id[root];
      }
      if (!quotient_is_forest(g, klass, classes)) return false;
      out.value = size;
      out.witness.clear();
      for (int idx : chosen) out.witness.push_back(g.edges()[idx]);
      return true;
    });
    if (hit) return out;
  }
  return out;
}

std::optional<MinorModel> brute_minor(const Graph& h, const Graph& g) {
  if (h.vertex_count() > g.vertex_count()) return std::nullopt;
  if (g.vertex_count() > kBruteMinorMaxVertices) {
    throw SizeLimitError("brute_minor", kBruteMinorMaxVertices, g.vertex_count());
  }
  return find_minor_model(h, g);
}

}  // namespace oracle

std::optional<MinorModel> find_minor_model(const Graph& h, const Graph& g) {
  if (g.vertex_count() > kModelSearchMaxVertices) {
    throw SizeLimitError("find_minor_model", kModelSearchMaxVertices, g.vertex_count());
  }
  if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count()) return std::nullopt;
  auto sets = oracle::ModelSearch(h, g).run();
  if (!sets) return std::nullopt;
  return MinorModel{h, std::move(*sets)};
}

}  // namespace idforest
