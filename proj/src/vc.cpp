#include "idforest/vc.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "idforest/errors.hpp"

namespace idforest {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Kuhn's augmenting paths on the double cover: left copy of u is adjacent to
// the right copy of every neighbour of u.
struct DoubleCoverMatching {
  const Graph& g;
  std::vector<Vertex> match_left;
  std::vector<Vertex> match_right;
  std::vector<int> visit_stamp;
  int stamp = 0;

  explicit DoubleCoverMatching(const Graph& graph)
      : g(graph),
        match_left(graph.vertex_count(), -1),
        match_right(graph.vertex_count(), -1),
        visit_stamp(graph.vertex_count(), 0) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      ++stamp;
      augment(u);
    }
  }

  bool augment(Vertex u) {
    for (Vertex r : g.neighbors(u)) {
      if (visit_stamp[r] == stamp) continue;
      visit_stamp[r] = stamp;
      if (match_right[r] == -1 || augment(match_right[r])) {
        match_left[u] = r;
        match_right[r] = u;
        return true;
      }
    }
    return false;
  }
};

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g) : adj_(g.adjacency_masks()) {}

  Mask exact(Mask alive) const {
    Mask result = 0;
    for (Mask comp : components(alive)) {
      if (!has_edge(comp)) continue;
      if (max_degree(comp) <= 2) {
        result |= paths_and_cycles(comp);
      } else {
        result |= branch(comp);
      }
    }
    return result;
  }

 private:
  int degree(int v, Mask alive) const { return std::popcount(adj_[v] & alive); }

  bool has_edge(Mask alive) const {
    for (Mask rest = alive; rest; rest &= rest - 1) {
      if (adj_[std::countr_zero(rest)] & alive) return true;
    }
    return false;
  }

  int max_degree(Mask alive) const {
    int best = 0;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      best = std::max(best, degree(std::countr_zero(rest), alive));
    }
    return best;
  }

  std::vector<Mask> components(Mask alive) const {
    std::vector<Mask> out;
    while (alive) {
      Mask comp = alive & (~alive + 1);
      Mask frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask rest = frontier; rest; rest &= rest - 1) next |= adj_[std::countr_zero(rest)];
        next &= alive & ~comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      alive &= ~comp;
    }
    return out;
  }

  // Connected, max degree <= 2: a path or a cycle.
  Mask paths_and_cycles(Mask comp) const {
    int start = -1;
    for (Mask rest = comp; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (degree(v, comp) <= 1) {
        start = v;
        break;
      }
    }
    const bool cycle = start == -1;
    if (cycle) start = std::countr_zero(comp);

    std::vector<int> walk{start};
    Mask seen = bit(start);
    while (true) {
      const Mask next = adj_[walk.back()] & comp & ~seen;
      if (!next) break;
      const int w = std::countr_zero(next);
      walk.push_back(w);
      seen |= bit(w);
    }
    Mask cover = 0;
    for (std::size_t i = cycle ? 0 : 1; i < walk.size(); i += 2) cover |= bit(walk[i]);
    return cover;
  }

  // Lower bound: size of a greedy maximal matching.
  int matching_bound(Mask alive) const {
    int size = 0;
    Mask free = alive;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!(free & bit(v))) continue;
      const Mask partner = adj_[v] & free;
      if (!partner) continue;
      free &= ~(bit(v) | bit(std::countr_zero(partner)));
      ++size;
    }
    return size;
  }

  Mask branch(Mask comp) const {
    Best best{std::popcount(comp), comp};
    search(comp, 0, 0, best);
    return best.mask;
  }

  struct Best {
    int count;
    Mask mask;
  };

  void search(Mask alive, Mask taken, int count, Best& best) const {
    if (count >= best.count) return;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!(adj_[v] & alive)) alive &= ~bit(v);
    }
    if (!alive) {
      best = {count, taken};
      return;
    }
    if (count + matching_bound(alive) >= best.count) return;

    if (components(alive).size() > 1 || max_degree(alive) <= 2) {
      const Mask sub = exact(alive);
      if (count + std::popcount(sub) < best.count) best = {count + std::popcount(sub), taken | sub};
      return;
    }

    int pivot = -1;
    int pivot_degree = -1;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = degree(v, alive);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    search(alive & ~bit(pivot), taken | bit(pivot), count + 1, best);
    const Mask nbrs = adj_[pivot] & alive;
    search(alive & ~nbrs & ~bit(pivot), taken | nbrs, count + pivot_degree, best);
  }

  std::vector<Mask> adj_;
};

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

HalfIntegralLp lp_half_integral(const Graph& g) {
  const int n = g.vertex_count();
  DoubleCoverMatching m(g);

  // König: Z = vertices reachable from unmatched left copies by alternating
  // paths; the cover is (L \ Z) + (R & Z).
  std::vector<char> left_z(n, 0);
  std::vector<char> right_z(n, 0);
  std::vector<Vertex> queue;
  for (Vertex u = 0; u < n; ++u) {
    if (m.match_left[u] == -1) {
      left_z[u] = 1;
      queue.push_back(u);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex r : g.neighbors(queue[i])) {
      if (right_z[r]) continue;
      right_z[r] = 1;
      const Vertex back = m.match_right[r];
      if (back != -1 && !left_z[back]) {
        left_z[back] = 1;
        queue.push_back(back);
      }
    }
  }

  HalfIntegralLp lp;
  for (Vertex v = 0; v < n; ++v) {
    const int weight = (left_z[v] ? 0 : 1) + (right_z[v] ? 1 : 0);
    (weight == 0 ? lp.zero : weight == 1 ? lp.half : lp.one).push_back(v);
  }
  return lp;
}

KernelInstance nt_kernel(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("nt_kernel: negative budget");
  const HalfIntegralLp lp = lp_half_integral(g);

  std::vector<Vertex> kept;
  for (Vertex v : lp.half) {
    const bool isolated = std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) {
      return std::binary_search(lp.half.begin(), lp.half.end(), w);
    });
    if (!isolated) kept.push_back(v);
  }

  KernelInstance out;
  out.budget = k - static_cast<int>(lp.one.size());
  out.forced = lp.one;
  if (out.budget < 0 || static_cast<int>(kept.size()) > 2 * out.budget) {
    out.graph = Graph(2, {{0, 1}});
    out.budget = 0;
    out.origin = {-1, -1};
    out.trivial_no = true;
    return out;
  }
  out.graph = induced_subgraph(g, kept);
  out.origin = kept;
  return out;
}

VcSolution vc_exact(const Graph& g) {
  if (g.vertex_count() > kVcExactMaxVertices) {
    throw SizeLimitError("vc_exact", kVcExactMaxVertices, g.vertex_count());
  }
  const HalfIntegralLp lp = lp_half_integral(g);
  const Graph core = induced_subgraph(g, lp.half);
  const Mask all = core.vertex_count() == 64 ? ~Mask{0} : bit(core.vertex_count()) - 1;
  const Mask picked = CoverSearch(core).exact(all);

  VcSolution out;
  out.cover = lp.one;
  for (Mask rest = picked; rest; rest &= rest - 1) out.cover.push_back(lp.half[std::countr_zero(rest)]);
  out.cover = sorted(std::move(out.cover));
  out.value = static_cast<int>(out.cover.size());
  return out;
}

bool vc_decision(const Graph& g, int k) {
  if (k < 0) return false;
  const KernelInstance kernel = nt_kernel(g, k);
  if (kernel.trivial_no) return false;
  return vc_exact(kernel.graph).value <= kernel.budget;
}

}  // namespace idforest
