#include "idforest/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "idforest/errors.hpp"
#include "idforest/graph_io.hpp"

namespace idforest {

namespace {

constexpr int kMax = kCanonicalMaxVertices;
using Colors = std::array<int, kMax>;
using Certificate = std::array<std::uint32_t, kMax>;
using Perm = std::array<Vertex, kMax>;

int rank_signatures(int n, std::array<std::vector<int>, kMax>& sig, Colors& colors) {
  std::array<int, kMax> order{};
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.begin() + n, [&](int a, int b) { return sig[a] < sig[b]; });
  int rank = -1;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++rank;
    colors[order[i]] = rank;
  }
  return rank + 1;
}

class Labeler {
 public:
  explicit Labeler(const Graph& g) : n_(g.vertex_count()) {
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= 1u << e.v;
      adj_[e.v] |= 1u << e.u;
    }
  }

  CanonicalLabeling run() {
    Colors colors{};
    search(colors, 0);
    CanonicalLabeling out;
    out.position.assign(best_pos_.begin(), best_pos_.begin() + n_);
    return out;
  }

 private:
  // Splits colour classes by neighbour-colour counts until stable. Signatures
  // start with the old colour, so the class order is preserved.
  int refine(Colors& colors) const {
    int classes = 0;
    for (int v = 0; v < n_; ++v) classes = std::max(classes, colors[v] + 1);
    std::array<std::vector<int>, kMax> sig;
    while (true) {
      for (int v = 0; v < n_; ++v) {
        sig[v].assign(classes + 1, 0);
        sig[v][0] = colors[v];
        for (int w = 0; w < n_; ++w) {
          if (adj_[v] >> w & 1u) ++sig[v][colors[w] + 1];
        }
      }
      const int next = rank_signatures(n_, sig, colors);
      if (next == classes) return classes;
      classes = next;
    }
  }

  Colors individualize(const Colors& colors, Vertex u) const {
    std::array<std::vector<int>, kMax> sig;
    for (int v = 0; v < n_; ++v) {
      sig[v] = {colors[v], (colors[v] == colors[u] && v != u) ? 1 : 0};
    }
    Colors out{};
    rank_signatures(n_, sig, out);
    return out;
  }

  bool twins(Vertex a, Vertex b) const {
    return (adj_[a] & ~(1u << b)) == (adj_[b] & ~(1u << a));
  }

  // Orbit representative of v under the discovered automorphisms that fix
  // every vertex of the current prefix.
  void stabilizer_orbits(const std::array<Vertex, kMax>& prefix, int depth,
                         std::array<int, kMax>& orbit) const {
    for (int v = 0; v < n_; ++v) orbit[v] = v;
    auto find = [&](int v) {
      while (orbit[v] != v) v = orbit[v] = orbit[orbit[v]];
      return v;
    };
    for (const Perm& gamma : automorphisms_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = gamma[prefix[i]] == prefix[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(gamma[v]);
        if (a != b) orbit[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) orbit[v] = find(v);
  }

  void leaf(const Colors& colors) {
    Certificate cert{};
    std::array<Vertex, kMax> at{};
    for (int v = 0; v < n_; ++v) at[colors[v]] = v;
    for (int i = 0; i < n_; ++i) {
      std::uint32_t row = 0;
      for (int w = 0; w < n_; ++w) {
        if (adj_[at[i]] >> w & 1u) row |= 1u << (n_ - 1 - colors[w]);
      }
      cert[i] = row;
    }
    if (!have_best_ || cert > best_cert_) {
      have_best_ = true;
      best_cert_ = cert;
      best_pos_ = colors;
      return;
    }
    if (cert == best_cert_) {
      std::array<Vertex, kMax> best_at{};
      for (int v = 0; v < n_; ++v) best_at[best_pos_[v]] = v;
      Perm gamma{};
      bool identity = true;
      for (int v = 0; v < n_; ++v) {
        gamma[v] = best_at[colors[v]];
        identity = identity && gamma[v] == v;
      }
      if (!identity) automorphisms_.push_back(gamma);
    }
  }

  void search(Colors colors, int depth) {
    const int classes = refine(colors);
    if (classes == n_) {
      leaf(colors);
      return;
    }
    std::array<int, kMax> size{};
    for (int v = 0; v < n_; ++v) ++size[colors[v]];
    int target = 0;
    while (size[target] < 2) ++target;

    std::array<Vertex, kMax> explored{};
    int explored_count = 0;
    std::array<int, kMax> orbit{};
    for (Vertex u = 0; u < n_; ++u) {
      if (colors[u] != target) continue;
      bool skip = false;
      for (int i = 0; i < explored_count && !skip; ++i) skip = twins(u, explored[i]);
      if (!skip && !automorphisms_.empty() && explored_count > 0) {
        stabilizer_orbits(prefix_, depth, orbit);
        for (int i = 0; i < explored_count && !skip; ++i) skip = orbit[u] == orbit[explored[i]];
      }
      if (skip) continue;
      explored[explored_count++] = u;
      prefix_[depth] = u;
      search(individualize(colors, u), depth + 1);
    }
  }

  int n_;
  std::array<std::uint32_t, kMax> adj_{};
  std::array<Vertex, kMax> prefix_{};
  std::vector<Perm> automorphisms_;
  bool have_best_ = false;
  Certificate best_cert_{};
  Colors best_pos_{};
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.vertex_count() > kMax) throw SizeLimitError("canonical_form", kMax, g.vertex_count());
  CanonicalLabeling out;
  if (g.vertex_count() == 0) {
    out.form = to_graph6(g);
    return out;
  }
  out = Labeler(g).run();
  out.form = to_graph6(relabel(g, out.position));
  return out;
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  return relabel(g, lab.position);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace idforest
