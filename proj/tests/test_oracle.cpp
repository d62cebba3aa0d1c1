#include "doctest.h"

#include <random>

#include "idforest/errors.hpp"
#include "idforest/oracle.hpp"
#include "test_support.hpp"

using namespace idforest;
using namespace idforest::testing;

namespace {

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph triangles(int m) {
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(3 * i, 3 * i + 1);
    edges.emplace_back(3 * i, 3 * i + 2);
    edges.emplace_back(3 * i + 1, 3 * i + 2);
  }
  return Graph(3 * m, edges);
}

const Graph kBowtie(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});

}  // namespace

TEST_CASE("frozen identification values") {
  CHECK(oracle::brute_idf(Graph(0)) == 0);
  CHECK(oracle::brute_idf(path_graph(7)) == 0);
  CHECK(oracle::brute_idf(cycle(3)) == 2);
  CHECK(oracle::brute_idf(cycle(5)) == 3);
  CHECK(oracle::brute_idf(cycle(6)) == 3);
  CHECK(oracle::brute_idf(kBowtie) == 3);
  CHECK(oracle::brute_idf(complete_graph(4)) == 3);
  CHECK(oracle::brute_idf(triangles(2)) == 4);
  CHECK_THROWS_AS(oracle::brute_idf(Graph(10)), SizeLimitError);
}

TEST_CASE("frozen vertex cover and contraction values") {
  CHECK(oracle::brute_vc(cycle(5)) == 3);
  CHECK(oracle::brute_vc(complete_graph(5)) == 4);
  CHECK_THROWS_AS(oracle::brute_vc(Graph(21)), SizeLimitError);

  CHECK(oracle::brute_ecf(cycle(5)).value == 3);
  CHECK(oracle::brute_ecf(cycle(3)).value == 1);
  CHECK(oracle::brute_ecf(path_graph(5)).value == 0);
  CHECK(oracle::brute_ecf(complete_graph(4)).value == 2);
  CHECK(oracle::brute_ecf(kBowtie).value == 2);
}

TEST_CASE("contraction witness yields a forest") {
  std::mt19937 rng(61);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_graph(rng, 0, 7);
    if (g.edge_count() > oracle::kBruteEcfMaxEdges) continue;
    const auto ecf = oracle::brute_ecf(g);
    CHECK(static_cast<int>(ecf.witness.size()) == ecf.value);
    // Contracting the witness edges identifies each component they span.
    std::vector<int> parent(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v];
      return v;
    };
    for (const Edge& e : ecf.witness) parent[find(e.u)] = find(e.v);
    std::vector<int> klass(g.vertex_count());
    std::vector<int> id(g.vertex_count(), -1);
    int classes = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (id[find(v)] < 0) id[find(v)] = classes++;
      klass[v] = id[find(v)];
    }
    CHECK(oracle::quotient_is_forest(g, klass, classes));
  }
}

TEST_CASE("identification is at most twice the contraction number") {
  std::mt19937 rng(62);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_graph(rng, 0, 7);
    if (g.edge_count() > oracle::kBruteEcfMaxEdges) continue;
    CHECK(oracle::brute_idf(g) <= 2 * oracle::brute_ecf(g).value);
  }
}

TEST_CASE("model search agrees with the deletion-contraction closure") {
  std::mt19937 rng(63);
  for (int t = 0; t < 400; ++t) {
    const Graph g = random_graph(rng, 1, 6);
    const Graph h = random_graph(rng, 1, 5);
    const auto closure = minor_closure(g);
    const bool expected = closure.count({h.vertex_count(), permutation_key(h)}) > 0;
    const auto model = oracle::brute_minor(h, g);
    CHECK(model.has_value() == expected);
    if (model) CHECK(verify_model(*model, g));
  }
}

TEST_CASE("model search on named pairs") {
  CHECK(oracle::brute_minor(complete_graph(4), cycle(8)) == std::nullopt);
  CHECK(oracle::brute_minor(cycle(3), cycle(8)).has_value());
  CHECK(oracle::brute_minor(triangles(2), kBowtie) == std::nullopt);
  CHECK(oracle::brute_minor(kBowtie, triangles(2)) == std::nullopt);
  CHECK(oracle::brute_minor(complete_graph(3), Graph(2)) == std::nullopt);
  const Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                            {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
  const auto k5 = oracle::brute_minor(complete_graph(5), petersen);
  REQUIRE(k5.has_value());
  CHECK(verify_model(*k5, petersen));
  CHECK_THROWS_AS(oracle::brute_minor(Graph(1), Graph(13)), SizeLimitError);
}

TEST_CASE("model verification rejects broken models") {
  const Graph host = path_graph(4);
  const MinorModel ok{complete_graph(2), {{0, 1}, {2, 3}}};
  CHECK(verify_model(ok, host));
  CHECK_FALSE(verify_model(MinorModel{complete_graph(2), {{0, 2}, {1, 3}}}, host));
  CHECK_FALSE(verify_model(MinorModel{complete_graph(2), {{0}, {2, 3}}}, host));
  CHECK_FALSE(verify_model(MinorModel{complete_graph(2), {{0, 1}, {1, 2}}}, host));
  CHECK_FALSE(verify_model(MinorModel{complete_graph(2), {{0, 1}}}, host));
  CHECK_FALSE(verify_model(MinorModel{complete_graph(2), {{0, 1}, {}}}, host));
}
