#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "idforest/canonical.hpp"
#include "idforest/errors.hpp"
#include "idforest/graph_io.hpp"
#include "idforest/idf_solver.hpp"
#include "idforest/minor_engine.hpp"
#include "idforest/obstructions.hpp"
#include "idforest/oracle.hpp"
#include "idforest/vc.hpp"
#include "test_support.hpp"

using namespace idforest;
using namespace idforest::testing;

namespace {

std::set<std::uint64_t> keys_of(const std::vector<Graph>& graphs) {
  std::set<std::uint64_t> out;
  for (const Graph& g : graphs) out.insert(permutation_key(g));
  return out;
}

std::set<std::string> forms_of(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const Graph& g : graphs) out.insert(canonical_form(g));
  return out;
}

// Obstructions by brute force: labeled catalog from permutation dedup, oracle
// predicate, one-step minors checked directly.
std::vector<Graph> brute_obstructions(int max_n, const ClassPredicate& in_class) {
  std::vector<Graph> out;
  for (const Graph& g : brute_catalog_up_to(max_n)) {
    if (in_class(g)) continue;
    bool minimal = true;
    for (const Graph& m : one_step_minors(g)) minimal = minimal && in_class(m);
    if (minimal) out.push_back(g);
  }
  return out;
}

Graph matching(int m) {
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph(2 * m, edges);
}

}  // namespace

TEST_CASE("enumeration counts against permutation dedup") {
  CHECK(enumerate_graphs(0).size() == 1);
  CHECK(enumerate_graphs(1).size() == 1);
  for (int n = 2; n <= 6; ++n) {
    const auto mine = enumerate_graphs(n);
    const auto brute = brute_catalog(n);
    CHECK(mine.size() == brute.size());
    CHECK(keys_of(mine) == keys_of(brute));
  }
  CHECK(enumerate_graphs(3).size() == 4);
  CHECK(enumerate_graphs(4).size() == 11);
}

TEST_CASE("enumeration counts against Burnside") {
  CHECK(burnside_count(5) == 34);
  CHECK(burnside_count(6) == 156);
  CHECK(burnside_count(7) == 1044);
  for (int n = 5; n <= 7; ++n) {
    const auto graphs = enumerate_graphs(n);
    CHECK(static_cast<long long>(graphs.size()) == burnside_count(n));
    CHECK(forms_of(graphs).size() == graphs.size());
  }
  CHECK_THROWS_AS(enumerate_graphs(11), SizeLimitError);
}

TEST_CASE("enumerated graphs are canonical and include disconnected ones") {
  int disconnected = 0;
  for_each_graph(6, [&](const Graph& g) {
    CHECK(to_graph6(g) == canonical_form(g));
    disconnected += is_connected(g) ? 0 : 1;
  });
  CHECK(disconnected == 156 - 112);
}

TEST_CASE("minor minimality examples") {
  const ClassPredicate forest = [](const Graph& g) { return is_forest(g); };
  CHECK(is_minor_minimal(complete_graph(3), forest));
  CHECK_FALSE(is_minor_minimal(gen_cycle(4), forest));
  const ClassPredicate vc1 = [](const Graph& g) { return oracle::brute_vc(g) <= 1; };
  CHECK(is_minor_minimal(matching(2), vc1));
  CHECK_FALSE(is_minor_minimal(matching(3), vc1));
}

TEST_CASE("vertex cover obstructions for k = 0, 1") {
  const auto k0 = obs_vc(0).obstructions;
  REQUIRE(k0.size() == 1);
  CHECK(brute_isomorphic(k0[0], complete_graph(2)));
  const auto k1 = obs_vc(1).obstructions;
  CHECK(keys_of(k1) == keys_of({complete_graph(3), matching(2)}));
}

TEST_CASE("vertex cover obstructions match the brute-force scan") {
  for (int k = 0; k <= 2; ++k) {
    const ClassPredicate oracle_pred = [k](const Graph& g) { return oracle::brute_vc(g) <= k; };
    const auto brute = brute_obstructions(std::min(6, 2 * k + 2), oracle_pred);
    CHECK(keys_of(obs_vc(k).obstructions) == keys_of(brute));
  }
}

TEST_CASE("vertex cover obstructions for k = 2 include three edges and C5") {
  const auto forms = forms_of(obs_vc(2).obstructions);
  CHECK(forms.count(canonical_form(matching(3))));
  CHECK(forms.count(canonical_form(gen_cycle(5))));
  CHECK(forms.count(canonical_form(complete_graph(4))));
}

TEST_CASE("identification obstructions for k = 0, 1 are the triangle") {
  for (int k = 0; k <= 1; ++k) {
    const ObstructionReport r = obs_idf(k);
    REQUIRE(r.obstructions.size() == 1);
    CHECK(brute_isomorphic(r.obstructions[0], complete_graph(3)));
    CHECK(r.provenance[0].kind == Provenance::bridgeless_vc_obstruction);
  }
}

TEST_CASE("identification obstructions with the oracle predicate") {
  for (int k = 0; k <= 1; ++k) {
    const ClassPredicate pred = [k](const Graph& g) { return oracle::brute_idf(g) <= k; };
    const auto scanned = scan_obstructions(2 * k + 4, pred);
    CHECK(forms_of(scanned) == forms_of(obs_idf(k).obstructions));
    CHECK(keys_of(brute_obstructions(std::min(6, 2 * k + 4), pred)) == keys_of(scanned));
  }
}

TEST_CASE("identification obstructions for k = 2") {
  const ObstructionReport r = obs_idf(2);
  const auto forms = forms_of(r.obstructions);
  CHECK(forms.count(canonical_form(gen_cycle(5))));
  CHECK(forms.count(canonical_form(gen_triangles(2))));
  CHECK(forms.count(canonical_form(gen_marguerite(2))));
  CHECK_FALSE(forms.count(canonical_form(gen_marguerite(3))));

  // Sampled re-check of minimality with the brute-force predicate.
  const ClassPredicate pred = [](const Graph& g) { return oracle::brute_idf(g) <= 2; };
  for (const Graph& g : r.obstructions) CHECK(is_minor_minimal(g, pred));
  std::mt19937 rng(81);
  int sampled = 0;
  for_each_graph(7, [&](const Graph& g) {
    if (rng() % 20 != 0) return;
    ++sampled;
    CHECK(is_minor_minimal(g, pred) == (forms.count(to_graph6(g)) > 0));
  });
  CHECK(sampled > 20);
}

TEST_CASE("obstruction sets are antichains") {
  for (int k = 0; k <= 2; ++k) {
    for (const ObstructionReport& r : {obs_vc(k), obs_idf(k)}) {
      for (const Graph& a : r.obstructions) {
        for (const Graph& b : r.obstructions) {
          if (a == b) continue;
          CHECK_FALSE(oracle::brute_minor(a, b).has_value());
        }
      }
    }
  }
}

TEST_CASE("the triangle is an obstruction at two consecutive budgets") {
  const auto f0 = forms_of(obs_idf(0).obstructions);
  const auto f1 = forms_of(obs_idf(1).obstructions);
  CHECK(f0.count(canonical_form(complete_graph(3))));
  CHECK(f1.count(canonical_form(complete_graph(3))));
}

TEST_CASE("structural checks pass for k <= 2") {
  for (int k = 0; k <= 2; ++k) {
    const ChecksMap checks = verify_obstructions(k, obs_vc(k), obs_idf(k));
    CHECK(checks.size() == 7);
    for (const auto& [key, result] : checks) {
      INFO(key);
      CHECK(result.pass);
    }
  }
}

TEST_CASE("structural checks report failures instead of throwing") {
  // A fabricated report with a bridge must fail the bridgeless check.
  ObstructionReport fake_idf{0, "idf", {path_graph(3)}, {}};
  const ChecksMap checks = verify_obstructions(0, obs_vc(0), fake_idf);
  CHECK_FALSE(checks.at("a_idf_obstructions_bridgeless").pass);
  CHECK_FALSE(all_pass(checks));
}

TEST_CASE("provenance search") {
  CHECK(find_provenance(complete_graph(3)).kind == Provenance::bridgeless_vc_obstruction);
  const ObstructionReport r = obs_idf(2);
  for (std::size_t i = 0; i < r.obstructions.size(); ++i) {
    const Graph& g = r.obstructions[i];
    const ProvenanceResult& p = r.provenance[i];
    CHECK(p.kind != Provenance::other);
    const int t = idf_exact(g).value - 1;
    const Graph rest = strip_isolated(delete_edges(g, p.removed));
    CHECK(is_minor_minimal(rest, [t](const Graph& h) { return vc_decision(h, t); }));
    CHECK((p.removed.empty() == (p.kind == Provenance::bridgeless_vc_obstruction)));
  }
}

TEST_CASE("spanning subgraph search") {
  CHECK(is_spanning_subgraph_of(complete_graph(3), gen_marguerite(2)));
  CHECK(is_spanning_subgraph_of(matching(2), gen_cycle(4)));
  CHECK_FALSE(is_spanning_subgraph_of(matching(3), gen_marguerite(2)));
  CHECK_FALSE(is_spanning_subgraph_of(complete_graph(4), gen_cycle(6)));
}

TEST_CASE("family minimality report") {
  const auto k1 = family_minimality(1, obs_idf(1));
  REQUIRE(k1.size() == 4);
  CHECK(k1[0].family == "cycle");
  CHECK(k1[0].minimal);
  // The 2-marguerite has identification number 3 but contains a triangle.
  CHECK(k1[2].family == "marguerite");
  CHECK(k1[2].parameter == 2);
  CHECK_FALSE(k1[2].minimal);
  const auto k2 = family_minimality(2, obs_idf(2));
  CHECK(k2[1].minimal);
  CHECK_FALSE(k2[2].minimal);
  CHECK(k2[3].parameter == 2);
  CHECK(k2[3].minimal);
}

TEST_CASE("reports do not depend on the worker count") {
  ScanOptions one;
  ScanOptions many;
  many.workers = 4;
  for (int k = 1; k <= 2; ++k) {
    CHECK(to_json(obs_idf(k, one)) == to_json(obs_idf(k, many)));
    CHECK(to_json(obs_vc(k, one)) == to_json(obs_vc(k, many)));
  }
}

TEST_CASE("checkpointed scan resumes to the same result") {
  const auto dir = std::filesystem::temp_directory_path() / "idforest-checkpoint-test";
  std::filesystem::remove_all(dir);
  const ClassPredicate pred = [](const Graph& g) { return idf_decision(g, 2); };
  ScanOptions opts;
  opts.checkpoint_dir = dir;
  opts.checkpoint_tag = "test";
  opts.checkpoint_every = 97;
  const auto full = scan_obstructions(7, pred);

  // Interrupt after the first chunk of the last level by throwing from the predicate.
  int calls = 0;
  const ClassPredicate flaky = [&](const Graph& g) {
    if (g.vertex_count() == 7 && ++calls > 700) throw std::runtime_error("interrupted");
    return pred(g);
  };
  CHECK_THROWS(scan_obstructions(7, flaky, opts));
  REQUIRE(std::filesystem::exists(dir / "progress.json"));
  {
    std::ifstream in(dir / "progress.json");
    const auto progress = nlohmann::json::parse(in);
    CHECK(progress["level"] == 7);
    CHECK(progress["next_parent"].get<int>() > 0);
  }
  const auto resumed = scan_obstructions(7, pred, opts);
  CHECK(forms_of(resumed) == forms_of(full));
  std::filesystem::remove_all(dir);
}

TEST_CASE("catalog files") {
  const auto dir = std::filesystem::temp_directory_path() / "idforest-catalog-test";
  std::filesystem::remove_all(dir);
  const ObstructionReport r = obs_idf(1);
  write_catalog(dir, r, {{"checks", nlohmann::json::object()}});
  std::ifstream g6(dir / "obs-idf-k1.g6");
  std::string line;
  std::getline(g6, line);
  CHECK(line == "Bw");
  std::ifstream js(dir / "obs-idf-k1.json");
  const auto j = nlohmann::json::parse(js);
  CHECK(j["k"] == 1);
  CHECK(j["obstructions"][0]["provenance"] == "bridgeless_vc_obstruction");
  CHECK(j.contains("checks"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(obs_vc(4), std::invalid_argument);
  CHECK_THROWS_AS(obs_idf(3), std::invalid_argument);
  CHECK_THROWS_AS(obs_idf(-1), std::invalid_argument);
}
