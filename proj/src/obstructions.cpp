#include "idforest/obstructions.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "idforest/canonical.hpp"
#include "idforest/errors.hpp"
#include "idforest/graph_io.hpp"
#include "idforest/idf_solver.hpp"
#include "idforest/minor_engine.hpp"
#include "idforest/oracle.hpp"
#include "idforest/vc.hpp"

namespace idforest {

namespace {

template <typename Visit>
void for_each_combination(int n, int k, Visit&& visit) {
  if (k > n) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class MemoPredicate {
 public:
  explicit MemoPredicate(const ClassPredicate& inner) : inner_(inner) {}

  bool operator()(const Graph& g) {
    if (g.vertex_count() > kCanonicalMaxVertices) return inner_(g);
    std::string key = canonical_form(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool value = inner_(g);
    memo_.emplace(std::move(key), value);
    return value;
  }

 private:
  const ClassPredicate& inner_;
  std::unordered_map<std::string, bool> memo_;
};

bool minimal_with(const Graph& g, MemoPredicate& memo, const ClassPredicate& in_class) {
  if (in_class(g)) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!memo(delete_vertex(g, v))) return false;
  }
  for (const Edge& e : g.edges()) {
    if (!memo(delete_edge(g, e))) return false;
  }
  for (const Edge& e : g.edges()) {
    if (!memo(contract_edge(g, e))) return false;
  }
  return true;
}

struct Progress {
  int level = 0;
  std::size_t next_parent = 0;
  std::vector<std::string> found;
};

std::filesystem::path level_file(const std::filesystem::path& dir, int n) {
  return dir / ("level-" + std::to_string(n) + ".g6");
}

void save_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    for (const auto& line : lines) out << line << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::vector<std::string> load_lines(const std::filesystem::path& path) {
  std::vector<std::string> lines;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

void save_progress(const ScanOptions& options, int max_n, const Progress& p) {
  nlohmann::json j = {{"tag", options.checkpoint_tag},
                      {"max_n", max_n},
                      {"level", p.level},
                      {"next_parent", p.next_parent},
                      {"found", p.found}};
  const auto path = options.checkpoint_dir / "progress.json";
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<Progress> load_progress(const ScanOptions& options, int max_n) {
  const auto path = options.checkpoint_dir / "progress.json";
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || j.value("tag", "") != options.checkpoint_tag || j.value("max_n", -1) != max_n) {
    return std::nullopt;
  }
  Progress p;
  p.level = j.at("level").get<int>();
  p.next_parent = j.at("next_parent").get<std::size_t>();
  p.found = j.at("found").get<std::vector<std::string>>();
  if (p.level > 1 && !std::filesystem::exists(level_file(options.checkpoint_dir, p.level - 1))) {
    return std::nullopt;
  }
  return p;
}

class SubgraphSearch {
 public:
  SubgraphSearch(const Graph& h, const Graph& g) : h_(h), g_(g) {
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
      if (h.degree(v) > 0) order_.push_back(v);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    image_.assign(h.vertex_count(), -1);
    used_.assign(g.vertex_count(), 0);
  }

  bool run() { return h_.vertex_count() <= g_.vertex_count() && place(0); }

 private:
  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    const Vertex x = order_[i];
    for (Vertex y = 0; y < g_.vertex_count(); ++y) {
      if (used_[y] || g_.degree(y) < h_.degree(x)) continue;
      bool fits = true;
      for (Vertex nb : h_.neighbors(x)) {
        if (image_[nb] >= 0 && !g_.has_edge(y, image_[nb])) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      image_[x] = y;
      used_[y] = 1;
      if (place(i + 1)) return true;
      image_[x] = -1;
      used_[y] = 0;
    }
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

}  // namespace

std::vector<Graph> canonical_children(const Graph& parent) {
  const int pn = parent.vertex_count();
  const int n = pn + 1;
  if (n > kCanonicalMaxVertices) throw SizeLimitError("canonical_children", kCanonicalMaxVertices, n);
  const std::string parent_form = canonical_form(parent);

  int parent_min = n;
  for (Vertex v = 0; v < pn; ++v) parent_min = std::min(parent_min, parent.degree(v));
  const int max_size = std::min(pn, parent_min + 1);

  std::set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> out;
  std::vector<Edge> edges(parent.edges().begin(), parent.edges().end());
  const std::size_t base = edges.size();
  for (int size = 0; size <= max_size; ++size) {
    for_each_combination(pn, size, [&](const std::vector<int>& s) {
      std::vector<int> deg(n);
      for (Vertex v = 0; v < pn; ++v) deg[v] = parent.degree(v);
      for (int v : s) ++deg[v];
      deg[pn] = size;
      const int min_deg = *std::min_element(deg.begin(), deg.end());
      if (size != min_deg) return;

      edges.resize(base);
      for (int v : s) edges.emplace_back(v, pn);
      const Graph child(n, edges);
      CanonicalLabeling lab = canonical_labeling(child);
      if (seen.count(lab.form)) return;

      Vertex deletion = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (deg[v] == min_deg && (deletion < 0 || lab.position[v] > lab.position[deletion])) deletion = v;
      }
      if (deletion != pn && canonical_form(delete_vertex(child, deletion)) != parent_form) return;

      seen.insert(lab.form);
      out.emplace_back(lab.form, relabel(child, lab.position));
    });
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> graphs;
  graphs.reserve(out.size());
  for (auto& [form, g] : out) graphs.push_back(std::move(g));
  return graphs;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_graph: negative order");
  if (n > kEnumerateMaxVertices) throw SizeLimitError("for_each_graph", kEnumerateMaxVertices, n);
  std::vector<Graph> level{Graph(0)};
  for (int order = 1; order <= n; ++order) {
    if (order == n) {
      for (const Graph& parent : level) {
        for (const Graph& child : canonical_children(parent)) visit(child);
      }
      return;
    }
    std::vector<Graph> next;
    for (const Graph& parent : level) {
      for (Graph& child : canonical_children(parent)) next.push_back(std::move(child));
    }
    level = std::move(next);
  }
  for (const Graph& g : level) visit(g);
}

std::vector<Graph> enumerate_graphs(int n) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> one_step_minors(const Graph& g) {
  std::vector<Graph> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(delete_vertex(g, v));
  for (const Edge& e : g.edges()) out.push_back(delete_edge(g, e));
  for (const Edge& e : g.edges()) out.push_back(contract_edge(g, e));
  return out;
}

bool is_minor_minimal(const Graph& g, const ClassPredicate& in_class) {
  if (in_class(g)) return false;
  for (const Graph& m : one_step_minors(g)) {
    if (!in_class(m)) return false;
  }
  return true;
}

std::vector<Graph> scan_obstructions(int max_n, const ClassPredicate& in_class,
                                     const ScanOptions& options) {
  if (max_n > kEnumerateMaxVertices) throw SizeLimitError("scan_obstructions", kEnumerateMaxVertices, max_n);
  const int workers = std::max(1, options.workers);
  const bool checkpointing = !options.checkpoint_dir.empty();
  auto report = [&](const std::string& msg) {
    if (options.progress) options.progress(msg);
  };

  std::vector<MemoPredicate> memos;
  memos.reserve(workers);
  for (int w = 0; w < workers; ++w) memos.emplace_back(in_class);

  Progress progress;
  std::vector<std::string> parents{to_graph6(Graph(0))};
  if (!MemoPredicate(in_class)(Graph(0))) progress.found.push_back(to_graph6(Graph(0)));
  progress.level = 1;
  if (checkpointing) {
    std::filesystem::create_directories(options.checkpoint_dir);
    if (auto saved = load_progress(options, max_n)) {
      progress = std::move(*saved);
      if (progress.level > 1) parents = load_lines(level_file(options.checkpoint_dir, progress.level - 1));
      report("resuming at order " + std::to_string(progress.level) + ", parent " +
             std::to_string(progress.next_parent));
    }
  }

  for (int n = progress.level; n <= max_n; ++n) {
    const bool last = n == max_n;
    std::vector<std::vector<std::string>> kids(parents.size());
    const std::size_t chunk = checkpointing ? static_cast<std::size_t>(std::max(1, options.checkpoint_every))
                                            : parents.size();
    std::size_t begin = progress.level == n ? progress.next_parent : 0;
    if (begin > 0 && !last) {
      // Children of already finished parents are needed for the next level.
      for (std::size_t i = 0; i < begin; ++i) {
        for (const Graph& child : canonical_children(from_graph6(parents[i]))) kids[i].push_back(to_graph6(child));
      }
    }
    while (begin < parents.size()) {
      const std::size_t end = std::min(parents.size(), begin + chunk);
      std::atomic<std::size_t> cursor{begin};
      std::vector<std::vector<std::string>> found(workers);
      auto work = [&](int w) {
        for (std::size_t i = cursor++; i < end; i = cursor++) {
          for (const Graph& child : canonical_children(from_graph6(parents[i]))) {
            std::string form = to_graph6(child);
            if (minimal_with(child, memos[w], in_class)) found[w].push_back(form);
            if (!last) kids[i].push_back(std::move(form));
          }
        }
      };
      if (workers == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
      }
      for (auto& f : found) progress.found.insert(progress.found.end(), f.begin(), f.end());
      begin = end;
      if (checkpointing && begin < parents.size()) {
        progress.level = n;
        progress.next_parent = begin;
        save_progress(options, max_n, progress);
      }
    }
    report("order " + std::to_string(n) + " done, " + std::to_string(progress.found.size()) +
           " obstructions so far");
    if (last) break;
    std::vector<std::string> next;
    for (auto& k : kids) {
      for (auto& form : k) next.push_back(std::move(form));
    }
    parents = std::move(next);
    if (checkpointing) {
      save_lines(level_file(options.checkpoint_dir, n), parents);
      progress.level = n + 1;
      progress.next_parent = 0;
      save_progress(options, max_n, progress);
    }
  }
  if (checkpointing) {
    progress.level = max_n + 1;
    progress.next_parent = 0;
    save_progress(options, max_n, progress);
  }

  std::sort(progress.found.begin(), progress.found.end());
  progress.found.erase(std::unique(progress.found.begin(), progress.found.end()), progress.found.end());
  std::vector<Graph> out;
  for (const auto& form : progress.found) out.push_back(from_graph6(form));
  return out;
}

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::bridgeless_vc_obstruction:
      return "bridgeless_vc_obstruction";
    case Provenance::edge_augmented:
      return "edge_augmented";
    case Provenance::other:
      return "other";
  }
  return "";
}

ProvenanceResult find_provenance(const Graph& g) {
  ProvenanceResult result;
  const int t = idf_exact(g).value - 1;
  if (t < 0) return result;
  const ClassPredicate in_class = [t](const Graph& h) { return vc_decision(h, t); };
  MemoPredicate memo(in_class);

  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<Edge> removed;
  // Edge deletions never raise the vertex cover number, so once it drops to t
  // no superset can work.
  std::function<bool(int, int)> search = [&](int from, int left) {
    const Graph rest = delete_edges(g, removed);
    if (left == 0) return minimal_with(strip_isolated(rest), memo, in_class);
    for (int i = from; i + left <= m; ++i) {
      removed.push_back(edges[i]);
      const bool alive = !vc_decision(delete_edges(g, removed), t);
      if (alive && search(i + 1, left - 1)) return true;
      removed.pop_back();
    }
    return false;
  };
  for (int size = 0; size <= m; ++size) {
    removed.clear();
    if (search(0, size)) {
      result.kind = size == 0 ? Provenance::bridgeless_vc_obstruction : Provenance::edge_augmented;
      result.removed = removed;
      return result;
    }
  }
  return result;
}

ObstructionReport obs_vc(int k, const ScanOptions& options) {
  if (k < 0 || k > kObsVcMaxK) throw std::invalid_argument("obs_vc: k must be in 0.." + std::to_string(kObsVcMaxK));
  ObstructionReport report{k, "vc", {}, {}};
  report.obstructions = scan_obstructions(2 * k + 2, [k](const Graph& g) { return vc_decision(g, k); }, options);
  return report;
}

ObstructionReport obs_idf(int k, const ScanOptions& options, bool long_run) {
  const int limit = long_run ? kObsIdfLongRunMaxK : kObsIdfMaxK;
  if (k < 0 || k > limit) {
    throw std::invalid_argument("obs_idf: k must be in 0.." + std::to_string(limit) +
                                (long_run ? "" : " without the long-run flag"));
  }
  ObstructionReport report{k, "idf", {}, {}};
  report.obstructions = scan_obstructions(2 * k + 4, [k](const Graph& g) { return idf_decision(g, k); }, options);
  for (const Graph& g : report.obstructions) report.provenance.push_back(find_provenance(g));
  return report;
}

bool is_spanning_subgraph_of(const Graph& h, const Graph& g) { return SubgraphSearch(h, g).run(); }

ChecksMap verify_obstructions(int k, const ObstructionReport& vc, const ObstructionReport& idf) {
  ChecksMap checks;
  auto record = [&](const std::string& key, const Graph& g, bool ok) {
    CheckResult& c = checks[key];
    if (!ok) {
      c.pass = false;
      c.failures.push_back(to_graph6(g));
    }
  };
  const std::string key_a = "a_idf_obstructions_bridgeless";
  const std::string key_b = "b_bridgeless_vc_obstructions_are_idf_obstructions";
  const std::string key_c = "c_vc_obstruction_components_2_connected";
  const std::string key_d = "d_vc_obstructions_have_vc_k_plus_1";
  const std::string key_e = "e_idf_obstructions_have_idf_k_plus_1_or_k_plus_2";
  const std::string key_f = "f_vc_obstruction_minors_are_spanning_subgraphs";
  const std::string key_g = "g_idf_obstructions_at_most_2k_plus_4_vertices";
  for (const auto& key : {key_a, key_b, key_c, key_d, key_e, key_f, key_g}) checks[key];

  std::set<std::string> idf_forms;
  for (const Graph& g : idf.obstructions) idf_forms.insert(canonical_form(g));

  for (const Graph& g : idf.obstructions) {
    record(key_a, g, is_bridgeless(g));
    record(key_e, g, !idf_decision(g, k) && idf_decision(g, k + 2));
    record(key_g, g, g.vertex_count() <= 2 * k + 4);
    if (idf_exact(g).value == k + 1) {
      bool any = false;
      bool every = true;
      for (const Graph& h : vc.obstructions) {
        if (!oracle::brute_minor(h, g)) continue;
        any = true;
        every = every && is_spanning_subgraph_of(h, g);
      }
      record(key_f, g, any && every);
    }
  }
  for (const Graph& h : vc.obstructions) {
    if (is_bridgeless(h)) record(key_b, h, idf_forms.count(canonical_form(h)) > 0);
    bool blocks_ok = true;
    for (const auto& comp : connected_components(h)) blocks_ok = blocks_ok && is_2_connected(induced_subgraph(h, comp));
    record(key_c, h, blocks_ok);
    record(key_d, h, vc_exact(h).value == k + 1);
  }
  return checks;
}

bool all_pass(const ChecksMap& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.pass; });
}

std::vector<FamilyMinimality> family_minimality(int k, const ObstructionReport& idf) {
  std::set<std::string> forms;
  for (const Graph& g : idf.obstructions) forms.insert(canonical_form(g));
  std::vector<FamilyMinimality> rows;
  auto add = [&](std::string family, int parameter, const Graph& g, bool predicted) {
    rows.push_back({std::move(family), parameter, to_graph6(g), predicted, forms.count(canonical_form(g)) > 0});
  };
  if (k >= 1) add("cycle", 2 * k + 1, gen_cycle(2 * k + 1), true);
  add("triangles", k / 2 + 1, gen_triangles(k / 2 + 1), true);
  add("marguerite", k + 1, gen_marguerite(k + 1), true);
  if (k >= 1) add("marguerite", k, gen_marguerite(k), false);
  return rows;
}

nlohmann::json to_json(const ObstructionReport& report) {
  nlohmann::json list = nlohmann::json::array();
  for (std::size_t i = 0; i < report.obstructions.size(); ++i) {
    const Graph& g = report.obstructions[i];
    nlohmann::json item = {{"graph6", to_graph6(g)}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    if (i < report.provenance.size()) {
      const auto& p = report.provenance[i];
      item["provenance"] = provenance_name(p.kind);
      nlohmann::json removed = nlohmann::json::array();
      for (const Edge& e : p.removed) removed.push_back({e.u, e.v});
      item["removed_edges"] = removed;
    }
    list.push_back(item);
  }
  return {{"k", report.k}, {"target", report.target}, {"obstructions", list}};
}

nlohmann::json to_json(const ChecksMap& checks) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, c] : checks) out[key] = {{"pass", c.pass}, {"failures", c.failures}};
  return out;
}

nlohmann::json to_json(const std::vector<FamilyMinimality>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    out.push_back({{"family", r.family},
                   {"parameter", r.parameter},
                   {"graph6", r.graph6},
                   {"predicted", r.predicted},
                   {"minimal", r.minimal},
                   {"agrees", r.predicted == r.minimal}});
  }
  return out;
}

void write_catalog(const std::filesystem::path& dir, const ObstructionReport& report, const nlohmann::json& extra) {
  std::filesystem::create_directories(dir);
  const std::string stem = "obs-" + report.target + "-k" + std::to_string(report.k);
  {
    std::ofstream out(dir / (stem + ".g6"));
    for (const Graph& g : report.obstructions) out << to_graph6(g) << '\n';
  }
  nlohmann::json sidecar = to_json(report);
  sidecar.update(extra);
  std::ofstream out(dir / (stem + ".json"));
  out << sidecar.dump(2) << '\n';
}

}  // namespace idforest
