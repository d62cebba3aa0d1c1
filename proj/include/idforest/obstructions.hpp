#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "idforest/graph.hpp"

namespace idforest {

inline constexpr int kEnumerateMaxVertices = 10;
inline constexpr int kObsVcMaxK = 3;
inline constexpr int kObsIdfMaxK = 2;
inline constexpr int kObsIdfLongRunMaxK = 3;

/// One canonical representative per isomorphism class of graphs on n vertices,
/// by canonical augmentation: a child of parent P (P plus a vertex joined to S)
/// is kept iff |S| is the child's minimum degree and deleting the child's
/// canonical deletion vertex gives back P. Siblings are deduplicated per parent.
void for_each_graph(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_graphs(int n);

/// Canonical children of a canonical graph, in canonical-form order.
std::vector<Graph> canonical_children(const Graph& parent);

using ClassPredicate = std::function<bool(const Graph&)>;

/// Every graph reachable by one vertex deletion, edge deletion or edge contraction.
std::vector<Graph> one_step_minors(const Graph& g);

/// g is outside the class and each one-step minor of g is inside it.
bool is_minor_minimal(const Graph& g, const ClassPredicate& in_class);

struct ScanOptions {
  int workers = 1;
  /// Empty: no checkpointing. Otherwise completed levels and progress through
  /// the current level are saved here and picked up on the next run.
  std::filesystem::path checkpoint_dir;
  /// Identifies the scan in the checkpoint; a mismatching checkpoint is ignored.
  std::string checkpoint_tag;
  int checkpoint_every = 5000;
  std::function<void(const std::string&)> progress;
};

/// Minor-minimal non-members of the class among all graphs on at most max_n
/// vertices, as canonical graphs sorted by graph6. The predicate is called
/// concurrently from `workers` threads and memoized per worker by canonical form.
std::vector<Graph> scan_obstructions(int max_n, const ClassPredicate& in_class,
                                     const ScanOptions& options = {});

enum class Provenance { bridgeless_vc_obstruction, edge_augmented, other };

std::string_view provenance_name(Provenance p);

struct ProvenanceResult {
  Provenance kind = Provenance::other;
  /// Removing these edges (and the isolated vertices left behind) gives a
  /// minor-minimal graph of vertex cover idf(g).
  EdgeSet removed;
};

/// Smallest edge set E' with g - E' minor-minimal outside vertex cover
/// idf(g) - 1, searched by increasing |E'|.
ProvenanceResult find_provenance(const Graph& g);

struct ObstructionReport {
  int k = 0;
  /// "vc" or "idf".
  std::string target;
  std::vector<Graph> obstructions;
  /// Parallel to `obstructions`; empty for vertex cover reports.
  std::vector<ProvenanceResult> provenance;
};

/// Scan up to 2k+2 vertices against vc_decision(., k). k <= kObsVcMaxK.
ObstructionReport obs_vc(int k, const ScanOptions& options = {});

/// Scan up to 2k+4 vertices against idf_decision(., k), with provenance.
/// k <= kObsIdfMaxK, or kObsIdfLongRunMaxK when long_run is set.
ObstructionReport obs_idf(int k, const ScanOptions& options = {}, bool long_run = false);

struct CheckResult {
  bool pass = true;
  /// graph6 strings of the graphs that failed.
  std::vector<std::string> failures;
};

using ChecksMap = std::map<std::string, CheckResult>;

/// Structural checks relating obs_vc(k) and obs_idf(k), keyed "a_..".."g_..".
ChecksMap verify_obstructions(int k, const ObstructionReport& vc, const ObstructionReport& idf);
bool all_pass(const ChecksMap& checks);

/// Whether a named family member is minor-minimal outside idf <= k, next to
/// whether the family's predicted membership lists it.
struct FamilyMinimality {
  std::string family;
  int parameter = 0;
  std::string graph6;
  bool predicted = false;
  bool minimal = false;
};

/// Members considered: C_{2k+1}, floor(k/2+1) disjoint triangles, and the
/// (k+1)- and k-marguerites. Predicted are the first three.
std::vector<FamilyMinimality> family_minimality(int k, const ObstructionReport& idf);

/// Padding H with isolated vertices, some edge subset E' of g has g - E' = H.
bool is_spanning_subgraph_of(const Graph& h, const Graph& g);

nlohmann::json to_json(const ObstructionReport& report);
nlohmann::json to_json(const ChecksMap& checks);
nlohmann::json to_json(const std::vector<FamilyMinimality>& rows);

/// Writes obs-{target}-k{K}.g6 and obs-{target}-k{K}.json into dir. `extra`
/// is merged into the sidecar.
void write_catalog(const std::filesystem::path& dir, const ObstructionReport& report,
                   const nlohmann::json& extra = nlohmann::json::object());

}  // namespace idforest
