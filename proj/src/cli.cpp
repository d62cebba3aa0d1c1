#include "idforest/cli.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "idforest/errors.hpp"
#include "idforest/graph_io.hpp"
#include "idforest/identify.hpp"
#include "idforest/idf_solver.hpp"
#include "idforest/minor_engine.hpp"
#include "idforest/obstructions.hpp"
#include "idforest/oracle.hpp"
#include "idforest/vc.hpp"

namespace idforest::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  bool json = false;
  std::string format = "graph6";
  std::optional<int> k;
};

void add_common(CLI::App* sub, Common& c, bool with_k) {
  sub->add_flag("--json", c.json, "Print JSON instead of text");
  sub->add_option("--format", c.format, "Graph output format")->check(CLI::IsMember({"graph6", "edgelist"}));
  if (with_k) sub->add_option("--k", c.k, "Budget / parameter");
}

int need_k(const Common& c, const std::string& command) {
  if (!c.k) throw UsageError(command + ": --k is required");
  return *c.k;
}

std::string show_graph(const Graph& g, const Common& c) {
  if (c.format == "edgelist") return to_edge_list(g);
  return to_graph6(g) + "\n";
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int cmd_solve(const Graph& g, const Common& c, std::ostream& out) {
  const IdfCertificate cert = idf_exact(g);
  const bool yes = !c.k || cert.value <= *c.k;
  if (c.json) {
    json j = to_json(cert);
    if (c.k) {
      j["k"] = *c.k;
      j["decision"] = yes;
    }
    out << j.dump() << '\n';
  } else {
    out << "idf: " << cert.value << '\n';
    out << "partition: " << format_partition(cert.partition) << '\n';
    out << "forest: " << show_graph(cert.forest, c);
    out << "idf = vc of the bridgeless core\n";
    if (c.k) out << "idf <= " << *c.k << ": " << (yes ? "yes" : "no") << '\n';
  }
  return yes ? kOk : kNegative;
}

int cmd_check(const Graph& g, const std::string& text, std::optional<int> order, const Common& c,
              std::ostream& out) {
  const VertexPartition p = parse_partition(text);
  std::string reason;
  bool ok = true;
  try {
    p.validate_for(g);
    if (!is_id_forest_partition(g, p)) {
      ok = false;
      reason = "identification is not a forest";
    }
  } catch (const std::exception& e) {
    ok = false;
    reason = e.what();
  }
  if (ok && order && p.order() != *order) {
    ok = false;
    reason = "partition has order " + std::to_string(p.order()) + ", not " + std::to_string(*order);
  }
  if (c.json) {
    json j = {{"valid", ok}, {"order", p.order()}};
    if (!ok) j["reason"] = reason;
    out << j.dump() << '\n';
  } else {
    out << (ok ? "valid" : "invalid: " + reason) << " (order " << p.order() << ")\n";
  }
  return ok ? kOk : kNegative;
}

int cmd_kernel(const Graph& g, const Common& c, std::ostream& out) {
  const int k = need_k(c, "kernel");
  const KernelInstance kernel = idf_kernel(g, k);
  if (c.json) {
    out << json{{"graph6", to_graph6(kernel.graph)},
                {"budget", kernel.budget},
                {"forced", kernel.forced},
                {"origin", kernel.origin},
                {"trivial_no", kernel.trivial_no}}
               .dump()
        << '\n';
  } else {
    out << show_graph(kernel.graph, c);
    out << "budget: " << kernel.budget << '\n';
  }
  return kOk;
}

int cmd_vc(const Graph& g, const Common& c, std::ostream& out) {
  const VcSolution sol = vc_exact(g);
  const bool yes = !c.k || sol.value <= *c.k;
  if (c.json) {
    json j = {{"vc", sol.value}, {"cover", sol.cover}};
    if (c.k) {
      j["k"] = *c.k;
      j["decision"] = yes;
    }
    out << j.dump() << '\n';
  } else {
    out << "vc: " << sol.value << '\n' << "cover: " << join(sol.cover) << '\n';
    if (c.k) out << "vc <= " << *c.k << ": " << (yes ? "yes" : "no") << '\n';
  }
  return yes ? kOk : kNegative;
}

int cmd_detect(const Graph& g, const Common& c, std::ostream& out) {
  const DichotomyOutcome outcome = dichotomy(g, need_k(c, "detect"));
  if (c.json) {
    out << to_json(outcome).dump() << '\n';
    return kOk;
  }
  if (outcome.is_witness()) {
    const auto& w = outcome.witness();
    out << "witness: " << family_name(w.family) << " k=" << w.k << '\n';
    for (std::size_t x = 0; x < w.model.branch_sets.size(); ++x) {
      out << "  " << x << ": " << join(w.model.branch_sets[x]) << '\n';
    }
  } else {
    out << "id_set: " << format_partition(outcome.id_set()) << '\n';
    out << "order: " << outcome.id_set().order() << '\n';
    out << "repaired edges: " << outcome.repaired << '\n';
  }
  return kOk;
}

int cmd_families(const std::string& family, const Common& c, std::ostream& out) {
  const int k = need_k(c, "families");
  const std::vector<std::string> all = {"cycle", "triangles", "marguerite", "antichain"};
  json j = json::object();
  for (const auto& name : all) {
    if (!family.empty() && family != name) continue;
    // Listing every family skips generators that reject this k (cycles need k >= 3).
    if (family.empty() && name == "cycle" && k < 3) continue;
    Graph g = name == "cycle"       ? gen_cycle(k)
              : name == "triangles" ? gen_triangles(k)
              : name == "marguerite" ? gen_marguerite(k)
                                     : gen_antichain_h(k);
    if (c.json) {
      j[name] = c.format == "edgelist" ? to_edge_list(g) : to_graph6(g);
    } else {
      if (family.empty()) out << name << ": ";
      out << show_graph(g, c);
    }
  }
  if (c.json) out << j.dump() << '\n';
  return kOk;
}

template <typename F>
json guarded(F&& f) {
  try {
    return f();
  } catch (const SizeLimitError&) {
    return nullptr;
  }
}

int cmd_oracle(const Graph& g, const Common& c, std::ostream& out) {
  json j = {
      {"idf", guarded([&] { return json(oracle::brute_idf(g)); })},
      {"vc", guarded([&] { return json(oracle::brute_vc(g)); })},
      {"vc_bridgeless_core", guarded([&] { return json(oracle::brute_vc(remove_bridges(g))); })},
      {"ecf", guarded([&] { return json(oracle::brute_ecf(g).value); })},
  };
  if (c.json) {
    out << j.dump() << '\n';
  } else {
    for (const auto& [key, value] : j.items()) out << key << ": " << (value.is_null() ? "over size limit" : value.dump()) << '\n';
  }
  return kOk;
}

struct ObsFlags {
  std::string target = "both";
  std::string out_dir = ".";
  std::string checkpoint;
  int workers = 1;
  bool long_run = false;
};

int cmd_obstructions(const Common& c, const ObsFlags& f, bool checks_only, std::ostream& out,
                     std::ostream& err) {
  const int k = need_k(c, checks_only ? "verify4" : "obstructions");
  ScanOptions options;
  options.workers = f.workers;
  options.progress = [&err](const std::string& msg) { err << msg << '\n'; };
  if (!f.checkpoint.empty()) options.checkpoint_dir = f.checkpoint;

  const bool want_vc = checks_only || f.target != "idf";
  const bool want_idf = checks_only || f.target != "vc";
  if (want_vc && k > kObsVcMaxK) throw UsageError("obstructions: vc catalogs are limited to k <= 3");
  if (want_idf && k > kObsIdfMaxK && !(f.long_run && k <= kObsIdfLongRunMaxK)) {
    throw UsageError("obstructions: idf catalogs need k <= 2, or k = 3 with --long-run");
  }

  std::optional<ObstructionReport> vc, idf;
  if (want_vc) {
    options.checkpoint_tag = "vc-k" + std::to_string(k);
    if (!f.checkpoint.empty()) options.checkpoint_dir = std::filesystem::path(f.checkpoint) / options.checkpoint_tag;
    vc = obs_vc(k, options);
  }
  if (want_idf) {
    options.checkpoint_tag = "idf-k" + std::to_string(k);
    if (!f.checkpoint.empty()) options.checkpoint_dir = std::filesystem::path(f.checkpoint) / options.checkpoint_tag;
    idf = obs_idf(k, options, f.long_run);
  }

  std::optional<ChecksMap> checks;
  json extra = json::object();
  if (vc && idf) {
    checks = verify_obstructions(k, *vc, *idf);
    extra["checks"] = to_json(*checks);
  }
  json families = idf ? to_json(family_minimality(k, *idf)) : json();

  if (checks_only) {
    if (c.json) {
      out << to_json(*checks).dump() << '\n';
    } else {
      for (const auto& [key, r] : *checks) out << key << ": " << (r.pass ? "pass" : "FAIL") << '\n';
    }
    return all_pass(*checks) ? kOk : kNegative;
  }

  if (vc) write_catalog(f.out_dir, *vc, extra);
  if (idf) {
    json idf_extra = extra;
    idf_extra["family_minimality"] = families;
    write_catalog(f.out_dir, *idf, idf_extra);
  }

  if (c.json) {
    json j = {{"k", k}};
    if (vc) j["vc"] = to_json(*vc);
    if (idf) {
      j["idf"] = to_json(*idf);
      j["family_minimality"] = families;
    }
    if (checks) j["checks"] = to_json(*checks);
    out << j.dump() << '\n';
  } else {
    auto list = [&](const ObstructionReport& r) {
      out << "obs-" << r.target << "-k" << k << ": " << r.obstructions.size() << " graphs\n";
      for (std::size_t i = 0; i < r.obstructions.size(); ++i) {
        out << "  " << to_graph6(r.obstructions[i]);
        if (i < r.provenance.size()) out << "  " << provenance_name(r.provenance[i].kind);
        out << '\n';
      }
    };
    if (vc) list(*vc);
    if (idf) list(*idf);
    if (checks) {
      for (const auto& [key, r] : *checks) out << key << ": " << (r.pass ? "pass" : "FAIL") << '\n';
    }
  }
  return !checks || all_pass(*checks) ? kOk : kNegative;
}

}  // namespace

Graph read_graph(const std::string& source, std::istream& in) {
  std::string text;
  if (source == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else if (std::filesystem::is_regular_file(source)) {
    std::ifstream file(source);
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  } else {
    text = source;
  }
  if (const auto first = text.find_first_not_of(" \t\r\n");
      first != std::string::npos && std::isdigit(static_cast<unsigned char>(text[first]))) {
    return from_edge_list(text);
  }
  return from_graph6(trim(text));
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identification to forests: exact solver, kernels, detectors and obstruction catalogs",
               "idforest"};
  app.require_subcommand(1);

  Common common;
  std::string input;
  std::string partition;
  std::optional<int> order;
  std::string family;
  ObsFlags obs;

  auto with_input = [&](const std::string& name, const std::string& help, bool with_k) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "graph6, edge-list file, or - for stdin")->required();
    add_common(sub, common, with_k);
    return sub;
  };

  CLI::App* solve = with_input("solve", "Optimal identification to a forest", true);
  CLI::App* check = with_input("check", "Validate a partition", false);
  check->add_option("--partition", partition, "Blocks, e.g. 0,1;2,3")->required();
  check->add_option("--order", order, "Claimed order of the partition");
  CLI::App* kernel = with_input("kernel", "Kernel of at most 2k+1 vertices", true);
  CLI::App* vc = with_input("vc", "Minimum vertex cover", true);
  CLI::App* detect = with_input("detect", "Family witness or identification set", true);
  CLI::App* oracle_cmd = with_input("oracle", "Brute-force reference values", false);

  CLI::App* obstructions = app.add_subcommand("obstructions", "Obstruction catalogs and checks");
  add_common(obstructions, common, true);
  obstructions->add_option("--target", obs.target, "Which catalog")->check(CLI::IsMember({"vc", "idf", "both"}));
  obstructions->add_option("--out", obs.out_dir, "Output directory");
  obstructions->add_option("--checkpoint", obs.checkpoint, "Checkpoint directory");
  obstructions->add_option("--workers", obs.workers, "Worker threads")->check(CLI::PositiveNumber);
  obstructions->add_flag("--long-run", obs.long_run, "Allow the k = 3 idf scan");

  CLI::App* verify4 = app.add_subcommand("verify4", "Structural checks on the obstruction catalogs");
  add_common(verify4, common, true);
  verify4->add_option("--workers", obs.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify4->add_flag("--long-run", obs.long_run, "Allow the k = 3 idf scan");

  CLI::App* families = app.add_subcommand("families", "Generator graphs");
  add_common(families, common, true);
  families->add_option("--family", family, "Family")->check(
      CLI::IsMember({"cycle", "triangles", "marguerite", "antichain"}));

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (obstructions->parsed()) return cmd_obstructions(common, obs, false, out, err);
    if (verify4->parsed()) return cmd_obstructions(common, obs, true, out, err);
    if (families->parsed()) return cmd_families(family, common, out);

    const Graph g = read_graph(input, in);
    if (solve->parsed()) return cmd_solve(g, common, out);
    if (check->parsed()) return cmd_check(g, partition, order, common, out);
    if (kernel->parsed()) return cmd_kernel(g, common, out);
    if (vc->parsed()) return cmd_vc(g, common, out);
    if (detect->parsed()) return cmd_detect(g, common, out);
    if (oracle_cmd->parsed()) return cmd_oracle(g, common, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace idforest::cli
