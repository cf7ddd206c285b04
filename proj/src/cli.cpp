#include "bcom/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "bcom/builtin.hpp"
#include "bcom/case_studies.hpp"
#include "bcom/diagram.hpp"
#include "bcom/json_io.hpp"
#include "bcom/util.hpp"

namespace bcom::cli {

namespace {

FiniteGroup resolve_group(const std::string& spec) {
  if (std::filesystem::exists(spec)) return load_group_file(spec);
  return builtin_group(spec);
}

void emit(std::ostream& out, const std::string& format, const json& j,
          const std::string& text, const std::string& csv = {}) {
  if (format == "json")
    out << j.dump(2) << "\n";
  else if (format == "csv")
    out << (csv.empty() ? text : csv);
  else
    out << text;
}

std::string betti_text(const BettiTable& t) {
  std::string s;
  for (size_t i = 0; i < t.dims.size(); ++i)
    s += "H_" + std::to_string(i) + " = " + std::to_string(t.dims[i]) + "\n";
  return s;
}

struct CapFlags {
  long long max_tuples = 0, max_subgroups = 0, max_simplices = 0;
  int max_group_order = 0, dense_limit = 0;
  void apply(Caps& caps) const {
    if (max_tuples) caps.max_tuple_estimate = max_tuples;
    if (max_subgroups) caps.max_subgroups = max_subgroups;
    if (max_simplices) caps.max_simplices = max_simplices;
    if (max_group_order) caps.max_group_order = max_group_order;
    if (dense_limit) caps.dense_column_limit = dense_limit;
    caps.validate();
  }
};

void add_cap_flags(CLI::App* app, CapFlags& flags) {
  app->add_option("--max-tuples", flags.max_tuples,
                  "cap on the tuple enumeration estimate");
  app->add_option("--max-subgroups", flags.max_subgroups,
                  "cap on enumerated subgroups");
  app->add_option("--max-simplices", flags.max_simplices,
                  "per-degree cap on simplices");
  app->add_option("--max-group-order", flags.max_group_order,
                  "cap on group order for enumeration paths");
  app->add_option("--dense-limit", flags.dense_limit,
                  "column threshold for switching to sparse elimination");
}

int run_homology(const RunConfig& cfg, std::ostream& out) {
  const FiniteGroup G = resolve_group(cfg.group_spec);
  const TauSpec tau = TauSpec::parse(cfg.tau);
  progress("building B(" + tau.str() + "," + G.name() + ") through degree " +
           std::to_string(cfg.max_degree + 1));
  SSetPtr X = build_bcom(G, tau, cfg.max_degree, cfg.caps);
  BettiTable t = betti(*X, cfg.ell, cfg.max_degree, cfg.caps);
  json j;
  j["group"] = G.name().empty() ? cfg.group_spec : G.name();
  j["tau"] = tau.str();
  j["betti"] = betti_to_json(t);
  emit(out, cfg.format, j, betti_text(t), betti_to_csv(t));
  return kOk;
}

int run_compare(const RunConfig& cfg, const std::string& from,
                const std::string& to, std::ostream& out) {
  const FiniteGroup G = resolve_group(cfg.group_spec);
  SimplicialMap inc = inclusion_map(G, TauSpec::parse(from),
                                    TauSpec::parse(to), cfg.max_degree,
                                    cfg.caps);
  InducedHomology h = induced_on_homology(inc, cfg.ell, cfg.max_degree,
                                          cfg.caps);
  json degrees = json::array();
  std::string text;
  for (int n = 0; n <= h.D; ++n) {
    json d;
    d["degree"] = n;
    d["src_dim"] = h.src_betti[n];
    d["tgt_dim"] = h.tgt_betti[n];
    d["rank"] = h.map_rank[n];
    degrees.push_back(std::move(d));
    text += "degree " + std::to_string(n) + ": " +
            std::to_string(h.src_betti[n]) + " -> " +
            std::to_string(h.tgt_betti[n]) + ", rank " +
            std::to_string(h.map_rank[n]) + "\n";
  }
  text += h.isomorphism ? "isomorphism through requested degree\n"
                        : "NOT an isomorphism\n";
  json j;
  j["group"] = G.name().empty() ? cfg.group_spec : G.name();
  j["from"] = from;
  j["to"] = to;
  j["ell"] = cfg.ell;
  j["degrees"] = std::move(degrees);
  j["isomorphism"] = h.isomorphism;
  emit(out, cfg.format, j, text);
  return kOk;
}

int run_decompose(const RunConfig& cfg, const std::string& collection,
                  const std::string& emit_diagram, std::ostream& out) {
  const FiniteGroup G = resolve_group(cfg.group_spec);
  const TauSpec tau = TauSpec::parse(cfg.tau);
  AbelianPoset P =
      abelian_subgroup_poset(G, collection == "center", cfg.caps);
  Decomposition dec = build_decomposition(G, P, tau, cfg.max_degree, cfg.caps);
  BettiTable hb = betti(*dec.hoco, cfg.ell, cfg.max_degree, cfg.caps);
  BettiTable db = betti(*dec.target, cfg.ell, cfg.max_degree, cfg.caps);
  InducedHomology h =
      induced_on_homology(dec.assembly, cfg.ell, cfg.max_degree, cfg.caps);
  if (!emit_diagram.empty()) {
    std::ofstream f(emit_diagram);
    if (!f) throw ValidationError("cannot write '" + emit_diagram + "'");
    f << diagram_to_json(dec.diagram).dump(2) << "\n";
  }
  json j;
  j["group"] = G.name().empty() ? cfg.group_spec : G.name();
  j["tau"] = tau.str();
  j["ell"] = cfg.ell;
  j["collection"] = collection;
  j["poset_objects"] = P.size();
  j["poset_classes"] = static_cast<int>(P.class_reps.size());
  j["diagram_arrows"] = dec.diagram.shape.n_arrows();
  j["hocolim_betti"] = betti_to_json(hb);
  j["direct_betti"] = betti_to_json(db);
  j["assembly_iso"] = h.isomorphism;
  std::string text = "poset: " + std::to_string(P.size()) + " objects, " +
                     std::to_string(P.class_reps.size()) + " classes\n" +
                     "hocolim betti: " + hb.str() + "\n" +
                     "direct betti:  " + db.str() + "\n" +
                     (h.isomorphism ? "assembly map: isomorphism\n"
                                    : "assembly map: NOT an isomorphism\n");
  emit(out, cfg.format, j, text);
  return kOk;
}

int run_hocolim(const RunConfig& cfg, const std::string& diagram_path,
                std::ostream& out) {
  std::ifstream in(diagram_path);
  if (!in) throw ValidationError("cannot open '" + diagram_path + "'");
  json dj;
  try {
    in >> dj;
  } catch (const std::exception& e) {
    throw ValidationError("bad JSON in '" + diagram_path + "': " + e.what());
  }
  Diagram D_ = diagram_from_json(dj);
  SSetPtr hoco = hocolim(D_, cfg.max_degree, cfg.caps);
  BettiTable t = betti(*hoco, cfg.ell, cfg.max_degree, cfg.caps);
  json j;
  j["diagram"] = diagram_path;
  j["betti"] = betti_to_json(t);
  emit(out, cfg.format, j, betti_text(t), betti_to_csv(t));
  return kOk;
}

int run_verify(const RunConfig& cfg, const std::string& suite,
               std::ostream& out) {
  std::vector<CheckResult> results;
  auto append = [&](std::vector<CheckResult> r) {
    results.insert(results.end(), r.begin(), r.end());
  };
  if (suite == "sigma3" || suite == "all") append(verify_sigma3(cfg.caps));
  if (suite == "so3" || suite == "all") append(verify_so3());
  if (suite == "quotient" || suite == "all") append(verify_quotient(cfg.caps));
  if (suite == "gl2" || suite == "all") append(verify_gl2(cfg.caps));
  if (results.empty())
    throw ValidationError("unknown suite '" + suite +
                          "' (sigma3|so3|quotient|gl2|all)");
  std::string text;
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    text += std::string(r.pass ? "PASS  " : "FAIL  ") + r.name + "  [" +
            r.detail + "]\n";
  }
  text += all_pass ? "all checks passed\n" : "some checks FAILED\n";
  emit(out, cfg.format, check_results_to_json(results), text);
  return all_pass ? kOk : kVerification;
}

int run_group(const RunConfig& cfg, std::ostream& out) {
  const FiniteGroup G = resolve_group(cfg.group_spec);
  out << group_to_json(G).dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"classifying spaces of commuting tuples in finite groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  CapFlags caps;
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress progress output on stderr");
  app.add_option("--seed", cfg.seed,
                 "reserved for sampling diagnostics (unused by algorithms)");

  std::string from = "zmod:2", to = "z", collection = "all";
  std::string suite = "all", diagram_path, emit_diagram;

  auto add_common = [&](CLI::App* sub, bool with_tau) {
    sub->add_option("--group", cfg.group_spec,
                    "builtin spec (C2, V4, S3, D4, Q8, GL2:4, products via "
                    "'x') or a JSON table file");
    if (with_tau)
      sub->add_option("--tau", cfg.tau, "free | z | zmod:m | zadic:ell");
    sub->add_option("--ell", cfg.ell, "prime coefficient field F_ell");
    sub->add_option("--max-degree", cfg.max_degree, "top homology degree D");
    sub->add_option("--format", cfg.format, "text | json | csv");
    add_cap_flags(sub, caps);
  };

  auto* homology = app.add_subcommand("homology", "Betti table of B(tau, G)");
  add_common(homology, true);
  auto* compare = app.add_subcommand(
      "compare", "induced map on homology between two tuple spaces");
  add_common(compare, false);
  compare->add_option("--from", from, "source tau spec");
  compare->add_option("--to", to, "target tau spec");
  auto* decompose = app.add_subcommand(
      "decompose", "abelian-subgroup decomposition and assembly check");
  add_common(decompose, true);
  decompose->add_option("--collection", collection,
                        "all | center (abelian subgroups to use)");
  decompose->add_option("--emit-diagram", emit_diagram,
                        "write the diagram as JSON to this path");
  auto* hocolim_cmd =
      app.add_subcommand("hocolim", "homotopy colimit of a serialized diagram");
  add_common(hocolim_cmd, false);
  hocolim_cmd->add_option("--diagram", diagram_path, "diagram JSON file")
      ->required();
  auto* verify = app.add_subcommand("verify", "run the case-study suites");
  verify->add_option("suite", suite, "sigma3 | so3 | quotient | gl2 | all");
  verify->add_option("--format", cfg.format, "text | json");
  add_cap_flags(verify, caps);
  auto* group_cmd =
      app.add_subcommand("group", "emit a group's JSON table for reproducibility");
  group_cmd->add_option("--group", cfg.group_spec, "group spec");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  set_progress_enabled(!quiet);
  try {
    caps.apply(cfg.caps);
    if (cfg.ell < 2 || !is_prime(cfg.ell))
      throw ValidationError("--ell must be prime");
    if (cfg.max_degree < 0)
      throw ValidationError("--max-degree must be >= 0");
    if (homology->parsed()) return run_homology(cfg, out);
    if (compare->parsed()) return run_compare(cfg, from, to, out);
    if (decompose->parsed())
      return run_decompose(cfg, collection, emit_diagram, out);
    if (hocolim_cmd->parsed()) return run_hocolim(cfg, diagram_path, out);
    if (verify->parsed()) return run_verify(cfg, suite, out);
    if (group_cmd->parsed()) return run_group(cfg, out);
  } catch (const ResourceLimitError& e) {
    err << "resource cap exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kValidation;
}

int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace bcom::cli
