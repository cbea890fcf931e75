// zf: command-line front end for the zero forcing engine.
//
// Exit codes: 0 success, 1 usage or input error, 2 computation infeasible,
// 3 verification mismatch, 4 invalid chronology script.

#include "zf/error.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"
#include "zf/io.hpp"
#include "zf/search.hpp"
#include "zf/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <optional>
#include <string>

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kInfeasible = 2, kMismatch = 3, kBadScript = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

zf::Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = static_cast<std::size_t>(std::stoul(text));
      return {v, v};
    }
    zf::Range r{std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
    if (r.lo > r.hi) throw UsageError("empty range " + text);
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("bad range '" + text + "', expected A..B");
  }
}

unsigned resolve_workers(std::optional<unsigned> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ZF_WORKERS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::logic_error&) {
      throw UsageError(std::string("ZF_WORKERS is not a number: ") + env);
    }
  }
  return 0;
}

// Writes to --out when given, else stdout.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text;
}

struct GenArgs {
  std::string family;
  std::optional<std::size_t> m, r, s, n;
  std::string format = "edges";
  std::string out;
};

int run_gen(const GenArgs& a) {
  zf::Graph g;
  auto need = [&](const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw UsageError("--family " + a.family + " requires " + flag);
    return *v;
  };
  auto forbid = [&](const std::optional<std::size_t>& v, const char* flag) {
    if (v) throw UsageError("--family " + a.family + " does not take " + flag);
  };
  if (a.family == "gear") {
    forbid(a.s, "-s");
    forbid(a.n, "-n");
    g = zf::gear({need(a.m, "-m"), a.r.value_or(1)});
  } else if (a.family == "helm") {
    forbid(a.r, "-r");
    forbid(a.n, "-n");
    g = zf::helm({need(a.m, "-m"), a.s.value_or(1)});
  } else {
    forbid(a.r, "-r");
    forbid(a.s, "-s");
    if (a.m && a.n) throw UsageError("give only one of -m / -n");
    const std::size_t n = a.n ? *a.n : need(a.m, "-n");
    if (a.family == "wheel") g = zf::wheel(n);
    else if (a.family == "path") g = zf::path(n);
    else g = zf::cycle(n);
  }

  std::ostringstream os;
  if (a.format == "edges") zf::write_edge_list(os, g);
  else if (a.format == "json") os << zf::graph_to_json(g).dump(2) << '\n';
  else zf::write_dot(os, g);
  emit(a.out, os.str());
  return kOk;
}

struct ForcingArgs {
  std::string graph;
  std::string blue;
  std::string script;
  std::string out;
};

// Resolves the initial set and optional script shared by closure/export-dot.
std::pair<zf::VertexSet, std::optional<zf::ChronologyScript>> forcing_inputs(
    const zf::Graph& g, const ForcingArgs& a) {
  std::optional<std::vector<zf::Vertex>> blue;
  if (!a.blue.empty()) blue = zf::parse_vertex_list(a.blue);
  std::optional<zf::ChronologyScript> script;
  if (!a.script.empty()) {
    std::ifstream f(a.script);
    if (!f) throw UsageError("cannot open script " + a.script);
    zf::Json j;
    try {
      j = zf::Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw zf::Error(zf::ErrorCode::ParseError, std::string("malformed script: ") + e.what());
    }
    script = zf::chronology_script_from_json(j);
    if (script->initial) {
      if (blue) {
        std::set<zf::Vertex> x(blue->begin(), blue->end());
        std::set<zf::Vertex> y(script->initial->begin(), script->initial->end());
        if (x != y) throw UsageError("--blue disagrees with the script's initial set");
      }
      blue = script->initial;
    }
  }
  if (!blue) throw UsageError("an initial blue set is required (--blue or a script with 'initial')");
  return {zf::VertexSet(g.vertex_count(), std::span<const zf::Vertex>(*blue)), script};
}

int run_closure(const ForcingArgs& a) {
  const zf::Graph g = zf::load_graph(a.graph);
  auto [b, script] = forcing_inputs(g, a);

  const zf::Chronology c = script ? zf::run_relaxed(g, b, script->steps) : zf::propagate(g, b);
  const auto pt = zf::propagation_time_of_set(g, b);

  zf::Json j;
  j["mode"] = script ? "relaxed" : "propagating";
  j["chronology"] = zf::chronology_to_json(c);
  j["final_blue"] = c.final_blue().members();
  j["complete"] = c.complete();
  j["completion_time"] = c.completion_time();
  j["verdict"] = pt ? "forcing" : "NotForcing";
  j["pt"] = pt ? zf::Json(*pt) : zf::Json(nullptr);
  if (c.complete()) {
    j["chains"] = zf::chain_set_to_json(zf::chain_set(c));
    j["terminus"] = zf::terminus(c).members();
  }
  emit(a.out, j.dump(2) + "\n");
  return kOk;
}

int run_export_dot(const ForcingArgs& a) {
  const zf::Graph g = zf::load_graph(a.graph);
  std::ostringstream os;
  if (a.blue.empty() && a.script.empty()) {
    zf::write_dot(os, g);
  } else {
    auto [b, script] = forcing_inputs(g, a);
    const zf::Chronology c = script ? zf::run_relaxed(g, b, script->steps) : zf::propagate(g, b);
    if (c.complete()) {
      const zf::ChainSet chains = zf::chain_set(c);
      zf::write_dot(os, g, &b, &chains);
    } else {
      std::cerr << "note: set does not force the whole graph; no chains drawn\n";
      zf::write_dot(os, g, &b);
    }
  }
  emit(a.out, os.str());
  return kOk;
}

struct SearchArgs {
  std::string graph;
  bool prove_minimality = false;
  bool all_witnesses = false;
  bool no_pruning = false;
  bool pt_first_witness = false;
  std::optional<unsigned> workers;
  std::string symmetry = "off";
  std::uint64_t max_sets = 0;
  std::size_t ceiling = zf::kPathCoverCeiling;
};

zf::Symmetry parse_symmetry(const std::string& s) {
  if (s == "off") return zf::Symmetry::Off;
  if (s == "on") return zf::Symmetry::On;
  if (s == "cross-check") return zf::Symmetry::CrossCheck;
  throw UsageError("--symmetry must be off, on or cross-check");
}

int run_search(const SearchArgs& a, bool want_pt) {
  const zf::Graph g = zf::load_graph(a.graph);
  zf::SearchOptions opts;
  opts.pruning = !a.no_pruning;
  opts.all_witnesses = a.all_witnesses;
  opts.prove_minimality = a.prove_minimality;
  opts.pt_first_witness = a.pt_first_witness;
  opts.workers = resolve_workers(a.workers);
  opts.symmetry = parse_symmetry(a.symmetry);
  opts.max_sets = a.max_sets;
  if (opts.symmetry != zf::Symmetry::Off && !g.family()) {
    std::cerr << "note: graph has no family provenance; symmetry group is trivial\n";
  }
  const zf::SearchReport r = want_pt ? zf::propagation_time(g, opts) : zf::zero_forcing_number(g, opts);
  std::cout << zf::search_report_to_json(r).dump(2) << '\n';
  return kOk;
}

int run_pathcover(const SearchArgs& a) {
  const zf::Graph g = zf::load_graph(a.graph);
  const auto cover = zf::minimum_path_cover(g, a.ceiling);
  zf::Json j{{"n", g.vertex_count()}, {"p", cover.size()}, {"cover", cover}};
  std::cout << j.dump(2) << '\n';
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string m_range, r_range, s_range;
  std::optional<unsigned> workers;
  std::uint64_t max_sets = 50'000'000;
  bool json = false;
  bool no_minimality = false;
  std::string symmetry = "off";
  std::string report;
};

int run_verify(const VerifyArgs& a) {
  zf::GridRequest req;
  if (a.suite == "gear") req.families = {zf::TheoremFamily::Gear};
  else if (a.suite == "helm") req.families = {zf::TheoremFamily::Helm};
  else if (a.suite == "ghelm") req.families = {zf::TheoremFamily::GeneralizedHelm};
  else req.families = {zf::TheoremFamily::Gear, zf::TheoremFamily::Helm,
                       zf::TheoremFamily::GeneralizedHelm};

  // Default ranges per suite; "all" uses each family's default.
  const std::map<std::string, zf::Range> default_m{
      {"gear", {3, 6}}, {"helm", {3, 12}}, {"ghelm", {3, 4}}};
  std::vector<zf::TheoremCase> cases;
  for (zf::TheoremFamily f : req.families) {
    zf::GridRequest one = req;
    one.families = {f};
    one.m_range = a.m_range.empty() ? default_m.at(std::string(zf::to_string(f)))
                                    : parse_range(a.m_range);
    if (!a.r_range.empty()) one.r_range = parse_range(a.r_range);
    if (!a.s_range.empty()) one.s_range = parse_range(a.s_range);
    if (one.m_range.lo < 3) throw UsageError("--m-range must start at 3 or more");
    if (one.r_range.lo < 1) throw UsageError("--r-range must start at 1 or more");
    one.workers = resolve_workers(a.workers);
    one.max_sets = a.max_sets;
    one.prove_minimality = !a.no_minimality;
    one.symmetry = parse_symmetry(a.symmetry);
    auto part = zf::run_grid(one);
    cases.insert(cases.end(), part.begin(), part.end());
  }

  zf::Json j = zf::Json::array();
  for (const auto& c : cases) j.push_back(zf::theorem_case_to_json(c));
  if (!a.report.empty()) emit(a.report, j.dump(2) + "\n");
  if (a.json) {
    std::cout << j.dump(2) << '\n';
    std::cerr << zf::format_table(cases);
  } else {
    std::cout << zf::format_table(cases);
  }

  bool mismatch = false;
  bool infeasible = false;
  for (const auto& c : cases) {
    if (c.status == zf::CaseStatus::BudgetExceeded) {
      infeasible = true;
      std::cerr << "budget exceeded: " << zf::to_string(c.family) << " m=" << c.m << " "
                << c.note << '\n';
    } else if (!c.fully_verified()) {
      mismatch = true;
      for (const auto& v : c.lemmas.violations) std::cerr << "violation: " << v << '\n';
    }
  }
  if (mismatch) return kMismatch;
  if (infeasible) return kInfeasible;
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero forcing engine: forcing processes, exhaustive search and theorem checks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family member");
  gen_cmd->add_option("--family", gen.family, "gear | helm | wheel | path | cycle")
      ->required()
      ->check(CLI::IsMember({"gear", "helm", "wheel", "path", "cycle"}));
  gen_cmd->add_option("-m", gen.m, "Spoke count (gear/helm)");
  gen_cmd->add_option("-r", gen.r, "Intermediate vertices per arc (gear)");
  gen_cmd->add_option("-s", gen.s, "Pendants per spoke (helm)");
  gen_cmd->add_option("-n", gen.n, "Size (wheel rim, path, cycle)");
  gen_cmd->add_option("--format", gen.format, "edges | json | dot")
      ->check(CLI::IsMember({"edges", "json", "dot"}));
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  ForcingArgs closure_args;
  auto* closure_cmd = app.add_subcommand("closure", "Run the color change rule from a set");
  closure_cmd->add_option("graph", closure_args.graph, "Edge list or graph JSON ('-' = stdin)")->required();
  closure_cmd->add_option("--blue", closure_args.blue, "Initial blue vertices, e.g. 0,6,1");
  closure_cmd->add_option("--script", closure_args.script, "Relaxed chronology JSON to replay");
  closure_cmd->add_option("--out", closure_args.out, "Output file (default stdout)");

  SearchArgs search_args;
  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("graph", search_args.graph, "Edge list or graph JSON ('-' = stdin)")->required();
    cmd->add_flag("--prove-minimality", search_args.prove_minimality,
                  "Close every (z-1)-set and report the tally");
    cmd->add_flag("--all-witnesses", search_args.all_witnesses, "Report every minimum ZFS");
    cmd->add_flag("--no-pruning", search_args.no_pruning, "Disable lower bounds and filters");
    cmd->add_option("--workers", search_args.workers, "Worker threads (default ZF_WORKERS or all cores)");
    cmd->add_option("--symmetry", search_args.symmetry, "off | on | cross-check");
    cmd->add_option("--max-sets", search_args.max_sets, "Refuse searches beyond this many sets");
  };
  auto* zf_cmd = app.add_subcommand("zf", "Zero forcing number by exhaustive search");
  add_search_flags(zf_cmd);
  auto* pt_cmd = app.add_subcommand("pt", "Propagation time by exhaustive search");
  add_search_flags(pt_cmd);
  pt_cmd->add_flag("--pt-first-witness", search_args.pt_first_witness,
                   "Stop at the first minimum ZFS (pt becomes an upper bound)");
  auto* pc_cmd = app.add_subcommand("pathcover", "Path cover number by exhaustive search");
  pc_cmd->add_option("graph", search_args.graph, "Edge list or graph JSON ('-' = stdin)")->required();
  pc_cmd->add_option("--ceiling", search_args.ceiling, "Largest vertex count accepted");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Compare closed forms against brute force");
  verify_cmd->add_option("--suite", verify_args.suite, "gear | helm | ghelm | all")
      ->check(CLI::IsMember({"gear", "helm", "ghelm", "all"}));
  verify_cmd->add_option("--m-range", verify_args.m_range, "A..B");
  verify_cmd->add_option("--r-range", verify_args.r_range, "A..B (gear)");
  verify_cmd->add_option("--s-range", verify_args.s_range, "A..B (ghelm)");
  verify_cmd->add_option("--workers", verify_args.workers, "Worker threads");
  verify_cmd->add_option("--max-sets", verify_args.max_sets, "Per-case candidate budget");
  verify_cmd->add_option("--symmetry", verify_args.symmetry, "off | on | cross-check");
  verify_cmd->add_flag("--json", verify_args.json, "JSON report on stdout, table on stderr");
  verify_cmd->add_flag("--no-minimality", verify_args.no_minimality, "Skip the (z-1)-set sweep");
  verify_cmd->add_option("--report", verify_args.report, "Also write the JSON report here");

  ForcingArgs dot_args;
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz output with forcing chains");
  dot_cmd->add_option("graph", dot_args.graph, "Edge list or graph JSON ('-' = stdin)")->required();
  dot_cmd->add_option("--blue", dot_args.blue, "Initial blue vertices");
  dot_cmd->add_option("--script", dot_args.script, "Relaxed chronology JSON");
  dot_cmd->add_option("--out", dot_args.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (closure_cmd->parsed()) return run_closure(closure_args);
    if (zf_cmd->parsed()) return run_search(search_args, false);
    if (pt_cmd->parsed()) return run_search(search_args, true);
    if (pc_cmd->parsed()) return run_pathcover(search_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (dot_cmd->parsed()) return run_export_dot(dot_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const zf::Error& e) {
    std::cerr << "error [" << zf::to_string(e.code()) << "]: " << e.what() << '\n';
    switch (e.code()) {
    case zf::ErrorCode::TooLarge:
    case zf::ErrorCode::BudgetExceeded: return kInfeasible;
    case zf::ErrorCode::InvalidForceAtStep:
    case zf::ErrorCode::DuplicateTarget: return kBadScript;
    default: return kUsage;
    }
  }
  return kUsage;
}
