// dpcolor: command-line front end. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 ok, 1 verified negative, 2 input error, 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "dpc/configgen.hpp"
#include "dpc/json_io.hpp"
#include "dpc/recognizer.hpp"
#include "dpc/solver.hpp"

namespace {

using namespace dpc;

enum Exit { ok = 0, negative = 1, input_error = 2, exhausted = 3 };

struct Options {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::string out;
  std::string dot;
};

void emit(const Json& payload, const Options& opt) {
  if (opt.out.empty()) {
    std::cout << payload.dump(2) << "\n";
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw Error("cannot write " + opt.out);
  f << payload.dump(2) << "\n";
  std::cout << Json{{"written", opt.out}}.dump() << "\n";
}

void write_dot(const Cover& c, const Options& opt) {
  if (opt.dot.empty()) return;
  std::ofstream f(opt.dot);
  if (!f) throw Error("cannot write " + opt.dot);
  f << cover_to_dot(c);
}

Json outcome_json(const SolveOutcome& outcome) {
  if (const auto* t = std::get_if<Transversal>(&outcome)) return {{"outcome", "coloring"}, {"coloring", to_json(*t)}};
  return {{"outcome", "certificate"}, {"certificate", to_json(std::get<Certificate>(outcome))}};
}

int cmd_solve(const std::string& path, const Options& opt) {
  const Configuration cfg = configuration_from_json(read_json_file(path));
  write_dot(cfg.cover, opt);
  const auto outcome = solve_degree_feasible(cfg, SolveOptions{opt.budget});
  emit(outcome_json(outcome), opt);
  const bool colored = std::holds_alternative<Transversal>(outcome);
  std::cerr << (colored ? "colorable" : "uncolorable; certificate verified") << "\n";
  return colored ? ok : negative;
}

int cmd_gen(const std::string& spec, const std::string& tree, const std::string& random_graph, const Options& opt) {
  Configuration cfg;
  if (!random_graph.empty()) {
    std::mt19937_64 rng(opt.seed);
    cfg.cover = random_degree_cover(hypergraph_from_json(read_json_file(random_graph)), rng);
  } else if (!tree.empty()) {
    cfg = constructible(merge_tree_from_json(read_json_file(tree)));
  } else if (!spec.empty()) {
    cfg = build_leaf(parse_leaf_spec(spec));
  } else {
    throw Error("gen needs a spec, --tree or --random");
  }
  if (auto report = validate_cover(cfg.cover); !report.ok())
    throw std::logic_error("generated cover is invalid: " + report.message);
  write_dot(cfg.cover, opt);
  emit(to_json(cfg), opt);
  return ok;
}

Json recognize_component(const Hypergraph& g) {
  Json report = to_json(dp_degree_colorable(g));
  const BrooksBound b = brooks_dp_bound(g);
  report["brooks"] = {{"upper", b.upper}, {"tight", b.tight}};
  report["coloring_number"] = coloring_number(g);
  report["vertices"] = std::vector<VertexId>(g.vertices().begin(), g.vertices().end());
  return report;
}

int cmd_recognize(const std::string& path, const Options& opt) {
  const Hypergraph g = hypergraph_from_json(read_json_file(path));
  if (g.empty()) throw Error("hypergraph has no vertices");
  if (is_connected(g)) {
    emit(recognize_component(g), opt);
    return ok;
  }
  Json parts = Json::array();
  for (const Hypergraph& c : components(g)) parts.push_back(recognize_component(c));
  emit(Json{{"components", parts}}, opt);
  return ok;
}

int cmd_from_lists(const std::string& graph_path, const std::string& lists_path, bool solve, const Options& opt) {
  const Hypergraph g = hypergraph_from_json(read_json_file(graph_path));
  const ListAssignment lists = lists_from_json(read_json_file(lists_path));
  for (VertexId v : g.vertices())
    if (!lists.count(v)) throw Error("no list for vertex " + std::to_string(v));
  const ListCover lc = cover_from_lists(g, lists);
  write_dot(lc.cover, opt);
  Json list_color = Json::object();
  for (const auto& [x, l] : lc.list_color) list_color[std::to_string(x)] = l;
  Json payload{{"cover", to_json(lc.cover)}, {"list_color", list_color}};
  if (!solve) {
    emit(payload, opt);
    return ok;
  }

  std::optional<Transversal> coloring;
  const Configuration cfg{lc.cover, std::nullopt};
  if (!g.empty() && is_connected(g) && is_degree_feasible(lc.cover)) {
    auto outcome = solve_degree_feasible(cfg, SolveOptions{opt.budget});
    if (auto* t = std::get_if<Transversal>(&outcome)) coloring = *t;
    else payload["certificate"] = to_json(std::get<Certificate>(outcome));
  } else {
    auto r = brute_force_transversal(lc.cover, opt.budget);
    if (r.status == BruteForceResult::Status::exhausted) throw BudgetExhausted("list coloring search exceeded budget");
    coloring = r.transversal;
  }
  if (coloring) {
    Json colors = Json::object();
    for (const auto& [v, x] : *coloring) colors[std::to_string(v)] = lc.list_color.at(x);
    payload["outcome"] = "coloring";
    payload["coloring"] = to_json(*coloring);
    payload["list_coloring"] = colors;
  } else {
    payload["outcome"] = "uncolorable";
  }
  emit(payload, opt);
  return coloring ? ok : negative;
}

int cmd_verify_cover(const std::string& path, const Options& opt) {
  const Cover c = cover_from_json(read_json_file(path));
  const CoverReport r = validate_cover(c);
  emit(Json{{"valid", r.ok()}, {"violation", to_string(r.violation)}, {"message", r.message}, {"witness", r.witness}},
       opt);
  if (!r.ok()) std::cerr << "invalid cover: " << r.message << "\n";
  return r.ok() ? ok : negative;
}

// The second file is either a certificate or a transversal; without it the
// cover's own "witness" is checked.
int cmd_verify_cert(const std::string& cover_path, const std::string& cert_path, const Options& opt) {
  const Json cover_json = read_json_file(cover_path);
  const Configuration cfg = configuration_from_json(cover_json);
  Json proof;
  if (!cert_path.empty()) {
    proof = read_json_file(cert_path);
    if (proof.contains("certificate")) proof = proof["certificate"];
    else if (proof.contains("coloring")) proof = proof["coloring"];
  } else if (cfg.witness) {
    proof = to_json(*cfg.witness);
  } else {
    throw Error("no certificate given and the cover carries no witness");
  }

  if (proof.contains("blocks")) {
    const CertificateCheck r = check_certificate(cfg, certificate_from_json(proof));
    emit(Json{{"kind", "certificate"}, {"ok", r.ok}, {"reason", r.reason}}, opt);
    if (!r.ok) std::cerr << "certificate rejected: " << r.reason << "\n";
    return r.ok ? ok : negative;
  }
  if (auto report = validate_cover(cfg.cover); !report.ok()) throw Error("invalid cover: " + report.message);
  bool good = false;
  std::string reason;
  try {
    good = is_independent_transversal(cfg.cover, transversal_from_json(proof));
    if (!good) reason = "transversal spans an H-edge";
  } catch (const Error& e) {
    reason = e.what();
  }
  emit(Json{{"kind", "coloring"}, {"ok", good}, {"reason", reason}}, opt);
  return good ? ok : negative;
}

int cmd_chromatic(const std::string& path, int k_max, const Options& opt) {
  const Hypergraph g = hypergraph_from_json(read_json_file(path));
  const ChromaticResult r = dp_chromatic_exact(g, k_max, opt.budget);
  Json payload{{"covers_checked", r.covers_checked}};
  switch (r.status) {
    case ChromaticResult::Status::found:
      payload["status"] = "found";
      payload["chi_dp"] = r.value;
      break;
    case ChromaticResult::Status::above_max: payload["status"] = "above_max"; break;
    case ChromaticResult::Status::exhausted: payload["status"] = "exhausted"; break;
  }
  if (r.last_failure) payload["failing_cover"] = to_json(*r.last_failure);
  emit(payload, opt);
  if (r.status == ChromaticResult::Status::exhausted) return exhausted;
  return r.status == ChromaticResult::Status::found ? ok : negative;
}

int cmd_reduce(const std::string& path, VertexId v, Color x, const Options& opt) {
  const Configuration cfg = configuration_from_json(read_json_file(path));
  if (auto report = validate_cover(cfg.cover); !report.ok()) throw Error("invalid cover: " + report.message);
  const Configuration reduced = reduce_at(cfg, v, x);
  write_dot(reduced.cover, opt);
  emit(to_json(reduced), opt);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DP-coloring of multi-edge hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--budget", opt.budget, "Search budget")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for sampling")->capture_default_str();
  app.add_option("--out", opt.out, "Write the JSON payload here instead of stdout");
  app.add_option("--dot", opt.dot, "Write a DOT dump of H here");

  std::string input, second, tree, random_graph;
  bool solve = false;
  int k_max = 4;
  VertexId vertex = 0;
  Color color = 0;

  auto* solve_cmd = app.add_subcommand("solve", "Color a degree-feasible cover or certify it is uncolorable");
  solve_cmd->add_option("cover", input)->required();
  auto* gen_cmd = app.add_subcommand("gen", "Generate a K/C/E configuration, a merge, or a random degree cover");
  gen_cmd->add_option("spec", input, "e.g. K:n=3,t=2");
  gen_cmd->add_option("--tree", tree, "Merge tree JSON file");
  gen_cmd->add_option("--random", random_graph, "Hypergraph JSON file; draws a random degree-tight cover");
  auto* rec_cmd = app.add_subcommand("recognize", "Block report, DP-degree colorability and Brooks bound");
  rec_cmd->add_option("graph", input)->required();
  auto* lists_cmd = app.add_subcommand("from-lists", "Cover of a list assignment");
  lists_cmd->add_option("graph", input)->required();
  lists_cmd->add_option("lists", second)->required();
  lists_cmd->add_flag("--solve", solve, "Also decide colorability");
  auto* vcover_cmd = app.add_subcommand("verify-cover", "Check the cover conditions");
  vcover_cmd->add_option("cover", input)->required();
  auto* vcert_cmd = app.add_subcommand("verify-cert", "Check a certificate or a coloring against a cover");
  vcert_cmd->add_option("cover", input)->required();
  vcert_cmd->add_option("proof", second);
  auto* chrom_cmd = app.add_subcommand("chromatic", "Exact DP-chromatic number of a small hypergraph");
  chrom_cmd->add_option("graph", input)->required();
  chrom_cmd->add_option("--kmax", k_max)->capture_default_str();
  auto* reduce_cmd = app.add_subcommand("reduce", "Apply the reduction at vertex v and color x");
  reduce_cmd->add_option("cover", input)->required();
  reduce_cmd->add_option("--vertex", vertex)->required();
  reduce_cmd->add_option("--color", color)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*solve_cmd) return cmd_solve(input, opt);
    if (*gen_cmd) return cmd_gen(input, tree, random_graph, opt);
    if (*rec_cmd) return cmd_recognize(input, opt);
    if (*lists_cmd) return cmd_from_lists(input, second, solve, opt);
    if (*vcover_cmd) return cmd_verify_cover(input, opt);
    if (*vcert_cmd) return cmd_verify_cert(input, second, opt);
    if (*chrom_cmd) return cmd_chromatic(input, k_max, opt);
    if (*reduce_cmd) return cmd_reduce(input, vertex, color, opt);
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    std::cout << Json{{"outcome", "undecided"}, {"error", e.what()}}.dump() << "\n";
    return exhausted;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << Json{{"error", e.what()}}.dump() << "\n";
    return input_error;
  }
  return input_error;
}
