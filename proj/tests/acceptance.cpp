// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "dpc/configgen.hpp"
#include "dpc/recognizer.hpp"
#include "dpc/solver.hpp"
#include "support/oracles.hpp"

using namespace dpc;
namespace orc = dpc::oracle;

namespace {

// Pinned thresholds.
constexpr std::uint64_t kOracleBudget = 1'000'000;  // max transversals per oracle call
constexpr double kGridSeconds = 120.0;              // C1 total
constexpr int kMergeTrees = 50;                     // C2
constexpr int kMaxLeaves = 3;
constexpr int kSamplesPerGraph = 1000;  // C3
constexpr double kChromaticSeconds = 60.0;  // C4, per graph
constexpr int kReductionSamples = 500;      // C6
constexpr int kMinFinds = 10;               // C7
constexpr int kTargetFinds = 25;
constexpr int kFindAttempts = 200'000;
constexpr std::uint64_t kChromaticBudget = 50'000'000;  // C5, covers per k
constexpr int kMaxFailures = 0;                          // every criterion

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
  int checked = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
  void expect(bool ok, const std::string& why) {
    ++checked;
    if (!ok) fail(why);
  }
};

bool report(int id, const std::string& title, const Tally& t, const std::string& extra, bool extra_ok = true) {
  const bool pass = t.failures <= kMaxFailures && extra_ok;
  std::printf("%s C%d %s: %d checks, %d failures%s%s%s\n", pass ? "PASS" : "FAIL", id, title.c_str(), t.checked,
              t.failures, extra.empty() ? "" : "; ", extra.c_str(),
              t.failures ? (" [first: " + t.first_failure + "]").c_str() : "");
  std::fflush(stdout);
  return pass;
}

std::uint64_t transversal_space(const Cover& c) {
  std::uint64_t s = 1;
  for (const auto& [v, xs] : c.colors) {
    if (xs.empty()) return 0;
    if (s > kOracleBudget) return s;
    s *= xs.size();
  }
  return s;
}

// Criterion 8 runs alongside 1-3 on every instance they touch.
Tally soundness;

void check_solver(const Configuration& cfg, bool colorable, const std::string& name) {
  const Configuration bare{cfg.cover, std::nullopt};
  try {
    const auto out = solve_degree_feasible(bare, SolveOptions{kOracleBudget});
    if (const auto* t = std::get_if<Transversal>(&out)) {
      soundness.expect(colorable, name + ": coloring for an uncolorable cover");
      soundness.expect(is_independent_transversal(bare.cover, *t), name + ": coloring not independent");
    } else {
      soundness.expect(!colorable, name + ": certificate for a colorable cover");
      const auto r = check_certificate(bare, std::get<Certificate>(out));
      soundness.expect(r.ok, name + ": certificate rejected (" + r.reason + ")");
    }
  } catch (const BudgetExhausted&) {
    soundness.fail(name + ": undecided");
  } catch (const std::exception& e) {
    soundness.fail(name + ": " + e.what());
  }
}

std::vector<LeafSpec> grid() {
  std::vector<LeafSpec> out;
  for (int n = 1; n <= 4; ++n)
    for (int t = 1; t <= 2; ++t) out.push_back({Family::K, n, t, std::nullopt});
  for (int n : {5, 7})
    for (int t : {1, 2}) out.push_back({Family::OddC, n, t, std::nullopt});
  for (int n : {4, 6})
    for (int t : {1, 2}) out.push_back({Family::EvenC, n, t, std::nullopt});
  for (int a : {2, 3, 4}) out.push_back({Family::E, a, 1, std::nullopt});
  return out;
}

bool criterion1() {
  Tally t;
  const auto t0 = Clock::now();
  for (const LeafSpec& spec : grid()) {
    const Configuration cfg = build_leaf(spec);
    const std::string name = to_string(spec);
    t.expect(transversal_space(cfg.cover) <= kOracleBudget, name + " exceeds the oracle budget");
    t.expect(!orc::colorable(cfg.cover), name + " colorable");
    for (const Edge& h : cfg.cover.conflicts.edges())
      t.expect(orc::colorable(without_conflict(cfg.cover, h.id)), name + " stays uncolorable without H-edge " + std::to_string(h.id));
    check_solver(cfg, false, name);
  }
  const double secs = seconds_since(t0);
  std::ostringstream extra;
  extra << grid().size() << " configurations in " << secs << " s (limit " << kGridSeconds << " s)";
  return report(1, "generated families are minimal uncolorable", t, extra.str(), secs < kGridSeconds);
}

MergeTree random_tree(std::mt19937_64& rng, const std::vector<LeafSpec>& leaves, int count) {
  auto pick_leaf = [&] {
    return MergeTree::make_leaf(leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)]);
  };
  std::function<MergeTree(int)> build = [&](int k) -> MergeTree {
    if (k == 1) return pick_leaf();
    const int left = std::uniform_int_distribution<int>(1, k - 1)(rng);
    MergeTree l = build(left), r = build(k - left);
    const auto nl = static_cast<int>(constructible(l).graph().order());
    const auto nr = static_cast<int>(constructible(r).graph().order());
    return MergeTree::make_merge(std::move(l), std::move(r), std::uniform_int_distribution<int>(0, nl - 1)(rng),
                                 std::uniform_int_distribution<int>(0, nr - 1)(rng));
  };
  return build(count);
}

bool criterion2() {
  Tally t;
  std::mt19937_64 rng(2002);
  const auto leaves = grid();
  int built = 0, rejected = 0;
  while (built < kMergeTrees) {
    const int count = std::uniform_int_distribution<int>(1, kMaxLeaves)(rng);
    const MergeTree tree = random_tree(rng, leaves, count);
    const Configuration cfg = constructible(tree);
    if (transversal_space(cfg.cover) > kOracleBudget || cfg.cover.conflicts.size() == 0) {
      ++rejected;
      continue;
    }
    const std::string name = "tree" + std::to_string(built);
    ++built;
    const auto minimal = is_minimal_uncolorable(cfg, kOracleBudget);
    t.expect(minimal.has_value() && *minimal, name + " merged configuration not minimal uncolorable");
    check_solver(cfg, false, name);

    // Same tree with one leaf missing one H-edge.
    int leaves_seen = 0, victim = -1;
    std::vector<int> with_edges;
    constructible(tree, [&](const LeafSpec& s) {
      Configuration c = build_leaf(s);
      if (c.cover.conflicts.size() > 0) with_edges.push_back(leaves_seen);
      ++leaves_seen;
      return c;
    });
    victim = with_edges[std::uniform_int_distribution<std::size_t>(0, with_edges.size() - 1)(rng)];
    leaves_seen = 0;
    const Configuration variant = constructible(tree, [&](const LeafSpec& s) {
      Configuration c = build_leaf(s);
      if (leaves_seen++ == victim) {
        const auto& hs = c.cover.conflicts.edges();
        c.cover = without_conflict(c.cover, hs[std::uniform_int_distribution<std::size_t>(0, hs.size() - 1)(rng)].id);
        c.witness.reset();
      }
      return c;
    });
    const auto variant_minimal = is_minimal_uncolorable(variant, kOracleBudget);
    t.expect(variant_minimal.has_value() && !*variant_minimal, name + " variant still minimal uncolorable");
    const auto bf = brute_force_transversal(variant.cover, kOracleBudget);
    t.expect(bf.status == BruteForceResult::Status::found, name + " variant uncolorable");
    check_solver(variant, bf.status == BruteForceResult::Status::found, name + "-variant");
  }
  return report(2, "merging preserves minimal uncolorability", t,
                std::to_string(built) + " trees, " + std::to_string(rejected) + " resampled over budget");
}

bool criterion3(const std::vector<orc::CorpusEntry>& corpus) {
  Tally t;
  std::mt19937_64 rng(3003);
  int bricks = 0, sampled = 0;
  for (const auto& entry : corpus) {
    const auto verdict = dp_degree_colorable(entry.graph);
    if (!verdict.colorable) {
      ++bricks;
      const Configuration cfg = hyperbrick_configuration(entry.graph);
      t.expect(!orc::colorable(cfg.cover), entry.name + " hyperbrick cover colorable");
      check_solver(cfg, false, entry.name);
      continue;
    }
    for (int s = 0; s < kSamplesPerGraph; ++s) {
      const Configuration cfg{random_degree_cover(entry.graph, rng), std::nullopt};
      const auto bf = brute_force_transversal(cfg.cover, kOracleBudget, Execution::serial);
      const bool ok = bf.status == BruteForceResult::Status::found && is_independent_transversal(cfg.cover, *bf.transversal);
      t.expect(ok, entry.name + " sample " + std::to_string(s) + " uncolorable");
      check_solver(cfg, bf.status == BruteForceResult::Status::found, entry.name + "#" + std::to_string(s));
      ++sampled;
    }
  }
  return report(3, "degree colorability decision matches the oracle", t,
                std::to_string(corpus.size()) + " hypergraphs, " + std::to_string(bricks) + " all-hyperbrick, " +
                    std::to_string(sampled) + " sampled covers");
}

bool criterion4() {
  Tally t;
  struct Case {
    const char* name;
    Hypergraph g;
    int expected;
  };
  const std::vector<Case> cases{{"K2", orc::complete(2), 2},
                                {"K3", orc::complete(3), 3},
                                {"C4", orc::cycle(4), 3},
                                {"C5", orc::cycle(5), 3}};
  std::ostringstream extra;
  bool fast = true;
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    const auto r = dp_chromatic_exact(c.g, 5, kOracleBudget);
    const double secs = seconds_since(t0);
    fast = fast && secs < kChromaticSeconds;
    t.expect(r.status == ChromaticResult::Status::found && r.value == c.expected,
             std::string(c.name) + " gave " + std::to_string(r.value));
    extra << c.name << "=" << r.value << " (" << secs << " s) ";
  }
  extra << "limit " << kChromaticSeconds << " s each";
  return report(4, "exact DP-chromatic numbers", t, extra.str(), fast);
}

bool criterion5(const std::vector<orc::CorpusEntry>& corpus) {
  Tally t;
  for (const auto& entry : corpus) {
    const Hypergraph& g = entry.graph;
    const int chi = orc::chromatic_number(g);
    const int chi_l = orc::list_chromatic_number(g);
    const auto col = static_cast<int>(coloring_number(g));
    const auto delta1 = static_cast<int>(max_degree(g)) + 1;
    const auto dp = dp_chromatic_exact(g, col + 1, kChromaticBudget);
    std::ostringstream vals;
    vals << entry.name << ": chi=" << chi << " chi_l=" << chi_l << " chi_dp=" << dp.value << " col=" << col
         << " D+1=" << delta1;
    t.expect(dp.status == ChromaticResult::Status::found, vals.str() + " (chi_dp not determined)");
    t.expect(chi <= chi_l && chi_l <= dp.value && dp.value <= col && col <= delta1, vals.str());
  }
  return report(5, "chi <= chi_l <= chi_DP <= col <= Delta+1", t, std::to_string(corpus.size()) + " hypergraphs");
}

bool criterion6() {
  Tally t;
  std::mt19937_64 rng(6006);
  int lifted = 0;
  for (int s = 0; s < kReductionSamples; ++s) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const Hypergraph g = orc::random_connected(rng, n, 3, std::uniform_int_distribution<int>(0, 3)(rng));
    std::map<VertexId, std::size_t> sizes;
    for (VertexId v : g.vertices()) sizes[v] = degree(g, v) + std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    SamplingOptions opt;
    opt.maximal_matchings = std::bernoulli_distribution(0.7)(rng);
    const Configuration cfg{random_cover(g, sizes, rng, opt), std::nullopt};
    const auto sep = blocks(g).separating_vertices;
    std::vector<VertexId> candidates;
    for (VertexId v : g.vertices())
      if (!std::binary_search(sep.begin(), sep.end(), v)) candidates.push_back(v);
    const VertexId v = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    const auto& xs = cfg.cover.color_set(v);
    const Color x = xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
    const std::string name = "sample " + std::to_string(s);
    const Configuration red = reduce_at(cfg, v, x);
    t.expect(validate_cover(red.cover).ok(), name + " reduced cover invalid");
    t.expect(is_degree_feasible(red.cover), name + " reduced cover not degree-feasible");
    if (auto tr = orc::first_transversal(red.cover)) {
      (*tr)[v] = x;
      t.expect(is_independent_transversal(cfg.cover, *tr), name + " lifted transversal not independent");
      ++lifted;
    }
  }
  return report(6, "reduction invariants", t,
                std::to_string(kReductionSamples) + " reductions, " + std::to_string(lifted) + " lifted colorings");
}

// Small graphs whose blocks are hyperbricks, merged at random vertices.
Hypergraph random_brick_graph(std::mt19937_64& rng) {
  const std::vector<const char*> bricks{"K:n=2,t=1", "K:n=2,t=2", "K:n=3,t=1", "K:n=4,t=1", "Codd:n=5,t=1",
                                        "Ceven:n=4,t=1", "E:arity=3", "E:arity=4", "K:n=3,t=2"};
  for (;;) {
    MergeTree tree = MergeTree::make_leaf(parse_leaf_spec(bricks[std::uniform_int_distribution<std::size_t>(0, bricks.size() - 1)(rng)]));
    const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int i = 0; i < extra; ++i) {
      const auto n = static_cast<int>(constructible(tree).graph().order());
      MergeTree leaf = MergeTree::make_leaf(parse_leaf_spec(bricks[std::uniform_int_distribution<std::size_t>(0, bricks.size() - 1)(rng)]));
      const auto m = static_cast<int>(constructible(leaf).graph().order());
      tree = MergeTree::make_merge(std::move(tree), std::move(leaf), std::uniform_int_distribution<int>(0, n - 1)(rng),
                                   std::uniform_int_distribution<int>(0, m - 1)(rng));
    }
    Hypergraph g = constructible(tree).graph();
    if (g.order() <= 5) return g;
  }
}

Cover minimise(Cover c) {
  for (const Edge& h : std::vector<Edge>(c.conflicts.edges().begin(), c.conflicts.edges().end())) {
    Cover candidate = without_conflict(c, h.id);
    if (brute_force_transversal(candidate, kOracleBudget, Execution::serial).status == BruteForceResult::Status::none)
      c = std::move(candidate);
  }
  return c;
}

// Structural checks on a minimal uncolorable degree-feasible configuration.
void check_structure(const Cover& c, Tally& t, const std::string& name) {
  const Hypergraph& g = c.base;
  const auto d = blocks(g);
  const auto owners = c.owners();
  for (VertexId v : g.vertices()) t.expect(c.color_set(v).size() == degree(g, v), name + " (a) |X_v| != d(v)");

  for (VertexId z : g.vertices()) {
    if (std::binary_search(d.separating_vertices.begin(), d.separating_vertices.end(), z) || g.order() < 2) continue;
    for (Color x : c.color_set(z)) {
      const auto nx = ordinary_neighbors(c, x);
      for (VertexId v : g.vertices()) {
        if (v == z) continue;
        const auto& xv = c.color_set(v);
        std::size_t hits = 0;
        for (Color y : nx) hits += std::binary_search(xv.begin(), xv.end(), y);
        t.expect(hits == multiplicity(g, v, z), name + " (b) |N(x) cap X_v| != mu(v,z)");
      }
    }
  }

  for (const Edge& e : g.edges())
    if (e.pins.size() > 2) t.expect(is_bridge(g, e.id), name + " (c) hyperedge is not a bridge");

  // X_u^B: colors of X_u on H-edges that originate in B.
  for (const Hypergraph& b : d.blocks) {
    std::set<std::size_t> degrees;
    for (VertexId v : b.vertices()) degrees.insert(degree(b, v));
    t.expect(degrees.size() == 1, name + " (d) block not regular");
    bool hyper = false;
    for (const Edge& e : b.edges()) hyper |= e.pins.size() > 2;
    if (hyper) continue;
    std::map<VertexId, std::set<Color>> part;
    for (const Edge& h : c.conflicts.edges()) {
      if (!b.has_edge(c.origin.at(h.id))) continue;
      for (Color x : h.pins) part[owners.at(x)].insert(x);
    }
    for (VertexId u : b.vertices())
      for (VertexId v : b.vertices()) {
        if (u >= v) continue;
        const std::size_t mu = multiplicity(b, u, v);
        std::map<Color, std::size_t> deg;
        for (Color x : part[u]) deg[x] = 0;
        for (Color x : part[v]) deg[x] = 0;
        for (const Edge& h : c.conflicts.edges()) {
          if (h.pins.size() != 2) continue;
          const bool across = (part[u].count(h.pins[0]) && part[v].count(h.pins[1])) ||
                              (part[v].count(h.pins[0]) && part[u].count(h.pins[1]));
          if (!across) continue;
          ++deg[h.pins[0]];
          ++deg[h.pins[1]];
        }
        for (const auto& [x, k] : deg) t.expect(k == mu, name + " (d) H[X_u cup X_v] not mu-regular");
      }
  }

  for (VertexId v : g.vertices()) {
    Cover rest;
    std::vector<VertexId> others;
    for (VertexId u : g.vertices())
      if (u != v) others.push_back(u);
    rest.base = induced(g, others);
    std::vector<Color> colors;
    for (VertexId u : others) {
      rest.colors[u] = c.color_set(u);
      colors.insert(colors.end(), c.color_set(u).begin(), c.color_set(u).end());
    }
    std::sort(colors.begin(), colors.end());
    std::vector<Edge> edges;
    for (const Edge& h : c.conflicts.edges())
      if (std::all_of(h.pins.begin(), h.pins.end(), [&](Color x) { return std::binary_search(colors.begin(), colors.end(), x); }))
        edges.push_back(h);
    rest.conflicts = Hypergraph(colors, edges);
    t.expect(orc::colorable(rest), name + " (e) no independent set missing only X_v");
  }
}

bool criterion7(const std::vector<orc::CorpusEntry>& corpus) {
  Tally t;
  std::mt19937_64 rng(7007);
  std::vector<Hypergraph> pool;
  for (const auto& e : corpus)
    if (e.graph.order() >= 2 && !dp_degree_colorable(e.graph).colorable) pool.push_back(e.graph);
  int finds = 0, attempts = 0;
  std::set<std::string> shapes;
  while (finds < kTargetFinds && attempts < kFindAttempts) {
    ++attempts;
    const Hypergraph g = attempts % 2 ? random_brick_graph(rng)
                                      : pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const Cover c = random_degree_cover(g, rng);
    if (brute_force_transversal(c, kOracleBudget, Execution::serial).status != BruteForceResult::Status::none) continue;
    const Cover m = minimise(c);
    const std::string name = "find " + std::to_string(finds);
    ++finds;
    t.expect(orc::minimal_uncolorable(m), name + " not minimal uncolorable");
    check_structure(m, t, name);
    const Configuration cfg{m, std::nullopt};
    const auto cert = recover_certificate(cfg);
    t.expect(cert.has_value(), name + " no witness recovered");
    if (cert) {
      t.expect(cert->extra_edges.empty(), name + " witness needs extra edges");
      t.expect(check_certificate(cfg, *cert).ok, name + " recovered witness rejected");
      std::string shape;
      for (const auto& b : cert->blocks) shape += std::string(to_string(b.family)) + std::to_string(b.n) + "," + std::to_string(b.t) + " ";
      shapes.insert(shape);
    }
    t.expect(orc::isomorphic(m, hyperbrick_configuration(g).cover), name + " not isomorphic to the constructible cover");
  }
  return report(7, "structure of minimal uncolorable finds", t,
                std::to_string(finds) + " finds in " + std::to_string(attempts) + " attempts, " +
                    std::to_string(shapes.size()) + " distinct block shapes; at least " + std::to_string(kMinFinds) +
                    " finds required",
                finds >= kMinFinds);
}

// An exception inside a criterion counts as its failure.
bool guarded(int id, const std::function<bool()>& run) {
  try {
    return run();
  } catch (const std::exception& e) {
    std::printf("FAIL C%d aborted: %s\n", id, e.what());
    return false;
  }
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const auto corpus = orc::corpus();
  bool all = true;
  all &= guarded(1, criterion1);
  all &= guarded(2, criterion2);
  all &= guarded(3, [&] { return criterion3(corpus); });
  all &= guarded(4, criterion4);
  all &= guarded(5, [&] { return criterion5(corpus); });
  all &= guarded(6, criterion6);
  all &= guarded(7, [&] { return criterion7(corpus); });
  all &= report(8, "solver outcomes verify and agree with the oracle", soundness, "instances of criteria 1-3");
  std::printf("%s acceptance (%.1f s)\n", all ? "PASS" : "FAIL", seconds_since(t0));
  return all ? 0 : 1;
}
