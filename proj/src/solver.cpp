#include "dpc/solver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "dpc/recognizer.hpp"

namespace dpc {

GreedyResult greedy_sequential(const Cover& c, const std::vector<VertexId>& order) {
  std::vector<VertexId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), c.base.vertices().begin(), c.base.vertices().end()))
    throw Error("greedy order is not a permutation of V(G)");

  std::set<Color> chosen;
  Transversal t;
  auto conflicts_with_chosen = [&](Color x) {
    for (EdgeId id : c.conflicts.incident(x)) {
      const auto& pins = c.conflicts.edge(id).pins;
      if (std::all_of(pins.begin(), pins.end(), [&](Color y) { return y == x || chosen.count(y) > 0; })) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    std::optional<Color> pick;
    for (Color x : c.color_set(v))
      if (!conflicts_with_chosen(x)) {
        pick = x;
        break;
      }
    if (!pick) return {std::nullopt, i};
    chosen.insert(*pick);
    t[v] = *pick;
  }
  return {std::move(t), order.size()};
}

std::vector<VertexId> connectivity_order(const Hypergraph& g, VertexId last) {
  if (!g.has_vertex(last)) throw Error("unknown vertex " + std::to_string(last));
  std::vector<VertexId> bfs{last};
  std::set<VertexId> seen{last};
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (EdgeId id : g.incident(bfs[head]))
      for (VertexId w : g.edge(id).pins)
        if (seen.insert(w).second) bfs.push_back(w);
  if (bfs.size() != g.order()) throw Error("connectivity order needs a connected hypergraph");
  std::reverse(bfs.begin(), bfs.end());
  return bfs;
}

BruteForceResult brute_force_transversal(const Cover& c, std::uint64_t budget, Execution exec) {
  const std::vector<VertexId> order(c.base.vertices().begin(), c.base.vertices().end());

  std::map<Color, int> dense;
  std::vector<Color> color_of;
  DenseCover d;
  for (VertexId v : order) {
    std::vector<int> set;
    for (Color x : c.color_set(v)) {
      dense[x] = static_cast<int>(color_of.size());
      set.push_back(static_cast<int>(color_of.size()));
      color_of.push_back(x);
    }
    d.sets.push_back(std::move(set));
  }
  d.color_count = static_cast<int>(color_of.size());
  for (const Edge& e : c.conflicts.edges()) {
    std::vector<int> pins;
    for (Color x : e.pins) {
      auto it = dense.find(x);
      if (it == dense.end()) throw Error("H-edge uses a color outside every X_v");
      pins.push_back(it->second);
    }
    d.edges.push_back(std::move(pins));
  }

  TransversalSearch search(d);
  if (search.space() > budget) return {BruteForceResult::Status::exhausted, std::nullopt};
  auto pick = search.first(exec);
  if (!pick) return {BruteForceResult::Status::none, std::nullopt};
  Transversal t;
  for (std::size_t p = 0; p < order.size(); ++p)
    t[order[p]] = color_of[static_cast<std::size_t>(d.sets[p][static_cast<std::size_t>((*pick)[p])])];
  return {BruteForceResult::Status::found, std::move(t)};
}

bool colorable(const Cover& c, std::uint64_t budget) {
  auto r = brute_force_transversal(c, budget);
  if (r.status == BruteForceResult::Status::exhausted) throw BudgetExhausted("transversal space exceeds budget");
  return r.status == BruteForceResult::Status::found;
}

namespace {

Cover reduce_cover(const Cover& c, VertexId v, Color x) {
  Cover out;
  out.base = shrink(c.base, v);
  const auto removed = ordinary_neighbors(c, x);
  std::vector<Color> kept_colors;
  for (const auto& [u, xs] : c.colors) {
    if (u == v) continue;
    auto& ys = out.colors[u];
    for (Color y : xs)
      if (!std::binary_search(removed.begin(), removed.end(), y)) ys.push_back(y);
    kept_colors.insert(kept_colors.end(), ys.begin(), ys.end());
  }
  std::sort(kept_colors.begin(), kept_colors.end());
  std::vector<Edge> edges;
  for (const Edge& e : c.conflicts.edges()) {
    Edge rest{e.id, {}};
    for (Color y : e.pins)
      if (y != x) rest.pins.push_back(y);
    if (rest.pins.size() < 2) continue;
    if (!std::all_of(rest.pins.begin(), rest.pins.end(),
                     [&](Color y) { return std::binary_search(kept_colors.begin(), kept_colors.end(), y); }))
      continue;
    out.origin[e.id] = c.origin.at(e.id);
    edges.push_back(std::move(rest));
  }
  out.conflicts = Hypergraph(std::move(kept_colors), std::move(edges));
  return out;
}

std::optional<VertexId> slack_vertex(const Cover& c) {
  for (VertexId v : c.base.vertices())
    if (c.color_set(v).size() > degree(c.base, v)) return v;
  return std::nullopt;
}

Transversal greedy_with_slack(const Cover& c, VertexId slack) {
  auto r = greedy_sequential(c, connectivity_order(c.base, slack));
  if (!r.coloring) throw std::logic_error("greedy failed on a cover with slack at the final vertex");
  return *r.coloring;
}

// Exact search by reduction: color a non-separating vertex v with each x in
// turn and recurse on (G, X, H)/(v, x). Degree-feasibility is preserved, so
// any slack is finished off greedily.
std::optional<Transversal> reduce_search(const Cover& c, std::uint64_t& nodes, std::uint64_t budget) {
  if (++nodes > budget) throw BudgetExhausted("reduction search exceeded its node budget");
  const Hypergraph& g = c.base;
  if (g.order() == 1) {
    const VertexId v = g.vertices()[0];
    const auto& xs = c.color_set(v);
    if (xs.empty()) return std::nullopt;
    return Transversal{{v, xs.front()}};
  }
  if (auto s = slack_vertex(c)) return greedy_with_slack(c, *s);

  const auto separating = separating_vertices(g);
  VertexId v = g.vertices()[0];
  for (VertexId u : g.vertices())
    if (!std::binary_search(separating.begin(), separating.end(), u)) {
      v = u;
      break;
    }
  for (Color x : c.color_set(v)) {
    auto sub = reduce_search(reduce_cover(c, v, x), nodes, budget);
    if (!sub) continue;
    (*sub)[v] = x;
    if (!is_independent_transversal(c, *sub))
      throw std::logic_error("lifted transversal is not independent in the original cover");
    return sub;
  }
  return std::nullopt;
}

using ColorPairs = std::vector<std::vector<Color>>;

std::size_t class_count(const BlockWitness& w) {
  switch (w.family) {
    case Family::K: return static_cast<std::size_t>(w.n - 1);
    case Family::OddC:
    case Family::EvenC: return 2;
    case Family::E: return 1;
  }
  return 0;
}

bool is_twist(const BlockWitness& w, VertexId a, VertexId b) {
  return w.twist && std::minmax(a, b) == std::minmax(w.twist->first, w.twist->second);
}

// Shape of the block itself (tK_n, tC_n in the witnessed order, or <e>).
std::optional<std::string> check_block_shape(const Hypergraph& block, const BlockWitness& w) {
  const std::size_t n = w.vertices.size();
  for (const Edge& e : block.edges())
    if (e.pins.size() > 2 && w.family != Family::E) return "block has a hyperedge";
  switch (w.family) {
    case Family::K:
      if (w.t < 1) return "t must be positive";
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          if (multiplicity(block, w.vertices[p], w.vertices[q]) != static_cast<std::size_t>(w.t))
            return "block is not tK_n";
      break;
    case Family::OddC:
    case Family::EvenC: {
      const bool odd = w.family == Family::OddC;
      if (odd && (n < 5 || n % 2 == 0)) return "odd C needs odd n >= 5";
      if (!odd && (n < 4 || n % 2 != 0)) return "even C needs even n >= 4";
      if (w.t < 1) return "t must be positive";
      for (std::size_t p = 0; p < n; ++p)
        if (multiplicity(block, w.vertices[p], w.vertices[(p + 1) % n]) != static_cast<std::size_t>(w.t))
          return "block is not tC_n in the witnessed order";
      if (block.size() != n * static_cast<std::size_t>(w.t)) return "block has edges off the cycle";
      if (odd && w.twist) return "odd C carries a twist";
      if (!odd) {
        if (!w.twist) return "even C without twisted pair";
        bool on_cycle = false;
        for (std::size_t p = 0; p < n; ++p) on_cycle |= is_twist(w, w.vertices[p], w.vertices[(p + 1) % n]);
        if (!on_cycle) return "twisted pair is not a cycle edge";
      }
      break;
    }
    case Family::E: {
      if (block.size() != 1 || n < 2) return "block is not a single edge";
      if (w.t != 1) return "E blocks have t = 1";
      std::vector<VertexId> sorted = w.vertices;
      std::sort(sorted.begin(), sorted.end());
      if (block.edges()[0].pins != sorted) return "edge does not span the block";
      break;
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_block(const Cover& c, const Hypergraph& block, const BlockWitness& w) {
  const std::size_t n = w.vertices.size();
  if (w.n != static_cast<int>(n)) return "n disagrees with the vertex list";
  if (auto why = check_block_shape(block, w)) return why;

  if (w.partition.size() != n) return "partition count mismatch";
  const std::size_t classes = class_count(w);
  const auto size = static_cast<std::size_t>(w.family == Family::E ? 1 : w.t);
  for (std::size_t p = 0; p < n; ++p) {
    if (w.partition[p].size() != classes) return "partition class count mismatch";
    const auto& xs = c.color_set(w.vertices[p]);
    std::set<Color> seen;
    for (const auto& cls : w.partition[p]) {
      if (cls.size() != size) return "partition class size mismatch";
      for (Color x : cls) {
        if (!std::binary_search(xs.begin(), xs.end(), x)) return "partition uses a color outside X_v";
        if (!seen.insert(x).second) return "partition classes overlap";
      }
    }
  }

  ColorPairs expected;
  auto complete = [&](const std::vector<Color>& a, const std::vector<Color>& b) {
    for (Color x : a)
      for (Color y : b) expected.push_back({std::min(x, y), std::max(x, y)});
  };
  switch (w.family) {
    case Family::K:
      for (std::size_t i = 0; i < classes; ++i)
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = p + 1; q < n; ++q) complete(w.partition[p][i], w.partition[q][i]);
      break;
    case Family::OddC:
    case Family::EvenC:
      for (std::size_t p = 0; p < n; ++p) {
        const std::size_t q = (p + 1) % n;
        const bool crossed = is_twist(w, w.vertices[p], w.vertices[q]);
        for (std::size_t i = 0; i < 2; ++i) complete(w.partition[p][i], w.partition[q][crossed ? 1 - i : i]);
      }
      break;
    case Family::E: {
      std::vector<Color> pins;
      for (const auto& classes_of_v : w.partition) pins.push_back(classes_of_v[0][0]);
      std::sort(pins.begin(), pins.end());
      expected.push_back(std::move(pins));
      break;
    }
  }

  ColorPairs actual;
  for (EdgeId h : w.h_edges) {
    if (!c.conflicts.has_edge(h)) return "witness names an H-edge that does not exist";
    auto o = c.origin.find(h);
    if (o == c.origin.end() || !block.has_edge(o->second)) return "witness H-edge originates outside the block";
    actual.push_back(c.conflicts.edge(h).pins);
  }
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected != actual) return "H^B does not match the family structure";
  return std::nullopt;
}

std::vector<Color> neighbour_key(const Cover& c, Color x) { return ordinary_neighbors(c, x); }

std::vector<Color> intersect(const std::vector<Color>& a, const std::vector<Color>& b) {
  std::vector<Color> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Colors of one vertex grouped by H-neighbourhood; groups ordered by smallest color.
std::vector<std::vector<Color>> group_by_neighbourhood(const Cover& c, const std::vector<Color>& xs) {
  std::map<std::vector<Color>, std::vector<Color>> groups;
  for (Color x : xs) groups[neighbour_key(c, x)].push_back(x);
  std::vector<std::vector<Color>> out;
  for (auto& [key, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

Certificate single_vertex_certificate(VertexId v) {
  BlockWitness w;
  w.family = Family::K;
  w.n = 1;
  w.t = 1;
  w.vertices = {v};
  w.partition = {{}};
  return Certificate{{std::move(w)}, {}};
}

}  // namespace

Configuration reduce_at(const Configuration& cfg, VertexId v, Color x) {
  const Hypergraph& g = cfg.graph();
  if (!g.has_vertex(v)) throw Error("unknown vertex " + std::to_string(v));
  if (g.order() < 2) throw Error("reduction needs at least two vertices");
  const auto separating = separating_vertices(g);
  if (std::binary_search(separating.begin(), separating.end(), v))
    throw Error("vertex " + std::to_string(v) + " is separating");
  const auto& xs = cfg.cover.color_set(v);
  if (!std::binary_search(xs.begin(), xs.end(), x))
    throw Error("color " + std::to_string(x) + " is not in X_" + std::to_string(v));
  return Configuration{reduce_cover(cfg.cover, v, x), std::nullopt};
}

CertificateCheck check_certificate(const Configuration& cfg, const Certificate& cert) {
  auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
  const Cover& c = cfg.cover;
  const Hypergraph& g = c.base;
  if (auto report = validate_cover(c); !report.ok()) return fail("invalid cover: " + report.message);
  if (g.empty() || !is_connected(g)) return fail("G must be non-empty and connected");

  const auto decomposition = blocks(g);
  if (cert.blocks.size() != decomposition.blocks.size()) return fail("block count mismatch");
  std::map<std::vector<VertexId>, std::size_t> block_of;
  for (std::size_t b = 0; b < decomposition.blocks.size(); ++b) {
    const auto vs = decomposition.blocks[b].vertices();
    block_of[{vs.begin(), vs.end()}] = b;
  }
  std::set<std::size_t> used_blocks;
  for (const BlockWitness& w : cert.blocks) {
    std::vector<VertexId> key = w.vertices;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) return fail("witness repeats a vertex");
    auto it = block_of.find(key);
    if (it == block_of.end()) return fail("witness vertex set is not a block of G");
    if (!used_blocks.insert(it->second).second) return fail("block listed twice");
    if (auto why = check_block(c, decomposition.blocks[it->second], w))
      return fail(std::string(to_string(w.family)) + " block: " + *why);
  }

  std::set<EdgeId> seen;
  auto claim = [&](EdgeId h) { return c.conflicts.has_edge(h) && seen.insert(h).second; };
  for (const BlockWitness& w : cert.blocks)
    for (EdgeId h : w.h_edges)
      if (!claim(h)) return fail("block H-edge sets are not pairwise disjoint");
  for (EdgeId h : cert.extra_edges)
    if (!claim(h)) return fail("extra edge is unknown or already claimed by a block");
  if (seen.size() != c.conflicts.size()) return fail("block H-edges and extra edges do not make up E(H)");

  std::map<VertexId, std::vector<Color>> assembled;
  for (const BlockWitness& w : cert.blocks)
    for (VertexId v : w.vertices) {
      auto part = w.colors_of(v);
      assembled[v].insert(assembled[v].end(), part.begin(), part.end());
    }
  for (VertexId v : g.vertices()) {
    auto& xs = assembled[v];
    std::sort(xs.begin(), xs.end());
    if (xs != c.color_set(v)) return fail("X_" + std::to_string(v) + " is not the disjoint union of its block parts");
  }
  return {true, {}};
}

std::optional<Certificate> recover_certificate(const Configuration& cfg) {
  const Cover& c = cfg.cover;
  const Hypergraph& g = c.base;
  if (g.empty() || !is_connected(g) || !validate_cover(c).ok()) return std::nullopt;
  if (g.order() == 1) {
    if (!c.color_set(g.vertices()[0]).empty()) return std::nullopt;
    return single_vertex_certificate(g.vertices()[0]);
  }

  const auto decomposition = blocks(g);
  std::map<EdgeId, std::size_t> edge_block;
  for (std::size_t b = 0; b < decomposition.blocks.size(); ++b)
    for (const Edge& e : decomposition.blocks[b].edges()) edge_block[e.id] = b;

  std::map<Color, std::size_t> color_block;
  std::vector<std::vector<EdgeId>> block_edges(decomposition.blocks.size());
  for (const Edge& h : c.conflicts.edges()) {
    const std::size_t b = edge_block.at(c.origin.at(h.id));
    block_edges[b].push_back(h.id);
    for (Color x : h.pins) {
      auto [it, fresh] = color_block.emplace(x, b);
      if (!fresh && it->second != b) return std::nullopt;
    }
  }
  if (color_block.size() != c.conflicts.order()) return std::nullopt;

  Certificate cert;
  for (std::size_t b = 0; b < decomposition.blocks.size(); ++b) {
    const Hypergraph& block = decomposition.blocks[b];
    const BrickClass brick = classify_brick(block);
    auto local = [&](VertexId v) {
      std::vector<Color> out;
      for (Color x : c.color_set(v))
        if (color_block.at(x) == b) out.push_back(x);
      return out;
    };

    BlockWitness w;
    w.vertices = brick.order;
    w.n = brick.tag == BrickTag::HYPEREDGE ? brick.arity : brick.n;
    w.t = brick.tag == BrickTag::HYPEREDGE ? 1 : brick.t;
    w.h_edges = block_edges[b];
    const std::size_t n = w.vertices.size();

    switch (brick.tag) {
      case BrickTag::NONE: return std::nullopt;
      case BrickTag::HYPEREDGE:
        w.family = Family::E;
        for (VertexId v : w.vertices) w.partition.push_back({local(v)});
        break;
      case BrickTag::TKN: {
        w.family = Family::K;
        auto classes = group_by_neighbourhood(c, local(w.vertices[0]));
        if (classes.size() + 1 != n) return std::nullopt;
        w.partition.push_back(classes);
        for (std::size_t p = 1; p < n; ++p) {
          const auto xs = local(w.vertices[p]);
          std::vector<std::vector<Color>> own;
          for (const auto& cls : classes) own.push_back(intersect(ordinary_neighbors(c, cls.front()), xs));
          w.partition.push_back(std::move(own));
        }
        break;
      }
      case BrickTag::TCN: {
        auto classes = group_by_neighbourhood(c, local(w.vertices[0]));
        if (classes.size() != 2) return std::nullopt;
        w.partition.push_back(classes);
        for (std::size_t p = 1; p < n; ++p) {
          const auto xs = local(w.vertices[p]);
          const auto& prev = w.partition[p - 1];
          if (prev[0].empty() || prev[1].empty()) return std::nullopt;
          w.partition.push_back({intersect(ordinary_neighbors(c, prev[0].front()), xs),
                                 intersect(ordinary_neighbors(c, prev[1].front()), xs)});
        }
        if (w.partition.back()[0].empty()) return std::nullopt;
        const auto closing = intersect(ordinary_neighbors(c, w.partition.back()[0].front()), local(w.vertices[0]));
        const bool crossed = closing == w.partition[0][1];
        if (!crossed && closing != w.partition[0][0]) return std::nullopt;
        if (n % 2 == 1 && !crossed) {
          w.family = Family::OddC;
        } else if (n % 2 == 0 && crossed) {
          w.family = Family::EvenC;
          w.twist = std::minmax(w.vertices.back(), w.vertices.front());
        } else {
          return std::nullopt;
        }
        break;
      }
    }
    cert.blocks.push_back(std::move(w));
  }
  if (!check_certificate(cfg, cert).ok) return std::nullopt;
  return cert;
}

SolveOutcome solve_degree_feasible(const Configuration& cfg, SolveOptions options) {
  const Cover& c = cfg.cover;
  const Hypergraph& g = c.base;
  if (auto report = validate_cover(c); !report.ok()) throw Error("invalid cover: " + report.message);
  if (g.empty() || !is_connected(g)) throw Error("solver needs a non-empty connected hypergraph");
  if (!is_degree_feasible(c)) throw Error("cover is not degree-feasible");

  if (g.order() == 1) {
    const VertexId v = g.vertices()[0];
    if (!c.color_set(v).empty()) return Transversal{{v, c.color_set(v).front()}};
    return single_vertex_certificate(v);
  }
  if (auto s = slack_vertex(c)) return greedy_with_slack(c, *s);
  if (auto cert = recover_certificate(cfg)) return *cert;

  std::optional<Transversal> found;
  try {
    std::uint64_t nodes = 0;
    found = reduce_search(c, nodes, options.budget);
  } catch (const BudgetExhausted&) {
    auto r = brute_force_transversal(c, options.budget);
    if (r.status == BruteForceResult::Status::exhausted)
      throw BudgetExhausted("undecided: neither a coloring nor a certificate within the budget");
    found = r.transversal;
  }
  if (found) return *found;

  // Uncolorable but not of exact K/C/E block shape: strip H down to a minimal
  // uncolorable spanning subcover, whose block structure is then exact.
  Cover minimal = c;
  for (const Edge& h : c.conflicts.edges()) {
    Cover candidate = without_conflict(minimal, h.id);
    auto r = brute_force_transversal(candidate, options.budget);
    if (r.status == BruteForceResult::Status::exhausted)
      throw BudgetExhausted("undecided: minimisation exceeded the budget");
    if (r.status == BruteForceResult::Status::none) minimal = std::move(candidate);
  }
  auto cert = recover_certificate(Configuration{minimal, std::nullopt});
  if (!cert) throw std::logic_error("minimal uncolorable subcover has no K/C/E block structure");
  for (const Edge& h : c.conflicts.edges())
    if (!minimal.conflicts.has_edge(h.id)) cert->extra_edges.push_back(h.id);
  if (auto check = check_certificate(cfg, *cert); !check.ok)
    throw std::logic_error("assembled certificate fails verification: " + check.reason);
  return *cert;
}

std::optional<bool> is_minimal_uncolorable(const Configuration& cfg, std::uint64_t budget) {
  auto base = brute_force_transversal(cfg.cover, budget);
  if (base.status == BruteForceResult::Status::exhausted) return std::nullopt;
  if (base.status == BruteForceResult::Status::found) return false;
  for (const Edge& h : cfg.cover.conflicts.edges()) {
    auto r = brute_force_transversal(without_conflict(cfg.cover, h.id), budget);
    if (r.status == BruteForceResult::Status::exhausted) return std::nullopt;
    if (r.status == BruteForceResult::Status::none) return false;
  }
  return true;
}

}  // namespace dpc
