#include "dpc/recognizer.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "dpc/cover.hpp"

namespace dpc {

const char* to_string(BrickTag tag) {
  switch (tag) {
    case BrickTag::TKN: return "TKN";
    case BrickTag::TCN: return "TCN";
    case BrickTag::HYPEREDGE: return "HYPEREDGE";
    case BrickTag::NONE: return "NONE";
  }
  return "?";
}

namespace {

// Distinct neighbours of v with their multiplicities; ordinary edges only.
std::map<VertexId, std::size_t> neighbour_counts(const Hypergraph& g, VertexId v) {
  std::map<VertexId, std::size_t> out;
  for (EdgeId id : g.incident(v))
    for (VertexId w : g.edge(id).pins)
      if (w != v) ++out[w];
  return out;
}

}  // namespace

BrickClass classify_brick(const Hypergraph& b) {
  if (b.empty() || !is_block(b)) throw Error("classify_brick needs a block");
  const auto vs = b.vertices();
  BrickClass out;
  out.order.assign(vs.begin(), vs.end());
  const auto n = static_cast<int>(vs.size());
  if (n == 1) {
    out.tag = BrickTag::TKN;
    out.n = out.t = 1;
    return out;
  }
  const bool has_hyperedge =
      std::any_of(b.edges().begin(), b.edges().end(), [](const Edge& e) { return e.pins.size() > 2; });
  if (has_hyperedge) {
    if (b.size() == 1 && b.edges()[0].pins.size() == vs.size()) {
      out.tag = BrickTag::HYPEREDGE;
      out.arity = n;
      out.n = n;
      out.t = 1;
    }
    return out;
  }

  const std::size_t t = multiplicity(b, vs[0], vs[1]);
  bool complete = t > 0;
  for (std::size_t p = 0; complete && p < vs.size(); ++p)
    for (std::size_t q = p + 1; complete && q < vs.size(); ++q) complete = multiplicity(b, vs[p], vs[q]) == t;
  if (complete) {
    out.tag = BrickTag::TKN;
    out.n = n;
    out.t = static_cast<int>(t);
    return out;
  }

  if (n < 4) return out;
  std::map<VertexId, std::map<VertexId, std::size_t>> nbrs;
  std::size_t cycle_t = 0;
  for (VertexId v : vs) {
    nbrs[v] = neighbour_counts(b, v);
    if (nbrs[v].size() != 2) return out;
    for (const auto& [w, mu] : nbrs[v]) {
      if (cycle_t == 0) cycle_t = mu;
      if (mu != cycle_t) return out;
    }
  }
  // Connected with every vertex on exactly two neighbours: a single cycle.
  std::vector<VertexId> order{vs[0]};
  VertexId prev = vs[0], cur = nbrs[vs[0]].begin()->first;
  while (cur != vs[0]) {
    order.push_back(cur);
    const auto& two = nbrs[cur];
    const VertexId next = two.begin()->first == prev ? std::next(two.begin())->first : two.begin()->first;
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) return out;
  out.tag = BrickTag::TCN;
  out.n = n;
  out.t = static_cast<int>(cycle_t);
  out.order = std::move(order);
  return out;
}

DegreeColorability dp_degree_colorable(const Hypergraph& g) {
  if (g.empty() || !is_connected(g)) throw Error("degree colorability needs a non-empty connected hypergraph");
  DegreeColorability out;
  for (const Hypergraph& b : blocks(g).blocks) {
    const auto vs = b.vertices();
    BlockReport r{{vs.begin(), vs.end()}, classify_brick(b)};
    if (r.brick.tag == BrickTag::NONE) out.colorable = true;
    out.blocks.push_back(std::move(r));
  }
  return out;
}

std::size_t coloring_number(const Hypergraph& g) {
  if (g.empty()) return 0;
  std::map<VertexId, std::size_t> deg;
  for (VertexId v : g.vertices()) deg[v] = degree(g, v);
  std::set<EdgeId> gone;
  std::size_t worst = 0;
  while (!deg.empty()) {
    auto pick = std::min_element(deg.begin(), deg.end(),
                                 [](const auto& a, const auto& b) { return a.second < b.second; });
    const VertexId v = pick->first;
    worst = std::max(worst, pick->second);
    deg.erase(pick);
    for (EdgeId id : g.incident(v)) {
      if (!gone.insert(id).second) continue;
      for (VertexId w : g.edge(id).pins)
        if (auto it = deg.find(w); it != deg.end()) --it->second;
    }
  }
  return worst + 1;
}

BrooksBound brooks_dp_bound(const Hypergraph& g) {
  if (g.empty() || !is_connected(g)) throw Error("Brooks bound needs a non-empty connected hypergraph");
  BrooksBound out;
  out.upper = max_degree(g) + 1;
  out.tight = is_block(g) && classify_brick(g).tag != BrickTag::NONE;
  return out;
}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// One pin of an H-matching family: colors j of `ref` meet color perm(j) of `pin`.
struct Slot {
  EdgeId edge;
  std::size_t ref;  // vertex indices into g.vertices()
  std::size_t pin;
  int free_index;   // -1 for a normalised identity matching
};

struct CoverFamily {
  int k = 0;
  std::vector<std::vector<Slot>> edges;  // per G-edge, one slot per non-reference pin
  std::vector<std::size_t> refs;
  int free_slots = 0;
  std::vector<std::vector<int>> perms;
  std::uint64_t total = 1;
};

CoverFamily plan_covers(const Hypergraph& g, int k) {
  CoverFamily f;
  f.k = k;
  const auto vs = g.vertices();
  auto index_of = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<char> seen(vs.size(), 0);
  std::set<EdgeId> placed;
  for (std::size_t root = 0; root < vs.size(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t r = queue[head];
      for (EdgeId id : g.incident(vs[r])) {
        if (!placed.insert(id).second) continue;
        std::vector<Slot> slots;
        for (VertexId w : g.edge(id).pins) {
          const std::size_t wi = index_of(w);
          if (wi == r) continue;
          int free_index = -1;
          if (seen[wi]) {
            free_index = f.free_slots++;
          } else {
            seen[wi] = 1;
            queue.push_back(wi);
          }
          slots.push_back({id, r, wi, free_index});
        }
        f.edges.push_back(std::move(slots));
        f.refs.push_back(r);
      }
    }
  }
  std::vector<int> p(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) p[static_cast<std::size_t>(j)] = j;
  do f.perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  for (int s = 0; s < f.free_slots; ++s) f.total = saturating_mul(f.total, f.perms.size());
  return f;
}

std::vector<std::size_t> unrank(const CoverFamily& f, std::uint64_t idx) {
  std::vector<std::size_t> digits(static_cast<std::size_t>(f.free_slots));
  for (auto& d : digits) {
    d = static_cast<std::size_t>(idx % f.perms.size());
    idx /= f.perms.size();
  }
  return digits;
}

Color color_id(const CoverFamily& f, std::size_t vertex, int j) { return static_cast<Color>(vertex) * f.k + j; }

// H-edges as dense color lists; the order matches the ids used by to_cover.
std::vector<std::vector<int>> h_edges(const CoverFamily& f, const std::vector<std::size_t>& digits) {
  std::vector<std::vector<int>> out;
  for (std::size_t e = 0; e < f.edges.size(); ++e)
    for (int j = 0; j < f.k; ++j) {
      std::vector<int> pins{color_id(f, f.refs[e], j)};
      for (const Slot& s : f.edges[e]) {
        const int image = s.free_index < 0 ? j : f.perms[digits[static_cast<std::size_t>(s.free_index)]][static_cast<std::size_t>(j)];
        pins.push_back(color_id(f, s.pin, image));
      }
      std::sort(pins.begin(), pins.end());
      out.push_back(std::move(pins));
    }
  return out;
}

std::vector<EdgeId> h_origins(const CoverFamily& f) {
  std::vector<EdgeId> out;
  for (std::size_t e = 0; e < f.edges.size(); ++e)
    for (int j = 0; j < f.k; ++j) out.push_back(f.edges[e].front().edge);
  return out;
}

DenseCover to_dense(const Hypergraph& g, const CoverFamily& f, const std::vector<std::size_t>& digits) {
  DenseCover d;
  std::vector<std::size_t> order(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const auto vs = g.vertices();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return degree(g, vs[a]) > degree(g, vs[b]); });
  for (std::size_t i : order) {
    std::vector<int> set;
    for (int j = 0; j < f.k; ++j) set.push_back(color_id(f, i, j));
    d.sets.push_back(std::move(set));
  }
  d.edges = h_edges(f, digits);
  d.color_count = static_cast<int>(g.order()) * f.k;
  return d;
}

Cover to_cover(const Hypergraph& g, const CoverFamily& f, const std::vector<std::size_t>& digits) {
  Cover c;
  c.base = g;
  std::vector<Color> all;
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto& xs = c.colors[g.vertices()[i]];
    for (int j = 0; j < f.k; ++j) xs.push_back(color_id(f, i, j));
    all.insert(all.end(), xs.begin(), xs.end());
  }
  const auto pins = h_edges(f, digits);
  const auto origins = h_origins(f);
  std::vector<Edge> edges;
  for (std::size_t h = 0; h < pins.size(); ++h) {
    edges.push_back({static_cast<EdgeId>(h), pins[h]});
    c.origin[static_cast<EdgeId>(h)] = origins[h];
  }
  c.conflicts = Hypergraph(std::move(all), std::move(edges));
  return c;
}

}  // namespace

ChromaticResult dp_chromatic_exact(const Hypergraph& g, int k_max, std::uint64_t budget, Execution exec) {
  ChromaticResult out;
  if (g.empty()) {
    out.status = ChromaticResult::Status::found;
    out.value = 0;
    return out;
  }
  for (int k = 0; k <= k_max; ++k) {
    const CoverFamily f = plan_covers(g, k);
    if (k == 0) {
      out.last_failure = to_cover(g, f, {});
      continue;
    }
    if (f.total > budget) {
      out.status = ChromaticResult::Status::exhausted;
      return out;
    }
    auto bad = first_match(
        f.total,
        [&](std::uint64_t idx) { return !TransversalSearch(to_dense(g, f, unrank(f, idx))).first(Execution::serial); },
        exec);
    out.covers_checked += bad ? *bad + 1 : f.total;
    if (!bad) {
      out.status = ChromaticResult::Status::found;
      out.value = k;
      return out;
    }
    out.last_failure = to_cover(g, f, unrank(f, *bad));
  }
  out.status = ChromaticResult::Status::above_max;
  return out;
}

}  // namespace dpc
