#include "dpc/cover.hpp"

#include <algorithm>
#include <set>

namespace dpc {

const std::vector<Color>& Cover::color_set(VertexId v) const {
  auto it = colors.find(v);
  if (it == colors.end()) throw Error("no color set for vertex " + std::to_string(v));
  return it->second;
}

std::map<Color, VertexId> Cover::owners() const {
  std::map<Color, VertexId> out;
  for (const auto& [v, xs] : colors)
    for (Color x : xs) out.emplace(x, v);
  return out;
}

const char* to_string(CoverViolation v) {
  switch (v) {
    case CoverViolation::none: return "ok";
    case CoverViolation::missing_color_set: return "missing_color_set";
    case CoverViolation::overlapping_sets: return "overlapping_sets";
    case CoverViolation::unknown_color: return "unknown_color";
    case CoverViolation::not_independent: return "not_independent";
    case CoverViolation::missing_origin: return "missing_origin";
    case CoverViolation::matching_shape: return "matching_shape";
    case CoverViolation::not_a_matching: return "not_a_matching";
  }
  return "unknown";
}

namespace {

CoverReport fail(CoverViolation v, std::string message, std::vector<std::int64_t> witness) {
  return CoverReport{v, std::move(message), std::move(witness)};
}

}  // namespace

CoverReport validate_cover(const Cover& c) {
  const Hypergraph& g = c.base;
  const Hypergraph& h = c.conflicts;

  // C1
  for (VertexId v : g.vertices())
    if (!c.colors.count(v)) return fail(CoverViolation::missing_color_set, "X_v missing", {v});
  for (const auto& [v, xs] : c.colors)
    if (!g.has_vertex(v)) return fail(CoverViolation::missing_color_set, "X_v given for a non-vertex", {v});

  std::map<Color, VertexId> owner;
  for (const auto& [v, xs] : c.colors)
    for (Color x : xs) {
      auto [it, fresh] = owner.emplace(x, v);
      if (!fresh) return fail(CoverViolation::overlapping_sets, "color shared by two color sets", {x, it->second, v});
    }
  for (const auto& [x, v] : owner)
    if (!h.has_vertex(x)) return fail(CoverViolation::unknown_color, "color missing from V(H)", {x});
  for (Color x : h.vertices())
    if (!owner.count(x)) return fail(CoverViolation::unknown_color, "H-vertex outside every X_v", {x});

  // C2
  std::map<EdgeId, std::set<Color>> used;
  for (const Edge& e : h.edges()) {
    std::set<VertexId> pin_owners;
    for (Color x : e.pins) pin_owners.insert(owner.at(x));
    if (pin_owners.size() == 1)
      return fail(CoverViolation::not_independent, "X_v not independent", {e.id, *pin_owners.begin()});

    auto o = c.origin.find(e.id);
    if (o == c.origin.end()) return fail(CoverViolation::missing_origin, "H-edge without origin", {e.id});
    if (!g.has_edge(o->second))
      return fail(CoverViolation::missing_origin, "origin is not an edge of G", {e.id, o->second});

    const auto& base_pins = g.edge(o->second).pins;
    if (pin_owners.size() != e.pins.size() ||
        !std::equal(pin_owners.begin(), pin_owners.end(), base_pins.begin(), base_pins.end()))
      return fail(CoverViolation::matching_shape, "H-edge does not take one color per vertex of its origin",
                  {e.id, o->second});

    auto& taken = used[o->second];
    for (Color x : e.pins)
      if (!taken.insert(x).second)
        return fail(CoverViolation::not_a_matching, "M_e is not a matching", {e.id, o->second, x});
  }
  for (const auto& [he, ge] : c.origin)
    if (!h.has_edge(he)) return fail(CoverViolation::missing_origin, "origin given for a non-edge of H", {he});
  return {};
}

bool is_independent_transversal(const Cover& c, const Transversal& t) {
  std::set<Color> chosen;
  for (VertexId v : c.base.vertices()) {
    auto it = t.find(v);
    if (it == t.end()) throw Error("transversal misses vertex " + std::to_string(v));
    const auto& xs = c.color_set(v);
    if (std::find(xs.begin(), xs.end(), it->second) == xs.end())
      throw Error("transversal picks color " + std::to_string(it->second) + " outside X_" + std::to_string(v));
    chosen.insert(it->second);
  }
  if (t.size() != c.base.order()) throw Error("transversal names a vertex outside G");
  for (const Edge& e : c.conflicts.edges())
    if (std::all_of(e.pins.begin(), e.pins.end(), [&](Color x) { return chosen.count(x) > 0; })) return false;
  return true;
}

ListCover cover_from_lists(const Hypergraph& g, const ListAssignment& lists) {
  ListCover out;
  Cover& c = out.cover;
  c.base = g;
  std::map<std::pair<VertexId, int>, Color> id_of;
  std::vector<Color> all;
  Color next = 0;
  for (VertexId v : g.vertices()) {
    auto it = lists.find(v);
    if (it == lists.end()) throw Error("no list for vertex " + std::to_string(v));
    std::set<int> entries(it->second.begin(), it->second.end());
    auto& xs = c.colors[v];
    for (int entry : entries) {
      id_of[{v, entry}] = next;
      out.list_color[next] = entry;
      xs.push_back(next);
      all.push_back(next++);
    }
  }
  std::vector<Edge> h_edges;
  EdgeId next_edge = 0;
  for (const Edge& e : g.edges()) {
    std::set<int> common(lists.at(e.pins[0]).begin(), lists.at(e.pins[0]).end());
    for (std::size_t i = 1; i < e.pins.size(); ++i) {
      const auto& li = lists.at(e.pins[i]);
      std::set<int> keep;
      for (int x : li)
        if (common.count(x)) keep.insert(x);
      common = std::move(keep);
    }
    for (int x : common) {
      Edge he{next_edge++, {}};
      for (VertexId v : e.pins) he.pins.push_back(id_of.at({v, x}));
      c.origin[he.id] = e.id;
      h_edges.push_back(std::move(he));
    }
  }
  c.conflicts = Hypergraph(std::move(all), std::move(h_edges));
  return out;
}

bool is_degree_feasible(const Cover& c) {
  for (VertexId v : c.base.vertices())
    if (c.color_set(v).size() < degree(c.base, v)) return false;
  return true;
}

std::vector<Color> ordinary_neighbors(const Cover& c, Color x) {
  std::set<Color> out;
  for (EdgeId id : c.conflicts.incident(x)) {
    const auto& pins = c.conflicts.edge(id).pins;
    if (pins.size() == 2) out.insert(pins[0] == x ? pins[1] : pins[0]);
  }
  return {out.begin(), out.end()};
}

Cover without_conflict(const Cover& c, EdgeId h) {
  Cover out = c;
  out.conflicts = remove_edge(c.conflicts, h);
  out.origin.erase(h);
  return out;
}

Cover random_cover(const Hypergraph& g, const std::map<VertexId, std::size_t>& sizes, std::mt19937_64& rng,
                   SamplingOptions options) {
  Cover c;
  c.base = g;
  std::vector<Color> all;
  Color next = 0;
  for (VertexId v : g.vertices()) {
    auto& xs = c.colors[v];
    for (std::size_t i = 0; i < sizes.at(v); ++i) {
      xs.push_back(next);
      all.push_back(next++);
    }
  }
  std::vector<Edge> h_edges;
  EdgeId next_edge = 0;
  for (const Edge& e : g.edges()) {
    std::size_t m = SIZE_MAX;
    for (VertexId v : e.pins) m = std::min(m, c.colors[v].size());
    if (!options.maximal_matchings) m = std::uniform_int_distribution<std::size_t>(0, m)(rng);
    std::vector<std::vector<Color>> picks;
    for (VertexId v : e.pins) {
      auto xs = c.colors[v];
      std::shuffle(xs.begin(), xs.end(), rng);
      xs.resize(m);
      picks.push_back(std::move(xs));
    }
    for (std::size_t j = 0; j < m; ++j) {
      Edge he{next_edge++, {}};
      for (const auto& p : picks) he.pins.push_back(p[j]);
      c.origin[he.id] = e.id;
      h_edges.push_back(std::move(he));
    }
  }
  c.conflicts = Hypergraph(std::move(all), std::move(h_edges));
  return c;
}

Cover random_degree_cover(const Hypergraph& g, std::mt19937_64& rng, SamplingOptions options) {
  std::map<VertexId, std::size_t> sizes;
  for (VertexId v : g.vertices()) sizes[v] = degree(g, v);
  return random_cover(g, sizes, rng, options);
}

}  // namespace dpc
