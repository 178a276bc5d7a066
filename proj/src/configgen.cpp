#include "dpc/configgen.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>
#include <sstream>

namespace dpc {

namespace {

class CoverBuilder {
 public:
  explicit CoverBuilder(const Hypergraph& g) {
    cover_.base = g;
    for (VertexId v : g.vertices()) cover_.colors[v];
  }

  std::vector<Color> fresh(VertexId v, int count) {
    std::vector<Color> out;
    for (int i = 0; i < count; ++i) {
      out.push_back(next_color_);
      cover_.colors[v].push_back(next_color_);
      all_colors_.push_back(next_color_++);
    }
    return out;
  }

  EdgeId add(std::vector<Color> pins, EdgeId origin) {
    const EdgeId id = next_edge_++;
    cover_.origin[id] = origin;
    h_edges_.push_back(Edge{id, std::move(pins)});
    return id;
  }

  Cover finish() {
    for (auto& [v, xs] : cover_.colors) std::sort(xs.begin(), xs.end());
    cover_.conflicts = Hypergraph(std::move(all_colors_), std::move(h_edges_));
    return std::move(cover_);
  }

 private:
  Cover cover_;
  std::vector<Color> all_colors_;
  std::vector<Edge> h_edges_;
  Color next_color_ = 0;
  EdgeId next_edge_ = 0;
};

std::vector<EdgeId> edges_between(const Hypergraph& g, VertexId a, VertexId b) {
  std::vector<EdgeId> out;
  for (EdgeId id : g.incident(a)) {
    const auto& pins = g.edge(id).pins;
    if (pins.size() == 2 && (pins[0] == b || pins[1] == b)) out.push_back(id);
  }
  return out;
}

// Lays out the family cover of one hyperbrick block. For the C families the
// crossed pair is (order[twist_at], order[twist_at + 1 mod n]).
BlockWitness append_brick(CoverBuilder& builder, const Hypergraph& block, Family family,
                          const std::vector<VertexId>& order, int t, std::optional<std::size_t> twist_at) {
  BlockWitness w;
  w.family = family;
  w.n = static_cast<int>(order.size());
  w.t = family == Family::E ? 1 : t;
  w.vertices = order;
  const std::size_t n = order.size();

  auto pair_edges = [&](std::size_t p, std::size_t q) {
    auto ids = edges_between(block, order[p], order[q]);
    if (ids.size() != static_cast<std::size_t>(t)) throw Error("block multiplicity does not match t");
    return ids;
  };
  auto complete_bipartite = [&](const std::vector<Color>& a, const std::vector<Color>& b,
                                const std::vector<EdgeId>& origins) {
    // M_{origins[s]} takes the pairs (a_j, b_k) with j + k ≡ s (mod t): a perfect matching per origin.
    for (int j = 0; j < t; ++j)
      for (int k = 0; k < t; ++k) w.h_edges.push_back(builder.add({a[j], b[k]}, origins[(j + k) % t]));
  };

  switch (family) {
    case Family::K: {
      for (std::size_t p = 0; p < n; ++p) {
        w.partition.emplace_back();
        for (std::size_t i = 0; i + 1 < n; ++i) w.partition[p].push_back(builder.fresh(order[p], t));
      }
      for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = p + 1; q < n; ++q)
            complete_bipartite(w.partition[p][i], w.partition[q][i], pair_edges(p, q));
      break;
    }
    case Family::OddC:
    case Family::EvenC: {
      for (std::size_t p = 0; p < n; ++p) w.partition.push_back({builder.fresh(order[p], t), builder.fresh(order[p], t)});
      for (std::size_t p = 0; p < n; ++p) {
        const std::size_t q = (p + 1) % n;
        const bool crossed = twist_at && *twist_at == p;
        const auto origins = pair_edges(p, q);
        for (std::size_t i = 0; i < 2; ++i)
          complete_bipartite(w.partition[p][i], w.partition[q][crossed ? 1 - i : i], origins);
      }
      if (family == Family::EvenC) {
        VertexId a = order[*twist_at], b = order[(*twist_at + 1) % n];
        w.twist = std::make_pair(std::min(a, b), std::max(a, b));
      }
      break;
    }
    case Family::E: {
      if (block.size() != 1) throw Error("E block must be a single edge");
      std::vector<Color> pins;
      for (std::size_t p = 0; p < n; ++p) {
        auto x = builder.fresh(order[p], 1);
        w.partition.push_back({x});
        pins.push_back(x[0]);
      }
      w.h_edges.push_back(builder.add(std::move(pins), block.edges()[0].id));
      break;
    }
  }
  return w;
}

std::vector<VertexId> iota_vertices(int n) {
  std::vector<VertexId> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

Hypergraph cycle_multigraph(int n, int t) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (int k = 0; k + 1 < n; ++k) pairs.emplace_back(k, k + 1);
  pairs.emplace_back(0, n - 1);
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::vector<VertexId>> incidences;
  for (auto [a, b] : pairs)
    for (int c = 0; c < t; ++c) incidences.push_back({a, b});
  return Hypergraph::from_incidences(iota_vertices(n), incidences);
}

Configuration single_block(const Hypergraph& g, Family family, int t, std::optional<std::size_t> twist_at) {
  CoverBuilder builder(g);
  auto w = append_brick(builder, g, family, iota_vertices(static_cast<int>(g.order())), t, twist_at);
  return Configuration{builder.finish(), Certificate{{std::move(w)}, {}}};
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw Error("bad integer for " + what + ": '" + text + "'");
  return value;
}

Configuration relabel_vertices(const Configuration& c, const std::function<VertexId(VertexId)>& f) {
  Configuration out;
  std::vector<VertexId> vertices;
  for (VertexId v : c.graph().vertices()) vertices.push_back(f(v));
  std::vector<Edge> edges;
  for (Edge e : c.graph().edges()) {
    for (VertexId& v : e.pins) v = f(v);
    edges.push_back(std::move(e));
  }
  out.cover.base = Hypergraph(std::move(vertices), std::move(edges));
  for (const auto& [v, xs] : c.cover.colors) out.cover.colors[f(v)] = xs;
  out.cover.conflicts = c.cover.conflicts;
  out.cover.origin = c.cover.origin;
  if (c.witness) {
    out.witness = *c.witness;
    for (auto& b : out.witness->blocks) {
      for (VertexId& v : b.vertices) v = f(v);
      if (b.twist) b.twist = std::make_pair(std::min(f(b.twist->first), f(b.twist->second)),
                                           std::max(f(b.twist->first), f(b.twist->second)));
    }
  }
  return out;
}

}  // namespace

Configuration k_configuration(int n, int t) {
  if (n < 1 || t < 1) throw Error("K-configuration needs n >= 1 and t >= 1");
  std::vector<std::vector<VertexId>> incidences;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = 0; c < t; ++c) incidences.push_back({a, b});
  return single_block(Hypergraph::from_incidences(iota_vertices(n), incidences), Family::K, t, std::nullopt);
}

Configuration odd_c_configuration(int n, int t) {
  if (n < 5 || n % 2 == 0) throw Error("odd C-configuration needs odd n >= 5");
  if (t < 1) throw Error("C-configuration needs t >= 1");
  return single_block(cycle_multigraph(n, t), Family::OddC, t, std::nullopt);
}

Configuration even_c_configuration(int n, int t, std::optional<std::pair<VertexId, VertexId>> twist) {
  if (n < 4 || n % 2 != 0) throw Error("even C-configuration needs even n >= 4");
  if (t < 1) throw Error("C-configuration needs t >= 1");
  auto [a, b] = twist.value_or(std::make_pair(VertexId{0}, VertexId(n - 1)));
  if (a > b) std::swap(a, b);
  std::size_t at = 0;
  if (a >= 0 && b < n && b == a + 1)
    at = static_cast<std::size_t>(a);
  else if (a == 0 && b == n - 1)
    at = static_cast<std::size_t>(n - 1);
  else
    throw Error("twisted pair {" + std::to_string(a) + "," + std::to_string(b) + "} is not an edge of the cycle");
  return single_block(cycle_multigraph(n, t), Family::EvenC, t, at);
}

Configuration e_configuration(int arity) {
  if (arity < 2) throw Error("E-configuration needs arity >= 2");
  auto g = Hypergraph::from_incidences(iota_vertices(arity), {iota_vertices(arity)});
  return single_block(g, Family::E, 1, std::nullopt);
}

LeafSpec parse_leaf_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("configuration spec needs 'FAMILY:key=value,...': '" + text + "'");
  const std::string name = text.substr(0, colon);
  LeafSpec spec;
  if (name == "K")
    spec.family = Family::K;
  else if (name == "Codd")
    spec.family = Family::OddC;
  else if (name == "Ceven")
    spec.family = Family::EvenC;
  else if (name == "E")
    spec.family = Family::E;
  else
    throw Error("unknown configuration family '" + name + "'");

  bool have_n = false;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("expected key=value in '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "n" && spec.family != Family::E) {
      spec.n = parse_int(value, key);
      have_n = true;
    } else if (key == "arity" && spec.family == Family::E) {
      spec.n = parse_int(value, key);
      have_n = true;
    } else if (key == "t" && spec.family != Family::E) {
      spec.t = parse_int(value, key);
    } else if (key == "twist" && spec.family == Family::EvenC) {
      const auto dash = value.find('-');
      if (dash == std::string::npos) throw Error("twist must look like 'a-b'");
      spec.twist = std::make_pair(parse_int(value.substr(0, dash), key), parse_int(value.substr(dash + 1), key));
    } else {
      throw Error("unexpected key '" + key + "' for family " + name);
    }
  }
  if (!have_n) throw Error(std::string("missing ") + (spec.family == Family::E ? "arity" : "n") + " in '" + text + "'");
  return spec;
}

std::string to_string(const LeafSpec& spec) {
  std::ostringstream out;
  switch (spec.family) {
    case Family::K: out << "K:n=" << spec.n << ",t=" << spec.t; break;
    case Family::OddC: out << "Codd:n=" << spec.n << ",t=" << spec.t; break;
    case Family::EvenC:
      out << "Ceven:n=" << spec.n << ",t=" << spec.t;
      if (spec.twist) out << ",twist=" << spec.twist->first << "-" << spec.twist->second;
      break;
    case Family::E: out << "E:arity=" << spec.n; break;
  }
  return out.str();
}

Configuration build_leaf(const LeafSpec& spec) {
  switch (spec.family) {
    case Family::K: return k_configuration(spec.n, spec.t);
    case Family::OddC: return odd_c_configuration(spec.n, spec.t);
    case Family::EvenC: return even_c_configuration(spec.n, spec.t, spec.twist);
    case Family::E: return e_configuration(spec.n);
  }
  throw Error("unknown family");
}

MergedConfiguration merge_configurations(const Configuration& c1, const Configuration& c2, VertexId v1,
                                         VertexId v2) {
  if (!disjoint(c1.graph(), c2.graph()) || !disjoint(c1.cover.conflicts, c2.cover.conflicts))
    throw Error("configurations to merge share labels");
  auto merged = merge(c1.graph(), c2.graph(), v1, v2);
  const VertexId star = merged.merged;

  Configuration out;
  out.cover.base = std::move(merged.graph);
  for (const auto& [v, xs] : c1.cover.colors)
    if (v != v1) out.cover.colors[v] = xs;
  for (const auto& [v, xs] : c2.cover.colors)
    if (v != v2) out.cover.colors[v] = xs;
  auto& xs = out.cover.colors[star];
  xs = c1.cover.color_set(v1);
  const auto& more = c2.cover.color_set(v2);
  xs.insert(xs.end(), more.begin(), more.end());
  std::sort(xs.begin(), xs.end());

  std::vector<Color> colors(c1.cover.conflicts.vertices().begin(), c1.cover.conflicts.vertices().end());
  colors.insert(colors.end(), c2.cover.conflicts.vertices().begin(), c2.cover.conflicts.vertices().end());
  std::vector<Edge> edges(c1.cover.conflicts.edges().begin(), c1.cover.conflicts.edges().end());
  edges.insert(edges.end(), c2.cover.conflicts.edges().begin(), c2.cover.conflicts.edges().end());
  out.cover.conflicts = Hypergraph(std::move(colors), std::move(edges));
  out.cover.origin = c1.cover.origin;
  out.cover.origin.insert(c2.cover.origin.begin(), c2.cover.origin.end());

  if (c1.witness && c2.witness) {
    Certificate w;
    auto take = [&](const Certificate& part, VertexId old) {
      for (BlockWitness b : part.blocks) {
        for (VertexId& v : b.vertices)
          if (v == old) v = star;
        if (b.twist) {
          auto [a, c] = *b.twist;
          if (a == old) a = star;
          if (c == old) c = star;
          b.twist = std::make_pair(std::min(a, c), std::max(a, c));
        }
        w.blocks.push_back(std::move(b));
      }
      w.extra_edges.insert(w.extra_edges.end(), part.extra_edges.begin(), part.extra_edges.end());
    };
    take(*c1.witness, v1);
    take(*c2.witness, v2);
    out.witness = std::move(w);
  }
  return {std::move(out), star};
}

Configuration shifted(const Configuration& c, IdOffsets off) {
  Configuration out = relabel_vertices(c, [&](VertexId v) { return v + off.vertex; });
  std::vector<Edge> g_edges;
  for (Edge e : out.cover.base.edges()) {
    e.id += off.edge;
    g_edges.push_back(std::move(e));
  }
  out.cover.base = Hypergraph({out.cover.base.vertices().begin(), out.cover.base.vertices().end()}, std::move(g_edges));
  for (auto& [v, xs] : out.cover.colors)
    for (Color& x : xs) x += off.color;
  std::vector<Color> colors;
  for (Color x : c.cover.conflicts.vertices()) colors.push_back(x + off.color);
  std::vector<Edge> h_edges;
  for (Edge e : c.cover.conflicts.edges()) {
    e.id += off.h_edge;
    for (Color& x : e.pins) x += off.color;
    h_edges.push_back(std::move(e));
  }
  out.cover.conflicts = Hypergraph(std::move(colors), std::move(h_edges));
  out.cover.origin.clear();
  for (auto [h, g] : c.cover.origin) out.cover.origin[h + off.h_edge] = g + off.edge;
  if (out.witness) {
    for (auto& b : out.witness->blocks) {
      for (auto& classes : b.partition)
        for (auto& cls : classes)
          for (Color& x : cls) x += off.color;
      for (EdgeId& h : b.h_edges) h += off.h_edge;
    }
    for (EdgeId& h : out.witness->extra_edges) h += off.h_edge;
  }
  return out;
}

MergeTree MergeTree::make_leaf(LeafSpec spec) {
  MergeTree t;
  t.leaf = spec;
  return t;
}

MergeTree MergeTree::make_merge(MergeTree left, MergeTree right, VertexId left_at, VertexId right_at) {
  MergeTree t;
  t.children.push_back(std::move(left));
  t.children.push_back(std::move(right));
  t.at = {left_at, right_at};
  return t;
}

Configuration constructible(const MergeTree& tree) { return constructible(tree, build_leaf); }

Configuration constructible(const MergeTree& tree, const LeafBuilder& build) {
  if (tree.leaf) {
    if (!tree.children.empty()) throw Error("merge tree leaf with children");
    return build(*tree.leaf);
  }
  if (tree.children.size() != 2) throw Error("merge node needs exactly two children");
  Configuration left = constructible(tree.children[0], build);
  Configuration right = constructible(tree.children[1], build);
  const auto [a, b] = tree.at;
  if (!left.graph().has_vertex(a) || !right.graph().has_vertex(b))
    throw Error("merge point {" + std::to_string(a) + "," + std::to_string(b) + "} is not a vertex pair of the subtrees");

  const IdOffsets off{left.graph().max_vertex_id() + 1, left.graph().max_edge_id() + 1,
                      left.cover.conflicts.max_vertex_id() + 1, left.cover.conflicts.max_edge_id() + 1};
  const VertexId b_shifted = b + off.vertex;
  auto merged = merge_configurations(left, shifted(right, off), a, b_shifted);
  const VertexId star = merged.merged;
  return relabel_vertices(merged.config, [&](VertexId v) {
    if (v == star) return a;
    if (v > b_shifted) return v - 1;
    return v;
  });
}

Configuration hyperbrick_configuration(const Hypergraph& g) {
  auto decomposition = blocks(g);
  CoverBuilder builder(g);
  Certificate witness;
  for (const Hypergraph& block : decomposition.blocks) {
    BrickClass brick = classify_brick(block);
    switch (brick.tag) {
      case BrickTag::TKN: witness.blocks.push_back(append_brick(builder, block, Family::K, brick.order, brick.t, {})); break;
      case BrickTag::TCN:
        if (brick.n % 2 == 1)
          witness.blocks.push_back(append_brick(builder, block, Family::OddC, brick.order, brick.t, {}));
        else
          witness.blocks.push_back(append_brick(builder, block, Family::EvenC, brick.order, brick.t,
                                                static_cast<std::size_t>(brick.n - 1)));
        break;
      case BrickTag::HYPEREDGE:
        witness.blocks.push_back(append_brick(builder, block, Family::E, brick.order, 1, {}));
        break;
      case BrickTag::NONE: throw Error("block is not a DP-hyperbrick");
    }
  }
  if (g.empty()) throw Error("empty hypergraph");
  return Configuration{builder.finish(), std::move(witness)};
}

}  // namespace dpc
