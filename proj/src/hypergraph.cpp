#include "dpc/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace dpc {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Hypergraph::Hypergraph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw Error("duplicate vertex id");
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  incident_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (i > 0 && edges_[i - 1].id == e.id) throw Error("duplicate edge id " + std::to_string(e.id));
    std::sort(e.pins.begin(), e.pins.end());
    if (std::adjacent_find(e.pins.begin(), e.pins.end()) != e.pins.end())
      throw Error("edge " + std::to_string(e.id) + " repeats a vertex");
    if (e.pins.size() < 2) throw Error("edge " + std::to_string(e.id) + " has fewer than two vertices");
    for (VertexId v : e.pins) {
      if (!has_vertex(v))
        throw Error("edge " + std::to_string(e.id) + " uses unknown vertex " + std::to_string(v));
      incident_[vertex_index(v)].push_back(e.id);
    }
  }
}

Hypergraph Hypergraph::from_incidences(std::vector<VertexId> vertices,
                                       const std::vector<std::vector<VertexId>>& incidences) {
  std::vector<Edge> edges;
  edges.reserve(incidences.size());
  for (std::size_t i = 0; i < incidences.size(); ++i)
    edges.push_back(Edge{static_cast<EdgeId>(i), incidences[i]});
  return Hypergraph(std::move(vertices), std::move(edges));
}

bool Hypergraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Hypergraph::has_edge(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  return it != edges_.end() && it->id == e;
}

std::size_t Hypergraph::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw Error("unknown vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Hypergraph::edge_index(EdgeId e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& x, EdgeId id) { return x.id < id; });
  if (it == edges_.end() || it->id != e) throw Error("unknown edge " + std::to_string(e));
  return static_cast<std::size_t>(it - edges_.begin());
}

const Edge& Hypergraph::edge(EdgeId e) const { return edges_[edge_index(e)]; }

const std::vector<EdgeId>& Hypergraph::incident(VertexId v) const { return incident_[vertex_index(v)]; }

VertexId Hypergraph::max_vertex_id() const { return vertices_.empty() ? -1 : vertices_.back(); }

EdgeId Hypergraph::max_edge_id() const { return edges_.empty() ? -1 : edges_.back().id; }

bool operator==(const Edge& a, const Edge& b) { return a.id == b.id && a.pins == b.pins; }

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
}

std::size_t degree(const Hypergraph& g, VertexId v) { return g.incident(v).size(); }

std::size_t multiplicity(const Hypergraph& g, VertexId u, VertexId v) {
  if (u == v) throw Error("multiplicity needs two distinct vertices");
  if (!g.has_vertex(v)) throw Error("unknown vertex " + std::to_string(v));
  std::size_t count = 0;
  for (EdgeId id : g.incident(u)) {
    const auto& pins = g.edge(id).pins;
    if (pins.size() == 2 && (pins[0] == v || pins[1] == v)) ++count;
  }
  return count;
}

std::size_t min_degree(const Hypergraph& g) {
  std::size_t best = 0;
  bool first = true;
  for (VertexId v : g.vertices()) {
    std::size_t d = degree(g, v);
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

std::size_t max_degree(const Hypergraph& g) {
  std::size_t best = 0;
  for (VertexId v : g.vertices()) best = std::max(best, degree(g, v));
  return best;
}

Hypergraph shrink(const Hypergraph& g, VertexId v) {
  if (!g.has_vertex(v)) throw Error("unknown vertex " + std::to_string(v));
  std::vector<VertexId> vertices;
  for (VertexId u : g.vertices())
    if (u != v) vertices.push_back(u);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Edge kept{e.id, {}};
    for (VertexId u : e.pins)
      if (u != v) kept.pins.push_back(u);
    if (kept.pins.size() >= 2) edges.push_back(std::move(kept));
  }
  return Hypergraph(std::move(vertices), std::move(edges));
}

Hypergraph remove_edge(const Hypergraph& g, EdgeId e) {
  if (!g.has_edge(e)) throw Error("unknown edge " + std::to_string(e));
  std::vector<Edge> edges;
  for (const Edge& x : g.edges())
    if (x.id != e) edges.push_back(x);
  return Hypergraph({g.vertices().begin(), g.vertices().end()}, std::move(edges));
}

Hypergraph induced(const Hypergraph& g, std::span<const VertexId> subset) {
  std::set<VertexId> keep(subset.begin(), subset.end());
  for (VertexId v : keep)
    if (!g.has_vertex(v)) throw Error("unknown vertex " + std::to_string(v));
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (std::all_of(e.pins.begin(), e.pins.end(), [&](VertexId u) { return keep.count(u) > 0; }))
      edges.push_back(e);
  return Hypergraph({keep.begin(), keep.end()}, std::move(edges));
}

bool disjoint(const Hypergraph& a, const Hypergraph& b) {
  for (VertexId v : a.vertices())
    if (b.has_vertex(v)) return false;
  for (const Edge& e : a.edges())
    if (b.has_edge(e.id)) return false;
  return true;
}

MergedHypergraph merge(const Hypergraph& g1, const Hypergraph& g2, VertexId v1, VertexId v2) {
  if (!disjoint(g1, g2)) throw Error("merge requires disjoint hypergraphs");
  if (!g1.has_vertex(v1) || !g2.has_vertex(v2)) throw Error("merge vertex not in its hypergraph");
  const VertexId star = std::max(g1.max_vertex_id(), g2.max_vertex_id()) + 1;
  std::vector<VertexId> vertices;
  for (VertexId v : g1.vertices())
    if (v != v1) vertices.push_back(v);
  for (VertexId v : g2.vertices())
    if (v != v2) vertices.push_back(v);
  vertices.push_back(star);
  std::vector<Edge> edges;
  auto rewrite = [&](const Hypergraph& g, VertexId old) {
    for (Edge e : g.edges()) {
      for (VertexId& u : e.pins)
        if (u == old) u = star;
      edges.push_back(std::move(e));
    }
  };
  rewrite(g1, v1);
  rewrite(g2, v2);
  return {Hypergraph(std::move(vertices), std::move(edges)), star};
}

std::vector<std::vector<VertexId>> component_vertex_sets(const Hypergraph& g) {
  const auto vs = g.vertices();
  DisjointSets sets(vs.size());
  auto index = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (const Edge& e : g.edges())
    for (std::size_t i = 1; i < e.pins.size(); ++i) sets.unite(index(e.pins[0]), index(e.pins[i]));
  std::map<std::size_t, std::vector<VertexId>> groups;
  for (std::size_t i = 0; i < vs.size(); ++i) groups[sets.find(i)].push_back(vs[i]);
  std::vector<std::vector<VertexId>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;  // roots are minimal indices, so already ordered by smallest vertex
}

std::vector<Hypergraph> components(const Hypergraph& g) {
  std::vector<Hypergraph> out;
  for (const auto& set : component_vertex_sets(g)) out.push_back(induced(g, set));
  return out;
}

std::size_t component_count(const Hypergraph& g) { return component_vertex_sets(g).size(); }

bool is_connected(const Hypergraph& g) { return component_count(g) <= 1; }

BlockDecomposition blocks(const Hypergraph& g) {
  if (!is_connected(g)) throw Error("block decomposition needs a connected hypergraph");
  BlockDecomposition out;
  if (g.empty()) return out;
  if (g.size() == 0) {
    out.blocks.push_back(g);
    out.membership[g.vertices()[0]] = {0};
    return out;
  }

  // Incidence graph: nodes [0, n) are vertices, [n, n + m) are edges.
  const auto vs = g.vertices();
  const auto es = g.edges();
  const std::size_t n = vs.size();
  const std::size_t total = n + es.size();
  std::vector<std::vector<std::size_t>> adj(total);
  for (std::size_t j = 0; j < es.size(); ++j)
    for (VertexId v : es[j].pins) {
      auto i = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
      adj[i].push_back(n + j);
      adj[n + j].push_back(i);
    }

  std::vector<int> disc(total, -1), low(total, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  std::vector<std::vector<std::size_t>> bcc_nodes;
  int timer = 0;

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t parent) {
    disc[u] = low[u] = timer++;
    for (std::size_t w : adj[u]) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::set<std::size_t> nodes;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            nodes.insert(a);
            nodes.insert(b);
            if (a == u && b == w) break;
          }
          bcc_nodes.emplace_back(nodes.begin(), nodes.end());
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  dfs(0, total);

  // Biconnected pieces meeting in an edge node belong to the same block:
  // an edge node never separates the hypergraph itself.
  DisjointSets glue(bcc_nodes.size());
  std::vector<std::size_t> owner(total, bcc_nodes.size());
  for (std::size_t b = 0; b < bcc_nodes.size(); ++b)
    for (std::size_t node : bcc_nodes[b])
      if (node >= n) {
        if (owner[node] == bcc_nodes.size())
          owner[node] = b;
        else
          glue.unite(owner[node], b);
      }

  std::map<std::size_t, std::pair<std::set<VertexId>, std::vector<Edge>>> groups;
  for (std::size_t b = 0; b < bcc_nodes.size(); ++b) {
    auto& [verts, edges] = groups[glue.find(b)];
    for (std::size_t node : bcc_nodes[b])
      if (node < n) verts.insert(vs[node]);
  }
  for (std::size_t j = 0; j < es.size(); ++j) groups[glue.find(owner[n + j])].second.push_back(es[j]);

  for (auto& [root, group] : groups)
    out.blocks.emplace_back(std::vector<VertexId>(group.first.begin(), group.first.end()), group.second);
  std::sort(out.blocks.begin(), out.blocks.end(), [](const Hypergraph& a, const Hypergraph& b) {
    return std::lexicographical_compare(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                                        b.vertices().end());
  });
  for (std::size_t b = 0; b < out.blocks.size(); ++b)
    for (VertexId v : out.blocks[b].vertices()) out.membership[v].push_back(b);
  for (const auto& [v, member_of] : out.membership)
    if (member_of.size() >= 2) out.separating_vertices.push_back(v);
  return out;
}

std::vector<VertexId> separating_vertices(const Hypergraph& g) { return blocks(g).separating_vertices; }

bool is_block(const Hypergraph& g) { return is_connected(g) && blocks(g).blocks.size() <= 1; }

bool is_bridge(const Hypergraph& g, EdgeId e) {
  const std::size_t arity = g.edge(e).pins.size();
  return component_count(remove_edge(g, e)) == component_count(g) + arity - 1;
}

}  // namespace dpc
