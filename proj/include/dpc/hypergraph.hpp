#ifndef DPC_HYPERGRAPH_HPP
#define DPC_HYPERGRAPH_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "dpc/types.hpp"

namespace dpc {

struct Edge {
  EdgeId id;
  std::vector<VertexId> pins;  // sorted, distinct, size >= 2
};

/// Finite hypergraph with labelled vertices and labelled (possibly parallel)
/// edges. Immutable once constructed; all structural operations below return
/// new values.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Throws Error on duplicate vertex/edge ids, edges with fewer than two
  /// distinct pins, or pins that are not vertices.
  Hypergraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  /// Edge ids are assigned 0..m-1 in the order given.
  static Hypergraph from_incidences(std::vector<VertexId> vertices,
                                    const std::vector<std::vector<VertexId>>& incidences);

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  const Edge& edge(EdgeId e) const;

  /// Ids of the edges incident to v, ascending.
  const std::vector<EdgeId>& incident(VertexId v) const;

  VertexId max_vertex_id() const;  // -1 when empty
  EdgeId max_edge_id() const;      // -1 when edgeless

  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  std::size_t vertex_index(VertexId v) const;
  std::size_t edge_index(EdgeId e) const;

  std::vector<VertexId> vertices_;  // sorted
  std::vector<Edge> edges_;         // sorted by id
  std::vector<std::vector<EdgeId>> incident_;
};

bool operator==(const Edge& a, const Edge& b);

std::size_t degree(const Hypergraph& g, VertexId v);

/// Number of ordinary edges with incidence exactly {u, v}.
std::size_t multiplicity(const Hypergraph& g, VertexId u, VertexId v);

std::size_t min_degree(const Hypergraph& g);  // 0 for the empty hypergraph
std::size_t max_degree(const Hypergraph& g);  // 0 for the empty hypergraph

/// G÷v: drop v, truncate incidences, discard edges left with < 2 pins.
Hypergraph shrink(const Hypergraph& g, VertexId v);

/// G - e.
Hypergraph remove_edge(const Hypergraph& g, EdgeId e);

/// G[S], the subhypergraph induced by `subset`.
Hypergraph induced(const Hypergraph& g, std::span<const VertexId> subset);

struct MergedHypergraph {
  Hypergraph graph;
  VertexId merged;  // the new vertex v*
};

/// Identify v1 ∈ G1 and v2 ∈ G2 into a fresh vertex v* (one larger than every
/// label in either input). G1 and G2 must be disjoint in vertex and edge ids.
MergedHypergraph merge(const Hypergraph& g1, const Hypergraph& g2, VertexId v1, VertexId v2);

bool disjoint(const Hypergraph& a, const Hypergraph& b);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<VertexId>> component_vertex_sets(const Hypergraph& g);
std::vector<Hypergraph> components(const Hypergraph& g);
std::size_t component_count(const Hypergraph& g);
bool is_connected(const Hypergraph& g);  // the empty hypergraph counts as connected

struct BlockDecomposition {
  std::vector<Hypergraph> blocks;               // ordered by smallest vertex, then size
  std::vector<VertexId> separating_vertices;    // sorted
  std::map<VertexId, std::vector<std::size_t>> membership;
};

/// Blocks of a connected hypergraph, computed as biconnected components of the
/// vertex/edge incidence graph glued along shared edge nodes. Throws on a
/// disconnected input.
BlockDecomposition blocks(const Hypergraph& g);

std::vector<VertexId> separating_vertices(const Hypergraph& g);
bool is_block(const Hypergraph& g);

/// G - e has |i(e)| - 1 more components than G.
bool is_bridge(const Hypergraph& g, EdgeId e);

}  // namespace dpc

#endif  // DPC_HYPERGRAPH_HPP
