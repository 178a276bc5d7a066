#ifndef DPC_COVER_HPP
#define DPC_COVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dpc/hypergraph.hpp"

namespace dpc {

/// A cover (X, H) of a base hypergraph G. `colors[v]` is X_v; `conflicts` is
/// H, whose vertices are colors; `origin[h]` names the G-edge whose matching
/// M_e contains the H-edge h. Nothing here is enforced at construction:
/// validate_cover() reports the first violated condition.
struct Cover {
  Hypergraph base;
  std::map<VertexId, std::vector<Color>> colors;
  Hypergraph conflicts;
  std::map<EdgeId, EdgeId> origin;

  const std::vector<Color>& color_set(VertexId v) const;
  std::map<Color, VertexId> owners() const;
};

using Transversal = std::map<VertexId, Color>;
using ListAssignment = std::map<VertexId, std::vector<int>>;

enum class CoverViolation {
  none,
  missing_color_set,    // some v ∈ V(G) has no X_v entry, or X_v for a non-vertex
  overlapping_sets,     // X_u ∩ X_v ≠ ∅
  unknown_color,        // an H-vertex outside every X_v, or an X_v member not in V(H)
  not_independent,      // an H-edge lies inside one X_v
  missing_origin,       // an H-edge without origin, or an origin that is not a G-edge
  matching_shape,       // an H-edge does not pick exactly one color per pin of its origin
  not_a_matching,       // two H-edges of one M_e share a color
};

struct CoverReport {
  CoverViolation violation = CoverViolation::none;
  std::string message;
  std::vector<std::int64_t> witness;  // offending ids, meaning depends on `violation`

  bool ok() const { return violation == CoverViolation::none; }
};

const char* to_string(CoverViolation v);

/// Checks C1 and C2, scanning in ascending id order; reports the first failure.
CoverReport validate_cover(const Cover& c);

/// Throws Error when `t` is not total over V(G) or picks a color outside X_v.
bool is_independent_transversal(const Cover& c, const Transversal& t);

/// The list-coloring cover: X_v = {(v, x) : x ∈ L(v)} with dense color ids
/// allocated in (v, x) order; an H-edge for each G-edge and each color common
/// to all of its pins' lists.
struct ListCover {
  Cover cover;
  std::map<Color, int> list_color;  // color id -> the list entry it stands for
};

ListCover cover_from_lists(const Hypergraph& g, const ListAssignment& lists);

bool is_degree_feasible(const Cover& c);

/// Ordinary neighbourhood of x in H: colors joined to x by an H-edge of arity 2.
std::vector<Color> ordinary_neighbors(const Cover& c, Color x);

/// Same cover with the H-edge `h` deleted (ids of the others unchanged).
Cover without_conflict(const Cover& c, EdgeId h);

struct SamplingOptions {
  bool maximal_matchings = true;  // otherwise each M_e gets a uniform size in [0, max]
};

/// Random valid cover of g with |X_v| = sizes[v]. Colors are dense, allocated
/// per vertex in ascending order. For each G-edge a random (hyper)matching is
/// drawn independently.
Cover random_cover(const Hypergraph& g, const std::map<VertexId, std::size_t>& sizes, std::mt19937_64& rng,
                   SamplingOptions options = {});

/// random_cover with |X_v| = d_G(v).
Cover random_degree_cover(const Hypergraph& g, std::mt19937_64& rng, SamplingOptions options = {});

}  // namespace dpc

#endif  // DPC_COVER_HPP
