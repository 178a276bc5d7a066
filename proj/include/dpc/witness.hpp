#ifndef DPC_WITNESS_HPP
#define DPC_WITNESS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpc/cover.hpp"

namespace dpc {

enum class Family { K, OddC, EvenC, E };

const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

/// The cover of one block laid out as a K-, C- or E-configuration.
///
/// `vertices` fixes the block's vertex order (cyclic for the C families) and
/// `partition[k]` lists the classes X^1, X^2, ... of vertices[k]: n - 1
/// classes of size t for K, two of size t for C, one singleton for E.
/// `h_edges` are the ids (in the enclosing cover) of the block's H-edges.
struct BlockWitness {
  Family family = Family::K;
  int n = 1;  // block order; the arity for E
  int t = 1;  // multiplicity; 1 for E
  std::vector<VertexId> vertices;
  std::vector<std::vector<std::vector<Color>>> partition;
  std::vector<EdgeId> h_edges;
  std::optional<std::pair<VertexId, VertexId>> twist;  // EvenC only

  /// X_v^B for a vertex of the block: the union of its classes, sorted.
  std::vector<Color> colors_of(VertexId v) const;
};

/// Per-block witness covers of an uncolorable degree-feasible configuration.
/// The block H-edge sets are pairwise disjoint; together with `extra_edges`
/// they make up E(H). With no extra edges this is the exact block structure
/// of a constructible configuration; with extra edges, the blocks describe a
/// constructible spanning subcover, which is already uncolorable.
struct Certificate {
  std::vector<BlockWitness> blocks;
  std::vector<EdgeId> extra_edges;
};

/// A connected hypergraph with a cover; `witness` is filled in by the
/// generators and by constructible().
struct Configuration {
  Cover cover;
  std::optional<Certificate> witness;

  const Hypergraph& graph() const { return cover.base; }
};

}  // namespace dpc

#endif  // DPC_WITNESS_HPP
