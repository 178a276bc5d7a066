#ifndef DPC_CONFIGGEN_HPP
#define DPC_CONFIGGEN_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpc/recognizer.hpp"
#include "dpc/witness.hpp"

namespace dpc {

// Canonical layouts. Vertices are 0..n-1. tK_n has t parallel edges per pair
// in lexicographic pair order; tC_n has the cycle 0-1-...-(n-1)-0 with its
// pairs listed lexicographically. X_v is allocated per vertex, then per class,
// then per member, so in K(n, t) color v*t*(n-1) + i*t + j is member j of X_v^i.

Configuration k_configuration(int n, int t);
Configuration odd_c_configuration(int n, int t);

/// `twist` must be a pair of cycle neighbours; defaults to {0, n-1}.
Configuration even_c_configuration(int n, int t, std::optional<std::pair<VertexId, VertexId>> twist = {});

Configuration e_configuration(int arity);

/// Parsed form of `K:n=3,t=2`, `Codd:n=5,t=1`, `Ceven:n=4,t=1,twist=0-3`, `E:arity=4`.
struct LeafSpec {
  Family family = Family::K;
  int n = 1;  // arity for E
  int t = 1;
  std::optional<std::pair<VertexId, VertexId>> twist;
};

LeafSpec parse_leaf_spec(const std::string& text);
std::string to_string(const LeafSpec& spec);
Configuration build_leaf(const LeafSpec& spec);

struct MergedConfiguration {
  Configuration config;
  VertexId merged;
};

/// Merge two configurations that are disjoint in G-vertex, G-edge, color and
/// H-edge ids at v1 and v2. Witnesses, when both inputs carry one, are
/// concatenated with v1/v2 renamed to the merged vertex.
MergedConfiguration merge_configurations(const Configuration& c1, const Configuration& c2, VertexId v1,
                                         VertexId v2);

struct IdOffsets {
  VertexId vertex = 0;
  EdgeId edge = 0;
  Color color = 0;
  EdgeId h_edge = 0;
};

Configuration shifted(const Configuration& c, IdOffsets offsets);

/// A merge tree: either a leaf, or two subtrees glued at `at.first` (a vertex
/// of the left result) and `at.second` (a vertex of the right result).
///
/// Labelling of a merged node: the left subtree's vertices keep their labels
/// (the merged vertex takes at.first), the right subtree's remaining vertices
/// follow in their original order. Colors and edges are numbered left first.
struct MergeTree {
  std::optional<LeafSpec> leaf;
  std::vector<MergeTree> children;  // empty for a leaf, two otherwise
  std::pair<VertexId, VertexId> at{0, 0};

  static MergeTree make_leaf(LeafSpec spec);
  static MergeTree make_merge(MergeTree left, MergeTree right, VertexId left_at, VertexId right_at);
};

Configuration constructible(const MergeTree& tree);

/// Same gluing, with leaves produced by `build` (called left to right).
using LeafBuilder = std::function<Configuration(const LeafSpec&)>;
Configuration constructible(const MergeTree& tree, const LeafBuilder& build);

/// The degree-tight constructible cover of a connected hypergraph whose
/// blocks are all DP-hyperbricks: one K/C/E block cover per block on fresh
/// colors. Throws if some block is not a hyperbrick.
Configuration hyperbrick_configuration(const Hypergraph& g);

}  // namespace dpc

#endif  // DPC_CONFIGGEN_HPP
