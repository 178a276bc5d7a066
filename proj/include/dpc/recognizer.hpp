#ifndef DPC_RECOGNIZER_HPP
#define DPC_RECOGNIZER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dpc/cover.hpp"
#include "dpc/kernels.hpp"

namespace dpc {

enum class BrickTag { TKN, TCN, HYPEREDGE, NONE };

const char* to_string(BrickTag tag);

/// Classification of a block. For TKN and TCN, `order` is the vertex
/// bijection with the canonical tK_n (any order) or tC_n (cyclic order, so
/// consecutive vertices and order.back()/order.front() are joined by t edges).
struct BrickClass {
  BrickTag tag = BrickTag::NONE;
  int n = 0;
  int t = 0;
  int arity = 0;  // HYPEREDGE only
  std::vector<VertexId> order;
};

/// tC_3 is reported as TKN(3, t); K_1 as TKN(1, 1). Throws when b is not a block.
BrickClass classify_brick(const Hypergraph& b);

struct BlockReport {
  std::vector<VertexId> vertices;
  BrickClass brick;
};

struct DegreeColorability {
  bool colorable = false;
  std::vector<BlockReport> blocks;
};

/// A connected hypergraph is not DP-degree-colorable exactly when every block
/// is a DP-hyperbrick. Throws on an empty or disconnected input.
DegreeColorability dp_degree_colorable(const Hypergraph& g);

/// Degeneracy + 1: one plus the largest degree seen when repeatedly deleting
/// a vertex of minimum degree (with its incident edges). 0 when empty.
std::size_t coloring_number(const Hypergraph& g);

struct BrooksBound {
  std::size_t upper = 0;  // Δ + 1
  bool tight = false;     // G is a single DP-hyperbrick block
};

BrooksBound brooks_dp_bound(const Hypergraph& g);

struct ChromaticResult {
  enum class Status { found, exhausted, above_max } status = Status::exhausted;
  int value = -1;
  std::uint64_t covers_checked = 0;
  // Set when k < value failed: a cover with |X_v| = value - 1 and no independent transversal.
  std::optional<Cover> last_failure;
};

/// Least k <= k_max such that every cover with |X_v| = k has an independent
/// transversal. Only covers in which every M_e is a perfect (hyper)matching
/// are enumerated; colors along a spanning tree are normalised to identity
/// matchings. `budget` caps the number of covers enumerated for any one k.
ChromaticResult dp_chromatic_exact(const Hypergraph& g, int k_max, std::uint64_t budget = kDefaultBudget,
                                   Execution exec = Execution::parallel);

}  // namespace dpc

#endif  // DPC_RECOGNIZER_HPP
