#ifndef DPC_KERNELS_HPP
#define DPC_KERNELS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace dpc {

enum class Execution { serial, parallel };

/// Smallest i in [0, count) with pred(i), or nullopt. The parallel variant
/// splits the range across OpenMP threads and returns the same index as the
/// serial scan; pred must be safe to call concurrently.
std::optional<std::uint64_t> first_match(std::uint64_t count, const std::function<bool(std::uint64_t)>& pred,
                                         Execution exec);

/// A cover flattened for exhaustive search. Colors are dense ints in
/// [0, color_count); `sets[p]` is the color set of the p-th vertex in search
/// order (ascending); `edges` are the H-edges.
struct DenseCover {
  std::vector<std::vector<int>> sets;
  std::vector<std::vector<int>> edges;
  int color_count = 0;
};

/// Backtracking over positions 0..n-1 with lowest-color-first choice. An
/// H-edge is tested when its last endpoint (in search order) is placed, so
/// every partial assignment explored is independent.
class TransversalSearch {
 public:
  explicit TransversalSearch(const DenseCover& cover);

  /// ∏ |sets[p]|, saturating at UINT64_MAX.
  std::uint64_t space() const { return space_; }

  /// Chosen slot per position for the lexicographically smallest independent
  /// transversal (by position, then by slot), or nullopt when none exists.
  /// Both execution modes return the same answer.
  std::optional<std::vector<int>> first(Execution exec) const;

 private:
  bool extend(std::size_t pos, std::vector<char>& chosen, std::vector<int>& pick) const;
  bool closes_edge(std::size_t pos, std::size_t slot, const std::vector<char>& chosen) const;

  std::vector<std::vector<int>> sets_;
  // closing_[p][s]: for each H-edge whose last endpoint is sets_[p][s], its other endpoints.
  std::vector<std::vector<std::vector<std::vector<int>>>> closing_;
  int color_count_ = 0;
  std::uint64_t space_ = 1;
};

int max_threads();

}  // namespace dpc

#endif  // DPC_KERNELS_HPP
