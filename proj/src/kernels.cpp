#include "dpc/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dpc {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

std::optional<std::uint64_t> first_match_serial(std::uint64_t count, const std::function<bool(std::uint64_t)>& pred) {
  for (std::uint64_t i = 0; i < count; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

}  // namespace

std::optional<std::uint64_t> first_match(std::uint64_t count, const std::function<bool(std::uint64_t)>& pred,
                                         Execution exec) {
#ifdef _OPENMP
  if (exec == Execution::parallel && count > 1 && omp_get_max_threads() > 1) {
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{none};
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      if (idx > best.load(std::memory_order_relaxed)) continue;
      if (!pred(idx)) continue;
      std::uint64_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
    const std::uint64_t found = best.load();
    if (found == none) return std::nullopt;
    return found;
  }
#endif
  (void)exec;
  return first_match_serial(count, pred);
}

TransversalSearch::TransversalSearch(const DenseCover& cover) : sets_(cover.sets), color_count_(cover.color_count) {
  std::vector<int> pos_of(static_cast<std::size_t>(color_count_), -1), slot_of(static_cast<std::size_t>(color_count_), -1);
  closing_.resize(sets_.size());
  for (std::size_t p = 0; p < sets_.size(); ++p) {
    std::sort(sets_[p].begin(), sets_[p].end());
    closing_[p].resize(sets_[p].size());
    for (std::size_t s = 0; s < sets_[p].size(); ++s) {
      pos_of[static_cast<std::size_t>(sets_[p][s])] = static_cast<int>(p);
      slot_of[static_cast<std::size_t>(sets_[p][s])] = static_cast<int>(s);
    }
    const auto size = static_cast<std::uint64_t>(sets_[p].size());
    if (size == 0)
      space_ = 0;
    else if (space_ != 0)
      space_ = space_ > std::numeric_limits<std::uint64_t>::max() / size ? std::numeric_limits<std::uint64_t>::max()
                                                                         : space_ * size;
  }
  for (const auto& e : cover.edges) {
    int last = -1;
    for (int x : e) last = std::max(last, pos_of[static_cast<std::size_t>(x)]);
    std::vector<int> others;
    int closer = -1, at_last = 0;
    for (int x : e) {
      if (pos_of[static_cast<std::size_t>(x)] == last) {
        closer = x;
        ++at_last;
      } else {
        others.push_back(x);
      }
    }
    // An edge with two colors of one vertex can never lie inside a transversal.
    if (last < 0 || at_last != 1) continue;
    closing_[static_cast<std::size_t>(last)][static_cast<std::size_t>(slot_of[static_cast<std::size_t>(closer)])]
        .push_back(std::move(others));
  }
}

bool TransversalSearch::closes_edge(std::size_t pos, std::size_t slot, const std::vector<char>& chosen) const {
  for (const auto& others : closing_[pos][slot])
    if (std::all_of(others.begin(), others.end(), [&](int y) { return chosen[static_cast<std::size_t>(y)] != 0; }))
      return true;
  return false;
}

bool TransversalSearch::extend(std::size_t pos, std::vector<char>& chosen, std::vector<int>& pick) const {
  if (pos == sets_.size()) return true;
  for (std::size_t s = 0; s < sets_[pos].size(); ++s) {
    if (closes_edge(pos, s, chosen)) continue;
    const auto x = static_cast<std::size_t>(sets_[pos][s]);
    chosen[x] = 1;
    pick[pos] = static_cast<int>(s);
    if (extend(pos + 1, chosen, pick)) return true;
    chosen[x] = 0;
  }
  return false;
}

std::optional<std::vector<int>> TransversalSearch::first(Execution exec) const {
  if (sets_.empty()) return std::vector<int>{};
  if (space_ == 0) return std::nullopt;
  const std::size_t top = sets_[0].size();
  std::vector<std::optional<std::vector<int>>> found(top);
  // Position 0 closes no edge, so each top-level slot is an independent subtree.
  auto hit = first_match(
      top,
      [&](std::uint64_t i) {
        std::vector<char> chosen(static_cast<std::size_t>(color_count_), 0);
        std::vector<int> pick(sets_.size(), -1);
        chosen[static_cast<std::size_t>(sets_[0][i])] = 1;
        pick[0] = static_cast<int>(i);
        if (!extend(1, chosen, pick)) return false;
        found[i] = std::move(pick);
        return true;
      },
      exec);
  if (!hit) return std::nullopt;
  return found[*hit];
}

}  // namespace dpc
