#ifndef DPC_SOLVER_HPP
#define DPC_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dpc/kernels.hpp"
#include "dpc/witness.hpp"

namespace dpc {

struct GreedyResult {
  std::optional<Transversal> coloring;
  std::size_t stuck_at = 0;  // index into the order where no color was left; meaningful on failure
};

/// Sequential coloring: walk `order` and give each vertex its lowest color
/// that spans no H-edge together with the colors already chosen.
GreedyResult greedy_sequential(const Cover& c, const std::vector<VertexId>& order);

/// Reverse BFS order from `last`: every vertex before `last` has a neighbour
/// later in the order.
std::vector<VertexId> connectivity_order(const Hypergraph& g, VertexId last);

struct BruteForceResult {
  enum class Status { found, none, exhausted } status = Status::exhausted;
  std::optional<Transversal> transversal;
};

/// Exact independent-transversal search over vertices in ascending id and
/// colors in ascending id: the lexicographically smallest transversal is
/// returned regardless of `exec`. Returns
/// `exhausted` without searching when ∏|X_v| exceeds `budget`.
BruteForceResult brute_force_transversal(const Cover& c, std::uint64_t budget = kDefaultBudget,
                                         Execution exec = Execution::parallel);

/// Colorable per the exact search; throws BudgetExhausted past the budget.
bool colorable(const Cover& c, std::uint64_t budget = kDefaultBudget);

/// The configuration (G ÷ v, X', H') with X'_u = X_u minus the ordinary
/// H-neighbours of x, keeping the H-edges whose endpoints other than x all
/// survive and number at least two. Throws when v is separating, |G| = 1,
/// or x ∉ X_v.
Configuration reduce_at(const Configuration& cfg, VertexId v, Color x);

struct CertificateCheck {
  bool ok = false;
  std::string reason;
};

/// Polynomial-time verification of a bad-block certificate against the
/// configuration: the block list equals the block decomposition of G, each
/// block cover has the structure of its family, the block H-edge sets are
/// pairwise disjoint and together with the extra edges form E(H), and each
/// X_v is the disjoint union of its X_v^B.
CertificateCheck check_certificate(const Configuration& cfg, const Certificate& cert);

/// Reads a K/C/E witness off each block of a degree-tight cover by grouping
/// the colors of each vertex by H-neighbourhood. Returns nullopt when the
/// cover is not of that exact shape (no extra edges are ever reported here).
std::optional<Certificate> recover_certificate(const Configuration& cfg);

using SolveOutcome = std::variant<Transversal, Certificate>;

struct SolveOptions {
  std::uint64_t budget = kDefaultBudget;  // reduction nodes, then brute-force transversals
};

/// Colors a degree-feasible configuration over a connected G or certifies
/// that it is uncolorable. Throws BudgetExhausted when neither outcome can be
/// established within the budget.
SolveOutcome solve_degree_feasible(const Configuration& cfg, SolveOptions options = {});

/// Uncolorable, and colorable after deleting any single H-edge. nullopt when
/// an oracle call exceeds the budget.
std::optional<bool> is_minimal_uncolorable(const Configuration& cfg, std::uint64_t budget = kDefaultBudget);

}  // namespace dpc

#endif  // DPC_SOLVER_HPP
