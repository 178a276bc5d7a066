#ifndef DPC_TYPES_HPP
#define DPC_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpc {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// A color is a vertex of the cover hypergraph H.
using Color = VertexId;

// Precondition violations and malformed inputs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search ran out of its transversal/node budget before reaching a verdict.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

}  // namespace dpc

#endif  // DPC_TYPES_HPP
