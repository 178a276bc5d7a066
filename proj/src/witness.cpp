#include "dpc/witness.hpp"

#include <algorithm>

namespace dpc {

const char* to_string(Family f) {
  switch (f) {
    case Family::K: return "K";
    case Family::OddC: return "Codd";
    case Family::EvenC: return "Ceven";
    case Family::E: return "E";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "K") return Family::K;
  if (s == "Codd") return Family::OddC;
  if (s == "Ceven") return Family::EvenC;
  if (s == "E") return Family::E;
  return std::nullopt;
}

std::vector<Color> BlockWitness::colors_of(VertexId v) const {
  std::vector<Color> out;
  for (std::size_t p = 0; p < vertices.size() && p < partition.size(); ++p) {
    if (vertices[p] != v) continue;
    for (const auto& cls : partition[p]) out.insert(out.end(), cls.begin(), cls.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dpc
