#ifndef DPC_JSON_IO_HPP
#define DPC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "dpc/configgen.hpp"
#include "dpc/cover.hpp"
#include "dpc/recognizer.hpp"
#include "dpc/witness.hpp"

namespace dpc {

using Json = nlohmann::json;

// All readers throw dpc::Error on malformed input.
//
// Edge ids default to the position in the array. Graphs whose ids are not
// 0..m-1 (e.g. after shrinking) carry an extra "edge_ids" array, and H-edges
// an "id" field, so ids survive a round trip.

Json to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const Json& j);

Json to_json(const Cover& c);
Cover cover_from_json(const Json& j);

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

/// Cover fields plus an optional "witness" certificate.
Json to_json(const Configuration& cfg);
Configuration configuration_from_json(const Json& j);

Json to_json(const Transversal& t);
Transversal transversal_from_json(const Json& j);

ListAssignment lists_from_json(const Json& j);
MergeTree merge_tree_from_json(const Json& j);

Json to_json(const DegreeColorability& d);

/// Graphviz dump of H with one cluster per owner vertex.
std::string cover_to_dot(const Cover& c);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace dpc

#endif  // DPC_JSON_IO_HPP
