#include "dpc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace dpc {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(std::string("malformed ") + what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

VertexId key_to_id(const std::string& key) {
  std::size_t used = 0;
  const long value = std::stol(key, &used);
  if (used != key.size()) throw Error("bad id key \"" + key + "\"");
  return static_cast<VertexId>(value);
}

bool dense_ids(std::span<const Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id != static_cast<EdgeId>(i)) return false;
  return true;
}

Json id_map(const std::map<VertexId, std::vector<Color>>& m) {
  Json out = Json::object();
  for (const auto& [v, xs] : m) out[std::to_string(v)] = xs;
  return out;
}

}  // namespace

Json to_json(const Hypergraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(e.pins);
  Json out{{"vertices", std::vector<VertexId>(g.vertices().begin(), g.vertices().end())}, {"edges", edges}};
  if (!dense_ids(g.edges())) {
    std::vector<EdgeId> ids;
    for (const Edge& e : g.edges()) ids.push_back(e.id);
    out["edge_ids"] = ids;
  }
  return out;
}

Hypergraph hypergraph_from_json(const Json& j) {
  return guarded("hypergraph", [&] {
    auto vertices = field(j, "vertices").get<std::vector<VertexId>>();
    const auto incidences = field(j, "edges").get<std::vector<std::vector<VertexId>>>();
    std::vector<EdgeId> ids;
    if (j.contains("edge_ids")) {
      ids = j.at("edge_ids").get<std::vector<EdgeId>>();
      if (ids.size() != incidences.size()) throw Error("edge_ids and edges differ in length");
    } else {
      for (std::size_t i = 0; i < incidences.size(); ++i) ids.push_back(static_cast<EdgeId>(i));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < incidences.size(); ++i) edges.push_back({ids[i], incidences[i]});
    return Hypergraph(std::move(vertices), std::move(edges));
  });
}

Json to_json(const Cover& c) {
  Json h = Json::array();
  for (const Edge& e : c.conflicts.edges()) {
    Json entry{{"id", e.id}, {"endpoints", e.pins}};
    if (auto it = c.origin.find(e.id); it != c.origin.end()) entry["origin"] = it->second;
    h.push_back(entry);
  }
  return Json{{"base", to_json(c.base)}, {"colors", id_map(c.colors)}, {"H_edges", h}};
}

Cover cover_from_json(const Json& j) {
  return guarded("cover", [&] {
    Cover c;
    c.base = hypergraph_from_json(field(j, "base"));
    const Json& colors = field(j, "colors");
    if (!colors.is_object()) throw Error("\"colors\" must be an object");
    std::vector<Color> all;
    for (const auto& [key, xs] : colors.items()) {
      auto& set = c.colors[key_to_id(key)];
      set = xs.get<std::vector<Color>>();
      std::sort(set.begin(), set.end());
      all.insert(all.end(), set.begin(), set.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<Edge> edges;
    const Json& h = field(j, "H_edges");
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Json& entry = h.at(i);
      const EdgeId id = entry.contains("id") ? entry.at("id").get<EdgeId>() : static_cast<EdgeId>(i);
      edges.push_back({id, field(entry, "endpoints").get<std::vector<Color>>()});
      if (entry.contains("origin")) c.origin[id] = entry.at("origin").get<EdgeId>();
    }
    // H-vertices are exactly the listed colors; anything else is reported by validation.
    for (const Edge& e : edges)
      for (Color x : e.pins)
        if (!std::binary_search(all.begin(), all.end(), x))
          throw Error("H-edge " + std::to_string(e.id) + " uses color " + std::to_string(x) + " outside every X_v");
    c.conflicts = Hypergraph(std::move(all), std::move(edges));
    return c;
  });
}

Json to_json(const Certificate& cert) {
  Json blocks = Json::array();
  for (const BlockWitness& w : cert.blocks) {
    std::map<VertexId, std::vector<Color>> colors;
    for (VertexId v : w.vertices) colors[v] = w.colors_of(v);
    Json b{{"family", to_string(w.family)}, {"n", w.n},           {"t", w.t},
           {"vertices", w.vertices},        {"colors", id_map(colors)}, {"partition", w.partition},
           {"h_edges", w.h_edges}};
    if (w.twist) b["twist"] = {w.twist->first, w.twist->second};
    blocks.push_back(b);
  }
  return Json{{"blocks", blocks}, {"extra_edges", cert.extra_edges}};
}

Certificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    Certificate cert;
    for (const Json& b : field(j, "blocks")) {
      BlockWitness w;
      const auto name = field(b, "family").get<std::string>();
      auto family = family_from_string(name);
      if (!family) throw Error("unknown family \"" + name + "\"");
      w.family = *family;
      w.n = field(b, "n").get<int>();
      w.t = field(b, "t").get<int>();
      w.vertices = field(b, "vertices").get<std::vector<VertexId>>();
      w.partition = field(b, "partition").get<std::vector<std::vector<std::vector<Color>>>>();
      w.h_edges = field(b, "h_edges").get<std::vector<EdgeId>>();
      if (b.contains("twist")) {
        const auto pair = b.at("twist").get<std::vector<VertexId>>();
        if (pair.size() != 2) throw Error("twist must name two vertices");
        w.twist = std::minmax(pair[0], pair[1]);
      }
      cert.blocks.push_back(std::move(w));
    }
    if (j.contains("extra_edges")) cert.extra_edges = j.at("extra_edges").get<std::vector<EdgeId>>();
    return cert;
  });
}

Json to_json(const Configuration& cfg) {
  Json out = to_json(cfg.cover);
  if (cfg.witness) out["witness"] = to_json(*cfg.witness);
  return out;
}

Configuration configuration_from_json(const Json& j) {
  Configuration cfg{cover_from_json(j), std::nullopt};
  if (j.is_object() && j.contains("witness")) cfg.witness = certificate_from_json(j.at("witness"));
  return cfg;
}

Json to_json(const Transversal& t) {
  Json out = Json::object();
  for (const auto& [v, x] : t) out[std::to_string(v)] = x;
  return out;
}

Transversal transversal_from_json(const Json& j) {
  return guarded("transversal", [&] {
    if (!j.is_object()) throw Error("transversal must be an object");
    Transversal t;
    for (const auto& [key, x] : j.items()) t[key_to_id(key)] = x.get<Color>();
    return t;
  });
}

ListAssignment lists_from_json(const Json& j) {
  return guarded("list assignment", [&] {
    if (!j.is_object()) throw Error("lists must be an object");
    ListAssignment lists;
    for (const auto& [key, xs] : j.items()) lists[key_to_id(key)] = xs.get<std::vector<int>>();
    return lists;
  });
}

MergeTree merge_tree_from_json(const Json& j) {
  return guarded("merge tree", [&]() -> MergeTree {
    if (j.is_object() && j.contains("leaf")) return MergeTree::make_leaf(parse_leaf_spec(j.at("leaf").get<std::string>()));
    const Json& parts = field(j, "merge");
    const auto at = field(j, "at").get<std::vector<VertexId>>();
    if (!parts.is_array() || parts.size() != 2 || at.size() != 2)
      throw Error("a merge node needs two children and two vertices");
    return MergeTree::make_merge(merge_tree_from_json(parts[0]), merge_tree_from_json(parts[1]), at[0], at[1]);
  });
}

Json to_json(const DegreeColorability& d) {
  Json blocks = Json::array();
  for (const BlockReport& r : d.blocks) {
    Json b{{"vertices", r.vertices}, {"class", to_string(r.brick.tag)}};
    if (r.brick.tag == BrickTag::TKN || r.brick.tag == BrickTag::TCN) {
      b["n"] = r.brick.n;
      b["t"] = r.brick.t;
    }
    if (r.brick.tag == BrickTag::HYPEREDGE) b["arity"] = r.brick.arity;
    blocks.push_back(b);
  }
  return Json{{"blocks", blocks}, {"dp_degree_colorable", d.colorable}};
}

std::string cover_to_dot(const Cover& c) {
  std::ostringstream out;
  out << "graph H {\n";
  for (const auto& [v, xs] : c.colors) {
    out << "  subgraph cluster_" << v << " {\n    label=\"X_" << v << "\";\n";
    for (Color x : xs) out << "    c" << x << " [label=\"" << x << "\"];\n";
    out << "  }\n";
  }
  for (const Edge& e : c.conflicts.edges()) {
    if (e.pins.size() == 2) {
      out << "  c" << e.pins[0] << " -- c" << e.pins[1] << ";\n";
      continue;
    }
    // Hyperedges get a small hub node.
    out << "  h" << e.id << " [shape=point];\n";
    for (Color x : e.pins) out << "  h" << e.id << " -- c" << x << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

}  // namespace dpc
