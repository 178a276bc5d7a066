#include <doctest.h>

#include "dpc/configgen.hpp"
#include "dpc/json_io.hpp"
#include "dpc/solver.hpp"
#include "support/oracles.hpp"

using namespace dpc;
namespace orc = dpc::oracle;

TEST_CASE("hypergraph json") {
  const Json j = parse_json_text(R"({"vertices": [0,1,2], "edges": [[0,1],[0,1,2],[0,1]]})");
  const Hypergraph g = hypergraph_from_json(j);
  CHECK(g.size() == 3);
  CHECK(g.edge(1).pins.size() == 3);
  CHECK(multiplicity(g, 0, 1) == 2);
  CHECK(hypergraph_from_json(to_json(g)) == g);
  const Hypergraph s = shrink(g, 2);
  CHECK(hypergraph_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(hypergraph_from_json(parse_json_text(R"({"vertices": [0]})")), Error);
  CHECK_THROWS_AS(hypergraph_from_json(parse_json_text(R"({"vertices": [0,1], "edges": [[0,5]]})")), Error);
  CHECK_THROWS_AS(parse_json_text("{"), Error);
}

TEST_CASE("configuration json round trip") {
  for (const auto& cfg : {k_configuration(3, 2), even_c_configuration(4, 1), e_configuration(3),
                          odd_c_configuration(5, 1)}) {
    const Configuration back = configuration_from_json(parse_json_text(to_json(cfg).dump()));
    CHECK(back.graph() == cfg.graph());
    CHECK(back.cover.colors == cfg.cover.colors);
    CHECK(back.cover.conflicts == cfg.cover.conflicts);
    CHECK(back.cover.origin == cfg.cover.origin);
    REQUIRE(back.witness);
    CHECK(check_certificate(back, *back.witness).ok);
  }
  const auto lc = cover_from_lists(orc::path(2), {{0, {1}}, {1, {1}}});
  const Json j = to_json(lc.cover);
  CHECK(j["H_edges"].size() == 1);
  CHECK(j["H_edges"][0]["origin"] == 0);
}

TEST_CASE("transversal, lists and merge trees") {
  const Transversal t{{0, 4}, {3, 7}};
  CHECK(transversal_from_json(to_json(t)) == t);
  const auto lists = lists_from_json(parse_json_text(R"({"0":[1,2],"1":[2]})"));
  CHECK(lists.at(0) == std::vector<int>{1, 2});
  const auto tree =
      merge_tree_from_json(parse_json_text(R"({"merge": [{"leaf": "K:n=2,t=1"}, {"leaf": "E:arity=3"}], "at": [1, 0]})"));
  const auto cfg = constructible(tree);
  CHECK(cfg.graph().order() == 4);
  CHECK(degree(cfg.graph(), 1) == 2);
  CHECK_THROWS_AS(merge_tree_from_json(parse_json_text(R"({"merge": [], "at": [0, 0]})")), Error);
}

TEST_CASE("dot dump groups colors by owner") {
  const std::string dot = cover_to_dot(k_configuration(2, 1).cover);
  CHECK(dot.find("cluster_0") != std::string::npos);
  CHECK(dot.find("cluster_1") != std::string::npos);
  CHECK(dot.find("c0 -- c1") != std::string::npos);
}
