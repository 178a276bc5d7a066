#include <doctest.h>

#include "dpc/configgen.hpp"
#include "dpc/solver.hpp"
#include "support/oracles.hpp"

using namespace dpc;
namespace orc = dpc::oracle;

namespace {

bool regular_connected_cycle(const Hypergraph& h) {
  for (VertexId x : h.vertices())
    if (degree(h, x) != 2) return false;
  return is_connected(h) && h.order() == h.size();
}

Configuration offset(const Configuration& c, const Configuration& after) {
  return shifted(c, IdOffsets{after.graph().max_vertex_id() + 1, after.graph().max_edge_id() + 1,
                              after.cover.conflicts.max_vertex_id() + 1, after.cover.conflicts.max_edge_id() + 1});
}

void check_generated(const Configuration& cfg) {
  REQUIRE(validate_cover(cfg.cover).ok());
  REQUIRE(cfg.witness.has_value());
  const auto check = check_certificate(cfg, *cfg.witness);
  CHECK_MESSAGE(check.ok, check.reason);
  for (VertexId v : cfg.graph().vertices()) CHECK(cfg.cover.color_set(v).size() == degree(cfg.graph(), v));
}

}  // namespace

TEST_CASE("K-configurations") {
  SUBCASE("n=1") {
    const auto k = k_configuration(1, 1);
    CHECK(k.graph().order() == 1);
    CHECK(k.cover.color_set(0).empty());
    CHECK(k.cover.conflicts.empty());
  }
  SUBCASE("n=2, t=1") {
    const auto k = k_configuration(2, 1);
    CHECK(k.cover.color_set(0).size() == 1);
    CHECK(k.cover.conflicts.size() == 1);
    CHECK_FALSE(orc::colorable(k.cover));
  }
  SUBCASE("n=3, t=2") {
    const auto k = k_configuration(3, 2);
    check_generated(k);
    CHECK(k.cover.color_set(1).size() == 4);
    // two classes, each a complete 3-partite graph with parts of size 2
    CHECK(k.cover.conflicts.size() == 2 * 3 * 4);
    CHECK(orc::minimal_uncolorable(k.cover));
  }
  CHECK_THROWS_AS(k_configuration(0, 1), Error);
  CHECK_THROWS_AS(k_configuration(3, 0), Error);
}

TEST_CASE("odd C-configurations") {
  const auto c5 = odd_c_configuration(5, 1);
  check_generated(c5);
  SUBCASE("H is two disjoint 5-cycles") {
    const auto parts = component_vertex_sets(c5.cover.conflicts);
    CHECK(parts.size() == 2);
    for (const auto& p : parts) CHECK(p.size() == 5);
    CHECK(c5.cover.conflicts.size() == 10);
    for (VertexId x : c5.cover.conflicts.vertices()) CHECK(degree(c5.cover.conflicts, x) == 2);
  }
  CHECK(orc::minimal_uncolorable(c5.cover));
  const auto c7 = odd_c_configuration(7, 2);
  check_generated(c7);
  for (VertexId v : c7.graph().vertices()) CHECK(c7.cover.color_set(v).size() == 4);
  CHECK(is_degree_feasible(c7.cover));
  CHECK_THROWS_AS(odd_c_configuration(4, 1), Error);
  CHECK_THROWS_AS(odd_c_configuration(3, 1), Error);
}

TEST_CASE("even C-configurations") {
  const auto c4 = even_c_configuration(4, 1);
  check_generated(c4);
  CHECK(c4.cover.conflicts.order() == 8);
  CHECK(regular_connected_cycle(c4.cover.conflicts));
  CHECK(orc::minimal_uncolorable(c4.cover));
  const auto c6 = even_c_configuration(6, 2);
  check_generated(c6);
  CHECK(is_degree_feasible(c6.cover));
  CHECK_FALSE(orc::colorable(c6.cover));
  SUBCASE("other twist positions") {
    const auto t = even_c_configuration(4, 1, std::make_pair(1, 2));
    check_generated(t);
    CHECK(orc::minimal_uncolorable(t.cover));
  }
  CHECK_THROWS_AS(even_c_configuration(4, 1, std::make_pair(0, 2)), Error);
  CHECK_THROWS_AS(even_c_configuration(5, 1), Error);
}

TEST_CASE("E-configurations") {
  const auto e3 = e_configuration(3);
  check_generated(e3);
  CHECK_FALSE(orc::colorable(e3.cover));
  CHECK(orc::colorable(without_conflict(e3.cover, e3.cover.conflicts.edges()[0].id)));
  CHECK(orc::isomorphic(e_configuration(2).cover, k_configuration(2, 1).cover));
  CHECK_THROWS_AS(e_configuration(1), Error);
}

TEST_CASE("merging configurations") {
  SUBCASE("K2 with K2 gives P3") {
    const auto a = k_configuration(2, 1);
    const auto m = merge_configurations(a, offset(a, a), 1, a.graph().max_vertex_id() + 1);
    CHECK(m.config.graph().order() == 3);
    CHECK(m.config.cover.color_set(m.merged).size() == 2);
    check_generated(m.config);
    CHECK(orc::minimal_uncolorable(m.config.cover));
  }
  SUBCASE("K3 with E3") {
    const auto a = k_configuration(3, 1);
    const auto b = offset(e_configuration(3), a);
    const auto m = merge_configurations(a, b, 0, b.graph().vertices()[0]);
    CHECK(m.config.graph().order() == 5);
    const auto d = blocks(m.config.graph());
    CHECK(d.blocks.size() == 2);
    check_generated(m.config);
    CHECK(orc::minimal_uncolorable(m.config.cover));
  }
  SUBCASE("colorable pieces stay colorable") {
    Configuration a;
    a.cover.base = orc::path(2);
    a.cover.colors = {{0, {0}}, {1, {1}}};
    a.cover.conflicts = Hypergraph({0, 1}, {});
    const auto m = merge_configurations(a, offset(a, a), 1, 2);
    CHECK(validate_cover(m.config.cover).ok());
    CHECK(orc::colorable(m.config.cover));
  }
  SUBCASE("overlapping ids are rejected") {
    const auto a = k_configuration(2, 1);
    CHECK_THROWS_AS(merge_configurations(a, a, 0, 1), Error);
  }
}

TEST_CASE("constructible") {
  const auto leaf = [](const char* s) { return MergeTree::make_leaf(parse_leaf_spec(s)); };
  SUBCASE("single leaf") {
    const auto c = constructible(leaf("K:n=3,t=1"));
    CHECK(c.graph() == k_configuration(3, 1).graph());
    CHECK(orc::isomorphic(c.cover, k_configuration(3, 1).cover));
  }
  SUBCASE("K2 chain gives P4") {
    const auto t = MergeTree::make_merge(MergeTree::make_merge(leaf("K:n=2"), leaf("K:n=2"), 1, 0), leaf("K:n=2"), 2, 0);
    const auto c = constructible(t);
    CHECK(c.graph() == orc::path(4));
    for (const Hypergraph& b : blocks(c.graph()).blocks) CHECK(b.order() == 2);
    check_generated(c);
    CHECK_FALSE(orc::colorable(c.cover));
  }
  SUBCASE("star of three E3 leaves") {
    const auto t = MergeTree::make_merge(MergeTree::make_merge(leaf("E:arity=3"), leaf("E:arity=3"), 0, 0),
                                         leaf("E:arity=3"), 0, 0);
    const auto c = constructible(t);
    CHECK(c.graph().order() == 7);
    CHECK(blocks(c.graph()).blocks.size() == 3);
    CHECK(degree(c.graph(), 0) == 3);
    check_generated(c);
    CHECK_FALSE(orc::colorable(c.cover));
  }
  CHECK_THROWS_AS(constructible(MergeTree::make_merge(leaf("K:n=2"), leaf("K:n=2"), 5, 0)), Error);
}

TEST_CASE("leaf specs") {
  const auto s = parse_leaf_spec("Ceven:n=4,t=1,twist=0-3");
  CHECK(s.family == Family::EvenC);
  CHECK(s.n == 4);
  CHECK(s.twist == std::make_pair(0, 3));
  CHECK(parse_leaf_spec(to_string(s)).twist == s.twist);
  CHECK(parse_leaf_spec("E:arity=4").n == 4);
  CHECK(parse_leaf_spec("K:n=3").t == 1);
  for (const char* bad : {"", "K", "K:n=", "Q:n=3", "K:n=3,t=x", "K:n=3,q=1", "Codd:n=4,t=1"})
    CHECK_THROWS_AS(build_leaf(parse_leaf_spec(bad)), Error);
}

TEST_CASE("hyperbrick configurations") {
  for (const auto& entry : orc::corpus()) {
    if (dp_degree_colorable(entry.graph).colorable) {
      CHECK_THROWS_AS(hyperbrick_configuration(entry.graph), Error);
      continue;
    }
    const auto cfg = hyperbrick_configuration(entry.graph);
    CHECK(cfg.graph() == entry.graph);
    check_generated(cfg);
  }
}
