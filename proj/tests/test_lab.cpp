#include <doctest.h>

#include <filesystem>

#include "edgering/lab.hpp"
#include "support.hpp"

using namespace edgering;
using edgering::testing::cycle;

namespace {

// A triangle on 1,2,3 sharing vertex 3 with the hexagon 3-4-5-6-7-8-3.
SimpleGraph triangle_and_hexagon() {
  return SimpleGraph::from_edges({{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 3}});
}

}  // namespace

TEST_CASE("fixture registry") {
  CHECK(fixtures().size() == 7);
  CHECK(fixture("ex-2.9").tables.size() == 2);
  CHECK(fixture("fig-12").tables.size() == 3);
  CHECK_THROWS_AS(fixture("nope"), std::out_of_range);
  for (const auto& f : fixtures())
    for (const auto& t : f.tables) {
      CHECK(is_connected(t.graph));
      CHECK(t.graph.num_vertices() <= 11);
      CHECK(t.graph.num_edges() <= 15);
    }
}

TEST_CASE("worked examples with consistent tables reproduce exactly") {
  for (const char* id : {"ex-2.9", "ex-2.10", "ex-2.11", "fig-10", "fig-11", "fig-12"}) {
    CheckReport r = reproduce(id);
    INFO(r.to_text());
    CHECK(r.passed());
  }
}

TEST_CASE("single-edge contraction example: computed tables") {
  const Fixture& f = fixture("ex-2.8");
  BettiTable g = betti_table(f.tables[0].graph);
  CHECK(g.totals == f.tables[0].totals);
  BettiTable gp = betti_table(f.tables[1].graph);
  REQUIRE(gp.totals.size() == 5);
  CHECK(gp.totals[1] == 9);
  CHECK(gp.totals[3] == 9);
  CHECK(gp.totals[4] == 1);
  // Alternating sum of totals vanishes for a nonzero toric ideal.
  CHECK(gp.totals[0] + gp.totals[2] + gp.totals[4] == gp.totals[1] + gp.totals[3]);
  CHECK(gp.gorenstein);
}

TEST_CASE("even path contraction lowers Betti numbers strictly on the bypass example") {
  const SimpleGraph& g = fixture("ex-2.9").tables[0].graph;
  CheckReport r = check("thm-2.5", g, {{1, 9, 10}, {}, std::nullopt});
  REQUIRE(r.passed());
  const auto& tg = r.tables.at(0).second;
  const auto& tc = r.tables.at(1).second;
  for (std::size_t i = 1; i <= 3; ++i) CHECK(tg.at(i) > (i < tc.size() ? tc[i] : 0));
  CHECK(check("cor-2.6", g, {{1, 9, 10}, {}, std::nullopt}).passed());
  CHECK(check("lemma-2.3", g, {{1, 9, 10}, {}, std::nullopt}).passed());
}

TEST_CASE("equality needs |q| >= |p| + 2") {
  const SimpleGraph& g = fixture("ex-2.9").tables[0].graph;
  CheckReport r = check("thm-2.7", g, {{1, 9, 10}, {1, 9, 10, 4}, std::nullopt});
  CHECK_FALSE(r.hypotheses_met);
  CHECK_FALSE(r.is_counterexample());

  SimpleGraph h = triangle_and_hexagon();
  CheckReport ok = check("thm-2.7", h, {{5, 6, 7}, {4, 5, 6, 7, 8}, std::nullopt});
  CHECK(ok.hypotheses_met);
  CHECK(ok.conclusion_holds);
  CHECK_FALSE(check("thm-2.7", h, {{5, 6, 7}, {3, 4, 5, 6}, std::nullopt}).hypotheses_met);
}

TEST_CASE("malformed arguments throw") {
  const SimpleGraph& g = fixture("ex-2.9").tables[0].graph;
  CHECK_THROWS_AS(check("thm-2.5", g, {{1, 10}, {}, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(check("thm-9.9", g, {{1, 9, 10}, {}, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(check("thm-4.2", g, {}), std::invalid_argument);
  CHECK_THROWS_AS(check("thm-2.5", SimpleGraph::from_edges({{1, 2}, {3, 4}}), {{1, 2}, {}, std::nullopt}),
                  std::invalid_argument);
  // Odd path: hypotheses unmet, not an error.
  CHECK_FALSE(check("thm-2.5", g, {{1, 9}, {}, std::nullopt}).hypotheses_met);
}

TEST_CASE("bridge checks") {
  const SimpleGraph& g = fixture("fig-10").tables[0].graph;
  CheckReport r = check("thm-4.2", g, {{}, {}, Edge(3, 4)});
  CHECK(r.passed());
  CHECK(r.tables.at(0).second.at(1) == 6);
  CHECK(check("question-4.5", fixture("fig-11").tables[0].graph, {{}, {}, Edge(3, 4)}).passed());
  CHECK_FALSE(check("thm-4.2", cycle(4), {{}, {}, Edge(1, 2)}).hypotheses_met);

  ConnectedByEdge c = connect_by_edge(cycle(4), 1, shift_vertices(cycle(3), 4), 5);
  CheckReport p = check("prop-4.3", c.graph, {{}, {}, c.bridge});
  CHECK(p.passed());
  ConnectedByEdge odd = connect_by_edge(cycle(3), 1, shift_vertices(cycle(5), 3), 4);
  CHECK_FALSE(check("prop-4.3", odd.graph, {{}, {}, odd.bridge}).hypotheses_met);
}

TEST_CASE("convolution of totals") {
  CHECK(convolve({1, 2, 1}, {1, 1}) == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(convolve({1}, {1, 4, 4, 1}) == std::vector<std::size_t>{1, 4, 4, 1});
  CHECK(convolve({}, {1}).empty());
}

TEST_CASE("triangle sequences") {
  for (int n = 1; n <= 3; ++n) CHECK(triangle_study(n).passed());
  CHECK(triangle_study(1, 1).passed());
  CHECK(triangle_study(2, 1).passed());
  ConnectedByEdge c = chained_triangles(2, 1);
  CHECK(c.graph.num_vertices() == 8);
  CHECK(c.bridge == Edge(5, 6));
}

TEST_CASE("search is deterministic under a fixed seed") {
  FamilySpec spec;
  spec.check = "thm-2.5";
  spec.max_vertices = 7;
  spec.max_edges = 9;
  auto a = random_search(spec, 42, 5);
  auto b = random_search(spec, 42, 5);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].to_json_line() == b[i].to_json_line());
    CHECK(a[i].seed == std::optional<std::uint64_t>{42});
  }
  auto c = random_search(spec, 43, 5);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs = differs || a[i].to_json_line() != c[i].to_json_line();
  CHECK(differs);
}

TEST_CASE("family specs") {
  FamilySpec s = FamilySpec::from_json(R"({"family":"bridge","check":"prop-4.3","max_edges":10})");
  CHECK(s.family == "bridge");
  CHECK(s.check == "prop-4.3");
  CHECK(s.max_edges == 10);
  CHECK(s.min_vertices == 6);
  CHECK_THROWS(FamilySpec::from_json(R"({"min_vertices":5,"max_vertices":3})"));
  FamilySpec bad;
  bad.check = "nonsense";
  CHECK_THROWS_AS(random_search(bad, 1, 1), std::invalid_argument);
}

TEST_CASE("random generators respect their contracts") {
  Rng rng(8);
  FamilySpec spec;
  for (int k = 0; k < 20; ++k) {
    PathInstance p = random_even_path_instance(rng, spec, true);
    Walk w(p.graph, p.args.path);
    CHECK(p.graph.num_edges() <= 12);
    CHECK(w.length() % 2 == 0);
    CHECK(is_path(p.graph, w));
    CHECK(is_simple_path(p.graph, w));

    PathInstance n = random_nested_path_instance(rng, spec);
    Walk q(n.graph, n.args.q);
    CHECK(is_path(n.graph, q));
    CHECK(q.length() >= n.args.path.size() + 1);

    FamilySpec bs = spec;
    bs.bipartite_side = true;
    PathInstance b = random_bridge_instance(rng, bs);
    auto sides = split_at_bridge(b.graph, *b.args.edge);
    REQUIRE(sides);
    CHECK(is_bipartite(sides->first));
  }
}

TEST_CASE("counterexample reproducers are only written for violations") {
  auto dir = std::filesystem::temp_directory_path() / "edgering_search_test";
  std::filesystem::remove_all(dir);
  FamilySpec spec;
  spec.check = "thm-4.2";
  spec.max_edges = 9;
  spec.out_dir = dir.string();
  for (const auto& r : random_search(spec, 5, 4)) CHECK_FALSE(r.reproducer.has_value());
  CHECK_FALSE(std::filesystem::exists(dir));
}
