#include <doctest.h>

#include <random>

#include "edgering/graph.hpp"
#include "edgering/lab.hpp"
#include "support.hpp"

using namespace edgering;
using edgering::testing::complete;
using edgering::testing::cycle;

namespace {

// Triangle {1,2,3} hanging off 1, and the 6-cycle 1-7-8-4-10-9-1.
SimpleGraph hexagon_with_triangle() {
  return SimpleGraph::from_edges({{1, 2}, {2, 3}, {1, 3}, {1, 7}, {7, 8}, {8, 4}, {4, 10}, {10, 9}, {9, 1}});
}

}  // namespace

TEST_CASE("construction rejects loops, duplicates and unknown endpoints") {
  CHECK_THROWS_AS(SimpleGraph::from_edges({{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph::from_edges({{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph({1, 2}, {Edge(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph::from_edges({{0, 2}}), std::invalid_argument);
  SimpleGraph g = SimpleGraph::from_edges({{3, 1}, {2, 1}});
  CHECK(g.edges()[0] == Edge(1, 2));
  CHECK(g.edge_index(3, 1) == std::size_t{1});
  CHECK_FALSE(g.edge_index(2, 3).has_value());
}

TEST_CASE("walks need adjacent consecutive vertices") {
  SimpleGraph g = hexagon_with_triangle();
  CHECK_THROWS_AS(Walk(g, {1, 4}), std::invalid_argument);
  Walk w(g, {1, 9, 10});
  CHECK(w.length() == 2);
  CHECK(w.reversed(g).vertices() == std::vector<VertexId>{10, 9, 1});
  CHECK(w.concat(g, Walk(g, {10, 4})).vertices() == std::vector<VertexId>{1, 9, 10, 4});
}

TEST_CASE("path and simple-path predicates on the hexagon-with-triangle graph") {
  SimpleGraph g = hexagon_with_triangle();
  // Interior vertex 1 has degree 4.
  CHECK_FALSE(is_path(g, Walk(g, {2, 1, 9, 10, 4})));
  CHECK_FALSE(is_path(g, Walk(g, {7, 1, 9})));

  Walk simple(g, {4, 10, 9, 1});
  CHECK(is_path(g, simple));
  CHECK(is_simple_path(g, simple));

  // Endpoints 7 and 9 share the neighbour 1, which is off the path.
  Walk loose(g, {7, 8, 4, 10, 9});
  CHECK(is_path(g, loose));
  CHECK_FALSE(is_simple_path(g, loose));
}

TEST_CASE("contracting the two bold paths") {
  SimpleGraph g = hexagon_with_triangle();
  ContractionResult a = contract_path(g, Walk(g, {4, 10, 9, 1}));
  CHECK(a.graph.num_vertices() == g.num_vertices() - 3);
  CHECK(isomorphic(a.graph, SimpleGraph::from_edges({{1, 2}, {2, 3}, {1, 3}, {1, 7}, {7, 8}, {8, 1}})));

  ContractionResult b = contract_path(g, Walk(g, {7, 8, 4, 10, 9}));
  CHECK(isomorphic(b.graph, SimpleGraph::from_edges({{1, 2}, {2, 3}, {1, 3}, {1, 7}})));
  CHECK(b.chi.at(7) == b.new_vertex);
  CHECK(b.chi.at(9) == b.new_vertex);
  CHECK(b.chi.at(2) == 2);
}

TEST_CASE("neighbourhoods and degrees") {
  SimpleGraph g = fixture("ex-2.9").tables[0].graph;
  CHECK(neighbors(g, 1) == std::set<VertexId>{2, 3, 7, 9});
  CHECK(degree(g, 9) == 2);
}

TEST_CASE("codimension and bipartiteness") {
  CHECK(is_bipartite(cycle(4)));
  CHECK_FALSE(is_bipartite(cycle(5)));
  CHECK(codim(cycle(4)) == 1);
  CHECK(codim(cycle(3)) == 0);
  CHECK(codim(complete(4)) == 2);
  CHECK(codim(fixture("ex-2.9").tables[0].graph) == 2);
}

TEST_CASE("incidence matrix") {
  Eigen::MatrixXi m = incidence_matrix(cycle(4));
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 4);
  CHECK((m.colwise().sum().array() == 2).all());
  CHECK(m.cast<double>().fullPivLu().rank() == 3);
  CHECK(incidence_matrix(cycle(5)).cast<double>().fullPivLu().rank() == 5);
}

TEST_CASE("triangle sequences") {
  for (int n = 1; n <= 5; ++n) {
    SimpleGraph t = triangle_sequence(n);
    CHECK(t.num_vertices() == static_cast<std::size_t>(2 * n + 1));
    CHECK(t.num_edges() == static_cast<std::size_t>(3 * n));
    for (int i = 1; i <= n; ++i) {
      CHECK(t.has_edge(2 * i - 1, 2 * i));
      CHECK(t.has_edge(2 * i, 2 * i + 1));
      CHECK(t.has_edge(2 * i - 1, 2 * i + 1));
    }
    CHECK(is_connected(t));
  }
}

TEST_CASE("connecting by an edge and splitting back") {
  SimpleGraph a = cycle(3);
  SimpleGraph b = shift_vertices(cycle(4), 3);
  ConnectedByEdge c = connect_by_edge(a, 2, b, 5);
  CHECK(c.bridge == Edge(2, 5));
  CHECK(c.graph.num_edges() == 8);
  auto sides = split_at_bridge(c.graph, c.bridge);
  REQUIRE(sides.has_value());
  CHECK(sides->first == a);
  CHECK(sides->second == b);
  CHECK_FALSE(split_at_bridge(cycle(4), Edge(1, 2)).has_value());
  CHECK_THROWS(connect_by_edge(a, 1, a, 2));
}

TEST_CASE("isomorphism is invariant under relabelling") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 30; ++k) {
    SimpleGraph g = random_connected_graph(rng, 4, 8, 0.4, 14);
    std::vector<VertexId> image(g.vertices());
    std::shuffle(image.begin(), image.end(), rng);
    std::map<VertexId, VertexId> map;
    for (std::size_t i = 0; i < image.size(); ++i) map[g.vertices()[i]] = image[i] + 20;
    CHECK(isomorphic(g, relabel(g, map)));
  }
  CHECK_FALSE(isomorphic(cycle(6), connect_by_edge(cycle(3), 1, shift_vertices(cycle(3), 3), 4).graph));
}

TEST_CASE("path contraction properties on random graphs") {
  std::mt19937_64 rng(11);
  FamilySpec spec;
  int seen = 0;
  for (int k = 0; k < 120; ++k) {
    PathInstance inst = random_even_path_instance(rng, spec, false);
    const SimpleGraph& g = inst.graph;
    Walk p(g, inst.args.path);
    ContractionResult c = contract_path(g, p);
    CHECK(c.graph.num_vertices() == g.num_vertices() - p.length());
    // chi is the identity off p and constant on p.
    for (VertexId v : g.vertices()) {
      const bool on_p = std::find(p.vertices().begin(), p.vertices().end(), v) != p.vertices().end();
      CHECK(c.chi.at(v) == (on_p ? c.new_vertex : v));
    }
    // Every edge of G maps to an edge of G/p or collapses.
    for (const Edge& e : g.edges()) {
      VertexId a = c.chi.at(e.a), b = c.chi.at(e.b);
      if (a != b) CHECK(c.graph.has_edge(a, b));
    }
    // Edge-by-edge folding in either direction gives the same graph.
    CHECK(contract_sequentially(g, p, false).graph == c.graph);
    CHECK(contract_sequentially(g, p, true).graph == c.graph);
    // Even contraction of a simple path keeps codim and bipartiteness, as
    // long as the endpoints are not adjacent (see the next test case).
    if (is_simple_path(g, p) && !g.has_edge(p.front(), p.back())) {
      ++seen;
      CHECK(codim(c.graph) == codim(g));
      CHECK(is_bipartite(c.graph) == is_bipartite(g));
    }
  }
  CHECK(seen > 10);
}

TEST_CASE("adjacent endpoints: contraction kills an odd cycle and drops the codimension") {
  // Pentagon 1..5 and triangle 5-6-7; p = (1,2,3,4,5) closes an odd cycle with {1,5}.
  SimpleGraph g = SimpleGraph::from_edges({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {5, 6}, {6, 7}, {7, 5}});
  Walk p(g, {1, 2, 3, 4, 5});
  REQUIRE(is_path(g, p));
  REQUIRE(is_simple_path(g, p));
  ContractionResult c = contract_path(g, p);
  CHECK(isomorphic(c.graph, cycle(3)));
  CHECK(codim(g) == 1);
  CHECK(codim(c.graph) == 0);
}

TEST_CASE("JSON round trip") {
  SimpleGraph g = fixture("fig-10").tables[0].graph;
  CHECK(graph_from_json(graph_to_json(g)) == g);
  SimpleGraph iso = graph_from_json(R"({"vertices":[1,2,3,4],"edges":[[1,2],[2,3],[3,4],[4,1]]})");
  CHECK(iso == cycle(4));
  CHECK_THROWS(graph_from_json(R"({"edges":[[1,1]]})"));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(cycle(5)));
  CHECK_FALSE(is_connected(SimpleGraph::from_edges({{1, 2}, {3, 4}})));
}
