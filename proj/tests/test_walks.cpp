#include <doctest.h>

#include <numeric>
#include <random>

#include "edgering/binomial.hpp"
#include "edgering/lab.hpp"
#include "edgering/walks.hpp"
#include "support.hpp"

using namespace edgering;
using edgering::testing::complete;
using edgering::testing::cycle;

namespace {

Exponents monomial(std::size_t n, std::initializer_list<int> vars) {
  Exponents e = Exponents::Zero(static_cast<Eigen::Index>(n));
  for (int v : vars) e[v - 1] += 1;
  return e;
}

bool has_equivalent(const std::vector<Binomial>& pool, const Binomial& f) {
  return std::any_of(pool.begin(), pool.end(), [&](const Binomial& b) { return b.equivalent(f); });
}

}  // namespace

TEST_CASE("the square has one walk binomial e1e4 - e2e3") {
  SimpleGraph c4 = cycle(4);  // e1={1,2} e2={1,4} e3={2,3} e4={3,4}
  auto walks = enumerate_primitive_walks(c4);
  REQUIRE(walks.size() == 1);
  WalkBinomial f = walk_binomial(c4, walks[0]);
  const Exponents a = monomial(4, {1, 4}), b = monomial(4, {2, 3});
  CHECK(((same_exponents(f.plus, a) && same_exponents(f.minus, b)) ||
         (same_exponents(f.plus, b) && same_exponents(f.minus, a))));
}

TEST_CASE("closed even walk validation") {
  SimpleGraph c4 = cycle(4);
  CHECK_THROWS_AS(ClosedEvenWalk(c4, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ClosedEvenWalk(cycle(3), {1, 2, 3, 1}), std::invalid_argument);
  CHECK_NOTHROW(ClosedEvenWalk(c4, {1, 2, 1, 4, 1}));
}

TEST_CASE("odd cycles and trees have no binomials") {
  CHECK(enumerate_primitive_walks(cycle(5)).empty());
  CHECK(enumerate_primitive_walks(SimpleGraph::from_edges({{1, 2}, {2, 3}, {2, 4}})).empty());
}

TEST_CASE("two triangles joined at a vertex give the bowtie walk") {
  SimpleGraph bowtie = SimpleGraph::from_edges({{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
  auto walks = enumerate_primitive_walks(bowtie);
  REQUIRE(walks.size() == 1);
  CHECK(walks[0].length() == 6);
  CHECK(walk_binomial(bowtie, walks[0]).plus.sum() == 3);
}

TEST_CASE("walk binomials are homogeneous, lie in ker M_G and use edges at most twice") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 25; ++k) {
    SimpleGraph g = random_connected_graph(rng, 5, 8, 0.45, 12);
    Eigen::MatrixXi m = incidence_matrix(g);
    for (const auto& w : enumerate_primitive_walks(g)) {
      WalkBinomial f = walk_binomial(g, w);
      CHECK(f.plus.sum() == f.minus.sum());
      CHECK((m * (f.plus - f.minus)).isZero());
      CHECK((f.plus + f.minus).maxCoeff() <= 2);
      CHECK_FALSE(f.is_zero());
    }
  }
}

TEST_CASE("primitive walks generate I_G and contain every reduced Groebner basis") {
  std::vector<SimpleGraph> graphs{complete(4), cycle(6), fixture("ex-2.9").tables[0].graph,
                                  fixture("ex-2.11").tables[0].graph};
  std::mt19937_64 rng(5);
  for (int k = 0; k < 8; ++k) graphs.push_back(random_connected_graph(rng, 5, 7, 0.5, 10));
  for (const SimpleGraph& g : graphs) {
    BinomialIdeal walks = walk_ideal(g);
    BinomialIdeal gb = toric_ideal(g);
    CHECK(generators_reduce_to_zero(walks, gb));
    CHECK(generators_reduce_to_zero(gb, buchberger(walks, *gb.gb_order)));

    const std::size_t n = g.num_edges();
    std::vector<TermOrder> orders{TermOrder::lex(n), TermOrder::degrevlex(n)};
    for (int t = 0; t < 3; ++t) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      orders.emplace_back(t % 2 ? TermOrder::Kind::lex : TermOrder::Kind::degrevlex, perm);
    }
    for (const TermOrder& ord : orders)
      for (const Binomial& b : toric_ideal(g, ord).generators) CHECK(has_equivalent(walks.generators, b));
  }
}

TEST_CASE("primitive walks are pairwise non-dominating") {
  SimpleGraph g = fixture("ex-2.11").tables[0].graph;
  auto all = enumerate_candidate_walks(g);
  auto prim = enumerate_primitive_walks(g);
  CHECK(all.size() >= prim.size());
  for (const auto& w : prim) CHECK(is_primitive(g, w, all));
}

TEST_CASE("images and lifts along an even simple path") {
  SimpleGraph g = fixture("ex-2.9").tables[0].graph;
  Walk p(g, {1, 9, 10});
  ContractionResult c = contract_path(g, p);
  auto lifted_from = enumerate_primitive_walks(c.graph);
  REQUIRE_FALSE(lifted_from.empty());
  for (const auto& v : lifted_from) {
    ClosedEvenWalk w = lift_walk(g, v, p, c);
    ClosedEvenWalk back = contract_walk_image(g, w, p, c);
    REQUIRE_FALSE(back.empty());
    CHECK(back.canonical_edges() == v.canonical_edges());
  }
}

TEST_CASE("lifting works on random simple path instances") {
  std::mt19937_64 rng(9);
  FamilySpec spec;
  for (int k = 0; k < 25; ++k) {
    PathInstance inst = random_even_path_instance(rng, spec, true);
    Walk p(inst.graph, inst.args.path);
    ContractionResult c = contract_path(inst.graph, p);
    for (const auto& v : enumerate_primitive_walks(c.graph)) {
      ClosedEvenWalk w = lift_walk(inst.graph, v, p, c);
      CHECK(contract_walk_image(inst.graph, w, p, c).canonical_edges() == v.canonical_edges());
    }
  }
}

TEST_CASE("the square collapses to a single edge") {
  SimpleGraph c4 = cycle(4);
  Walk p(c4, {1, 2, 3});
  ContractionResult c = contract_path(c4, p);
  CHECK(c.graph.num_edges() == 1);
  ClosedEvenWalk w(c4, {1, 2, 3, 4, 1});
  CHECK(contract_walk_image(c4, w, p, c).empty());
}

TEST_CASE("a walk using part of the path is rejected") {
  SimpleGraph g = cycle(6);
  Walk p(g, {1, 2, 3});
  ContractionResult c = contract_path(g, p);
  ClosedEvenWalk w(g, {1, 2, 1, 6, 5, 4, 3, 4, 5, 6, 1});
  CHECK_THROWS_AS(contract_walk_image(g, w, p, c), std::domain_error);
}
