#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "prodset/construct.hpp"
#include "prodset/multigraph.hpp"
#include "test_util.hpp"

using namespace prodset;

TEST_CASE("from_sequence counts occurrences") {
  TranspSequence u(3, {{0, 1}, {1, 2}, {0, 1}});
  auto g = Multigraph::from_sequence(u);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.multiplicity(1, 2) == 1);
  CHECK(g.multiplicity(0, 2) == 0);
  CHECK(g.total_multiplicity() == 3);
}

TEST_CASE("path and bike sequences produce the expected graphs") {
  auto path = Multigraph::from_sequence(tau(4));
  CHECK(path.distinct_edge_count() == 3);
  CHECK(path.is_multitree());
  CHECK(path.is_simple());

  auto b2 = bike(2);
  CHECK(b2.vertex_count() == 4);
  std::vector<Transposition> expect{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  std::vector<Transposition> got;
  for (const auto& [e, m] : b2.edges()) {
    got.push_back(e);
    CHECK(m == 1);
  }
  std::sort(expect.begin(), expect.end());
  CHECK(got == expect);
}

TEST_CASE("canonical sequence is the sorted expansion") {
  Multigraph g(3);
  g.add_edge(1, 2);
  g.add_edge(0, 1, 2);
  auto s = g.canonical_sequence();
  CHECK(s.terms == std::vector<Transposition>{{0, 1}, {0, 1}, {1, 2}});
  CHECK(Multigraph::from_sequence(s) == g);

  CHECK(Multigraph(4).canonical_sequence().terms.empty());

  auto k3 = complete(3).canonical_sequence();
  CHECK(k3.terms == std::vector<Transposition>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("components split isolated vertices out") {
  Multigraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto parts = g.components();
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(parts[1].vertices == std::vector<int>{3});
  CHECK_FALSE(g.is_connected());

  CHECK(complete(4).components().size() == 1);

  Multigraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  CHECK(two.components().size() == 2);
}

TEST_CASE("multitree detection") {
  Multigraph g(3);
  g.add_edge(0, 1, 3);
  g.add_edge(1, 2);
  CHECK(g.is_multitree());

  Multigraph tri(3);
  tri.add_edge(0, 1, 2);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2, 5);
  CHECK_FALSE(tri.is_multitree());

  Multigraph edge2(2);
  edge2.add_edge(0, 1, 2);
  CHECK(edge2.is_multitree());
}

TEST_CASE("twig profiles") {
  // star with center 1
  Multigraph star(4);
  star.add_edge(0, 1);
  star.add_edge(1, 2);
  star.add_edge(1, 3);
  auto twigs = star.twig_profiles();
  REQUIRE(twigs.size() == 3);
  for (const auto& t : twigs) {
    CHECK(t.hub == 1);
    CHECK(t.hub_degree == 3);
    CHECK(t.multiplicity == 1);
  }

  Multigraph path(3);
  path.add_edge(0, 1, 2);
  path.add_edge(1, 2);
  auto pt = path.twig_profiles();
  REQUIRE(pt.size() == 2);
  CHECK(pt[0].edge == Transposition(0, 1));
  CHECK(pt[0].leaf == 0);
  CHECK(pt[0].hub == 1);
  CHECK(pt[0].hub_degree == 2);
  CHECK(pt[1].edge == Transposition(1, 2));
  CHECK(pt[1].hub == 1);

  CHECK(complete(3).twig_profiles().empty());

  // two-vertex multigraph: the lowest index is reported as the leaf
  Multigraph pair(2);
  pair.add_edge(0, 1, 4);
  auto pp = pair.twig_profiles();
  REQUIRE(pp.size() == 1);
  CHECK(pp[0].leaf == 0);
  CHECK(pp[0].hub == 1);
}

TEST_CASE("cross edges") {
  Multigraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  auto c = path.cross_edges({0});
  REQUIRE(c.size() == 1);
  CHECK(c[0].first == Transposition(0, 1));

  auto k4 = complete(4);
  CHECK(k4.cross_edges({0, 1}).size() == 4);

  auto e = Multigraph::from_sequence(named_sequence("e"));
  auto ce = e.cross_edges({0, 1, 2, 3});
  REQUIRE(ce.size() == 3);
  CHECK(ce[0].first == Transposition(2, 4));
  CHECK(ce[1].first == Transposition(3, 4));
  CHECK(ce[2].first == Transposition(3, 7));

  CHECK_THROWS_AS(path.cross_edges({}), std::domain_error);
  CHECK_THROWS_AS(path.cross_edges({0, 1, 2}), std::domain_error);
  CHECK_THROWS_AS(path.cross_edges({0, 0}), std::domain_error);
}

TEST_CASE("text format round trip sums duplicates") {
  std::istringstream in(
      "# comment\n"
      "n 4\n"
      "0 1 2\n"
      "1 2\n"
      "0 1  # trailing comment\n");
  auto g = Multigraph::parse_text(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.multiplicity(0, 1) == 3);
  CHECK(g.multiplicity(1, 2) == 1);

  std::istringstream round(g.to_text());
  CHECK(Multigraph::parse_text(round) == g);

  std::istringstream missing("0 1\n");
  CHECK_THROWS_AS(Multigraph::parse_text(missing), ParseError);
  std::istringstream loop("n 3\n1 1\n");
  CHECK_THROWS_AS(Multigraph::parse_text(loop), ParseError);
}

TEST_CASE("json mirror round trip") {
  Multigraph g(4);
  g.add_edge(0, 3, 2);
  g.add_edge(1, 2);
  CHECK(Multigraph::from_json_text(g.to_json()) == g);
}

TEST_CASE("multigraph only depends on the term multiset") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto s = testutil::random_seq(rng, 5, 7);
    auto r = s;
    std::shuffle(r.terms.begin(), r.terms.end(), rng);
    CHECK(Multigraph::from_sequence(r) == Multigraph::from_sequence(s));
  }
}

TEST_CASE("degree sum counts distinct edges twice") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = Multigraph::from_sequence(testutil::random_seq(rng, 6, 9));
    int total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += g.distinct_degree(v);
    CHECK(total == 2 * g.distinct_edge_count());
  }
}

TEST_CASE("canonical key is a relabeling invariant") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = Multigraph::from_sequence(testutil::random_seq(rng, 5, 6));
    auto relabel = testutil::random_perm(rng, 5);
    Multigraph h(5);
    for (const auto& [e, m] : g.edges())
      h.add_edge(relabel.apply(e.a), relabel.apply(e.b), m);
    CHECK(h.canonical_key() == g.canonical_key());
    CHECK(h.canonical_id() == g.canonical_id());
  }
  CHECK_THROWS_AS(Multigraph(9).canonical_key(), std::domain_error);
}
