#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle_naive.hpp"
#include "prodset/construct.hpp"
#include "prodset/enumeration.hpp"
#include "prodset/survey.hpp"
#include "test_util.hpp"

using namespace prodset;

namespace {

TranspSequence seq_of(int degree, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Transposition> terms;
  for (auto [a, b] : pairs) terms.emplace_back(a, b);
  return TranspSequence(degree, std::move(terms));
}

}  // namespace

TEST_CASE("product set of the three-point path") {
  auto prod = enumerate_prod(tau(3));
  REQUIRE(prod.has_value());
  REQUIRE(prod->members.size() == 2);
  CHECK(prod->members[0] == Permutation::parse_cycles("(0 1 2)", 3));
  CHECK(prod->members[1] == Permutation::parse_cycles("(0 2 1)", 3));
  CHECK_FALSE(prod->even);
}

TEST_CASE("product set of the triangle") {
  auto prod = enumerate_prod(complete(3).canonical_sequence());
  REQUIRE(prod.has_value());
  CHECK(prod->members.size() == 3);  // 3!/2
  // independent check: all six arrangements composed directly
  CHECK(prod->members == testutil::naive_prod(complete(3).canonical_sequence()));
  for (const auto& f : prod->members) CHECK(f.cycle_type().to_string() == "1^1 2^1");
}

TEST_CASE("equal transpositions cancel in either order") {
  auto prod = enumerate_prod(seq_of(2, {{0, 1}, {0, 1}}));
  REQUIRE(prod.has_value());
  REQUIRE(prod->members.size() == 1);
  CHECK(prod->members[0] == Permutation::identity(2));
}

TEST_CASE("subset DP agrees with direct iteration over rearrangements") {
  // all connected multigraph classes at small scale
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : connected_multigraph_classes(n, 6)) {
      auto s = g.canonical_sequence();
      if (s.size() > 7) continue;
      auto fast = enumerate_prod(s);
      REQUIRE(fast.has_value());
      CHECK(fast->members == testutil::naive_prod(s));
    }
  }
  // plus random sequences, repeats included
  std::mt19937 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = testutil::random_seq(rng, 5, 3 + trial % 5);
    auto fast = enumerate_prod(s);
    REQUIRE(fast.has_value());
    CHECK(fast->members == testutil::naive_prod(s));
  }
}

TEST_CASE("general permutation sequences enumerate the same way") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Permutation> terms;
    for (int i = 0; i < 5; ++i) terms.push_back(testutil::random_perm(rng, 4));
    terms.push_back(terms.back());  // force a repeat
    auto fast = enumerate_prod(terms, 4);
    REQUIRE(fast.has_value());
    CHECK(fast->members == testutil::naive_prod_perms(terms, 4));
  }
}

TEST_CASE("every member has the parity of the length") {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 25; ++trial) {
    auto s = testutil::random_seq(rng, 5, 3 + trial % 4);
    auto prod = enumerate_prod(s);
    REQUIRE(prod.has_value());
    CHECK(prod->even == (s.size() % 2 == 0));
    for (const auto& f : prod->members) CHECK(f.is_even() == prod->even);
  }
}

TEST_CASE("product sets are closed under inverse") {
  std::mt19937 rng(109);
  for (int trial = 0; trial < 25; ++trial) {
    auto s = testutil::random_seq(rng, 5, 4 + trial % 4);
    auto prod = enumerate_prod(s);
    REQUIRE(prod.has_value());
    for (const auto& f : prod->members)
      CHECK(std::binary_search(prod->members.begin(), prod->members.end(),
                               f.inverse()));
  }
}

TEST_CASE("member count never exceeds the arrangement count") {
  std::mt19937 rng(113);
  for (int trial = 0; trial < 25; ++trial) {
    auto s = testutil::random_seq(rng, 6, 3 + trial % 5);
    auto prod = enumerate_prod(s);
    REQUIRE(prod.has_value());
    CHECK(boost::multiprecision::cpp_int(prod->members.size()) <=
          arrangements_count(s));
  }
}

TEST_CASE("budget refusal is explicit") {
  Budget tiny;
  tiny.max_terms = 3;
  tiny.max_stored = 10;
  auto prod = enumerate_prod(complete(4).canonical_sequence(), tiny);
  CHECK_FALSE(prod.has_value());
}

TEST_CASE("cyclic products appear exactly for trees") {
  // over every connected simple graph class: products are all full
  // cycles iff the graph is a tree
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : connected_simple_graph_classes(n)) {
      auto prod = enumerate_prod(g.canonical_sequence());
      REQUIRE(prod.has_value());
      bool all_cyclic = true;
      for (const auto& f : prod->members)
        if (f.cycle_type().exponent(n) != 1) all_cyclic = false;
      CHECK(all_cyclic == g.is_multitree());
    }
  }
}

TEST_CASE("find_rearrangement returns a verified witness") {
  auto rect = named_sequence("rect");
  auto target = Permutation::parse_cycles("(1 2)", 4);
  auto outcome = find_rearrangement(rect, target);
  REQUIRE(outcome.status == FindStatus::found);
  REQUIRE(outcome.witness.has_value());
  CHECK(outcome.witness->is_rearrangement_of(rect));
  CHECK(outcome.witness->product() == target);
}

TEST_CASE("find_rearrangement reports definitive absence") {
  // the identity is not a product of the two path arrangements
  auto naive = testutil::naive_prod(tau(3));
  CHECK_FALSE(std::binary_search(naive.begin(), naive.end(), Permutation::identity(3)));
  auto outcome = find_rearrangement(tau(3), Permutation::identity(3));
  CHECK(outcome.status == FindStatus::absent);
}

TEST_CASE("find_rearrangement on the empty sequence") {
  TranspSequence empty(3, {});
  auto outcome = find_rearrangement(empty, Permutation::identity(3));
  REQUIRE(outcome.status == FindStatus::found);
  CHECK(outcome.witness->terms.empty());
}

TEST_CASE("find_rearrangement agrees with the enumerated set") {
  std::mt19937 rng(127);
  for (int trial = 0; trial < 15; ++trial) {
    auto s = testutil::random_seq(rng, 4, 5);
    auto prod = enumerate_prod(s);
    REQUIRE(prod.has_value());
    for (int d = 2; d >= 0; --d) {
      auto f = testutil::random_perm(rng, 4);
      bool member = std::binary_search(prod->members.begin(), prod->members.end(), f);
      auto outcome = find_rearrangement(s, f);
      if (member) {
        REQUIRE(outcome.status == FindStatus::found);
        CHECK(outcome.witness->product() == f);
        CHECK(outcome.witness->is_rearrangement_of(s));
      } else {
        CHECK(outcome.status == FindStatus::absent);
      }
    }
  }
}

TEST_CASE("path traces follow the earliest-unused-term rule") {
  auto decomp = trace_paths(tau(3));
  CHECK(decomp.walks[0] == std::vector<int>{0, 1, 2});
  CHECK(decomp.walks[1] == std::vector<int>{1, 0});
  CHECK(decomp.walks[2] == std::vector<int>{2, 1});

  auto single = trace_paths(seq_of(2, {{0, 1}}));
  CHECK(single.walks[0] == std::vector<int>{0, 1});
  CHECK(single.walks[1] == std::vector<int>{1, 0});

  Multigraph missing(3);
  missing.add_edge(0, 1);
  CHECK_THROWS_AS(trace_paths(missing.canonical_sequence()), std::domain_error);
}

TEST_CASE("path traces partition the doubled arcs") {
  std::mt19937 rng(131);
  for (int trial = 0; trial < 40; ++trial) {
    auto s = testutil::random_seq(rng, 4, 5 + trial % 4);
    if (s.support_union().size() != 4) continue;
    auto decomp = trace_paths(s);
    // directed arc = (term index, direction); each must appear once
    std::map<std::pair<int, int>, int> used;
    for (int x = 0; x < s.degree; ++x) {
      int at = x;
      for (std::size_t step = 0; step < decomp.arcs[x].size(); ++step) {
        const int term = decomp.arcs[x][step];
        const int from = at;
        at = s.terms[term].apply(at);
        ++used[{term, s.terms[term].a == from ? 0 : 1}];
        CHECK(at == decomp.walks[x][step + 1]);
      }
    }
    CHECK(used.size() == 2 * s.terms.size());
    for (const auto& [arc, count] : used) CHECK(count == 1);
  }
}

TEST_CASE("arrangement counts") {
  CHECK(arrangements_count(tau(6)) == 120);  // five distinct terms
  CHECK(arrangements_count(seq_of(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}})) == 6);
  CHECK(arrangements_count(TranspSequence(2, {})) == 1);
  // 30 equal terms: |Seq| is 1 even though 30! overflows machine words
  TranspSequence rep(2, std::vector<Transposition>(30, Transposition(0, 1)));
  CHECK(arrangements_count(rep) == 1);
}

TEST_CASE("per-vertex subsequences decide product equality on trees") {
  CHECK(es_equivalent(tau(3), tau(3)));
  CHECK_FALSE(es_equivalent(tau(3), tau(3).reversed()));
  auto u = seq_of(4, {{0, 1}, {2, 3}, {1, 2}});
  auto s = seq_of(4, {{2, 3}, {0, 1}, {1, 2}});
  CHECK(es_equivalent(u, s));
  CHECK(u.product() == s.product());

  CHECK_THROWS_AS(es_equivalent(sigma(3), sigma(3)), std::domain_error);
  auto doubled = seq_of(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK_THROWS_AS(es_equivalent(doubled, doubled), std::domain_error);
}

TEST_CASE("tree products agree exactly when per-vertex subsequences agree") {
  // every tree with at most 6 edges, every rearrangement
  for (int n = 3; n <= 7; ++n) {
    for (const auto& g : connected_simple_graph_classes(n)) {
      if (!g.is_multitree()) continue;
      auto u = g.canonical_sequence();
      if (u.size() > 6) continue;
      auto terms = u.terms;
      std::sort(terms.begin(), terms.end());
      do {
        TranspSequence r(n, terms);
        CHECK(es_equivalent(u, r) == (r.product() == u.product()));
      } while (std::next_permutation(terms.begin(), terms.end()));
    }
  }
}
