#include <random>
#include <sstream>

#include "doctest.h"
#include "prodset/perm.hpp"
#include "test_util.hpp"

using namespace prodset;

namespace {

TranspSequence seq_of(int degree, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Transposition> terms;
  for (auto [a, b] : pairs) terms.emplace_back(a, b);
  return TranspSequence(degree, std::move(terms));
}

}  // namespace

TEST_CASE("composition is left to right") {
  auto s = seq_of(3, {{0, 1}, {1, 2}});
  CHECK(s.product() == Permutation::parse_cycles("(0 2 1)", 3));
  // the reversed order gives the other 3-cycle
  CHECK(s.reversed().product() == Permutation::parse_cycles("(0 1 2)", 3));
}

TEST_CASE("empty sequence composes to the identity") {
  CHECK(TranspSequence(4, {}).product() == Permutation::identity(4));
}

TEST_CASE("seven-term product collapses to one transposition") {
  auto s = seq_of(5, {{0, 2}, {3, 4}, {0, 1}, {2, 3}, {0, 4}, {1, 2}, {0, 3}});
  CHECK(s.product() == Permutation::parse_cycles("(1 4)", 5));
}

TEST_CASE("inverse") {
  CHECK(Permutation::parse_cycles("(0 1 2)", 3).inverse() ==
        Permutation::parse_cycles("(0 2 1)", 3));
  CHECK(Permutation::identity(5).inverse() == Permutation::identity(5));
  auto invol = Permutation::parse_cycles("(0 1)(2 3)", 4);
  CHECK(invol.inverse() == invol);
  CHECK(invol.then(invol) == Permutation::identity(4));
}

TEST_CASE("cycle type") {
  auto f = Permutation::parse_cycles("(0 1)(2 3)(4 5)(6 7 8 9)", 12);
  CHECK(f.cycle_type().to_string() == "1^2 2^3 4^1");
  CHECK(Permutation::identity(4).cycle_type().to_string() == "1^4");
  CHECK(Permutation::parse_cycles("(0 2 1)", 3).cycle_type().to_string() == "3^1");
}

TEST_CASE("cycle type validates its exponents") {
  CHECK_THROWS_AS(CycleType(3, {1, 2, 0}), std::domain_error);
  CHECK_NOTHROW(CycleType(3, {1, 1, 0}));
}

TEST_CASE("conjugacy is cycle type equality") {
  CHECK(is_conjugate(Permutation::parse_cycles("(0 1 2)", 3),
                     Permutation::parse_cycles("(0 2 1)", 3)));
  CHECK_FALSE(is_conjugate(Permutation::identity(3),
                           Permutation::parse_cycles("(0 1 2)", 3)));
  CHECK(is_conjugate(Permutation::parse_cycles("(0 1)(2 3)", 4),
                     Permutation::parse_cycles("(0 2)(1 3)", 4)));
  CHECK_THROWS_AS(
      is_conjugate(Permutation::identity(3), Permutation::identity(4)),
      std::domain_error);
}

TEST_CASE("support") {
  CHECK(Permutation::parse_cycles("(1 4)", 5).support() == std::vector<int>{1, 4});
  CHECK(Permutation::identity(3).support().empty());
  CHECK(Permutation::parse_cycles("(0 1)(2 3 4)", 5).support() ==
        std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("cycle notation parsing and printing") {
  auto f = Permutation::parse_cycles("(0 1)(2 3 4)", 7);
  CHECK(f.cycle_string() == "(0 1)(2 3 4)");
  CHECK(Permutation::parse_cycles("()", 4) == Permutation::identity(4));
  CHECK(Permutation::identity(4).cycle_string() == "()");
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 9)", 4), ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 1)(1 2)", 4), ParseError);
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 1", 4), ParseError);
}

TEST_CASE("permutation constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::domain_error);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::domain_error);
}

TEST_CASE("transposition canonical form") {
  Transposition t(4, 1);
  CHECK(t.a == 1);
  CHECK(t.b == 4);
  CHECK(t == Transposition(1, 4));
  CHECK_THROWS_AS(Transposition(2, 2), std::domain_error);
}

TEST_CASE("sequence text round trip") {
  auto s = seq_of(5, {{0, 2}, {1, 2}, {0, 2}});
  std::istringstream in(sequence_to_text(s));
  auto back = parse_sequence_text(in, 5);
  CHECK(back == s);
  std::istringstream bad("0 1\n2 2\n");
  CHECK_THROWS_AS(parse_sequence_text(bad), ParseError);
}

TEST_CASE("composition is associative over splits") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = testutil::random_seq(rng, 6, 8);
    for (int cut = 0; cut <= s.size(); ++cut) {
      std::span<const Transposition> all(s.terms);
      auto left = compose_sequence(all.subspan(0, cut), 6);
      auto right = compose_sequence(all.subspan(cut), 6);
      CHECK(left.then(right) == s.product());
    }
  }
}

TEST_CASE("cycle type is conjugation invariant") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      auto f = testutil::random_perm(rng, n);
      auto g = testutil::random_perm(rng, n);
      CHECK(f.conjugated_by(g).cycle_type() == f.cycle_type());
    }
  }
}

TEST_CASE("cyclic rotations of a sequence have conjugate products") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Permutation> b;
    for (int i = 0; i < 6; ++i) b.push_back(testutil::random_perm(rng, 5));
    auto whole = compose_sequence(b, 5);
    for (std::size_t i = 1; i < b.size(); ++i) {
      std::vector<Permutation> rotated(b.begin() + i, b.end());
      rotated.insert(rotated.end(), b.begin(), b.begin() + i);
      CHECK(is_conjugate(compose_sequence(rotated, 5), whole));
    }
  }
}

TEST_CASE("reversal inverts and stays conjugate for transpositional sequences") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto t = testutil::random_seq(rng, 6, 7);
    auto forward = t.product();
    auto backward = t.reversed().product();
    CHECK(backward == forward.inverse());
    CHECK(is_conjugate(backward, forward));
  }
}

TEST_CASE("product parity equals length parity") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int len = trial % 9;
    auto s = testutil::random_seq(rng, 5, len);
    CHECK(s.product().is_even() == (len % 2 == 0));
  }
}
