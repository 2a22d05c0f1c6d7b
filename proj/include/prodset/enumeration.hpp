#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "prodset/perm.hpp"

// The brute-force oracle: exact computation of Prod(s), the set of
// compositional products over all rearrangements of a sequence.
//
// Strategy: dynamic programming over the lattice of sub-multisets,
//   R(empty) = {identity},  R(S) = union over e in S of R(S \ {e}) . e,
// with states keyed by per-letter remaining counts so repeated terms and
// shared prefixes are never re-explored. Exceeding a resource budget
// yields a first-class "refused" outcome, never a partial set.

namespace prodset {

struct Budget {
  // enumerate_prod proceeds when size() <= max_terms, or when the coarse
  // state-count estimate stays below max_stored.
  std::size_t max_terms = 13;
  // Cap on permutations held across all memo entries at any moment.
  std::size_t max_stored = 200'000'000;
  // Soft wall-clock limit; 0 disables it.
  std::chrono::milliseconds soft_time{120'000};
  // Support cap for count_minimal_factorizations.
  int max_phi_support = 7;
};

struct ProdSet {
  int degree = 1;
  bool even = true;  // parity class shared by every member
  std::vector<Permutation> members;  // sorted by image array, deduplicated

  std::string parity_name() const { return even ? "even" : "odd"; }
  std::string to_json() const;
};

// nullopt means the oracle refused (budget exceeded).
std::optional<ProdSet> enumerate_prod(const TranspSequence& s, const Budget& budget = {});
std::optional<ProdSet> enumerate_prod(std::span<const Permutation> s, int degree,
                                      const Budget& budget = {});

enum class FindStatus { found, absent, refused };

struct FindOutcome {
  FindStatus status = FindStatus::absent;
  std::optional<TranspSequence> witness;  // set iff status == found
};

// Searches for a rearrangement r of s with product f. DFS over
// remaining-count states with a memoized failure set keyed by
// (remaining counts, partial product).
FindOutcome find_rearrangement(const TranspSequence& s, const Permutation& f,
                               const Budget& budget = {});

// The directed walk from each point built by the earliest-unused-term
// rule: from x, repeatedly traverse the first remaining term whose
// support contains the current endpoint. The per-point arc lists
// partition the 2|u| arcs of the doubled digraph.
struct PathDecomposition {
  int degree = 1;
  // walks[x] = {x, z1, ..., y}
  std::vector<std::vector<int>> walks;
  // arcs[x] = indices into u.terms of the traversed terms, in walk order
  std::vector<std::vector<int>> arcs;
};

// Requires every point < degree to occur in some term.
PathDecomposition trace_paths(const TranspSequence& u);

// |Seq(s)| = |s|! / prod(multiplicity!): number of distinct rearrangements.
boost::multiprecision::cpp_int arrangements_count(const TranspSequence& s);

// Eden-Schutzenberger test: for u with a simple tree multigraph and s a
// rearrangement of u, the products agree iff for every vertex v the
// subsequence of terms containing v is identical in u and s.
bool es_equivalent(const TranspSequence& u, const TranspSequence& s);

}  // namespace prodset
