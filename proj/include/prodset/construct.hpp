#pragma once

#include <string>
#include <vector>

#include "prodset/multigraph.hpp"
#include "prodset/perm.hpp"

// Generators for the named sequence and graph families used throughout
// the library and its catalogs.

namespace prodset {

// <0,1,...,n-1>
std::vector<int> nu(int n);

// <(0 1),(1 2),...,(n-2 n-1)>: a simple path. n >= 2.
TranspSequence tau(int n);
// tau(n) followed by (n-1 0): a simple circuit. n >= 3.
TranspSequence sigma(int n);

// Axle (0 1) plus spokes (0 i),(1 i) for i in {2,...,n+1}. n >= 0.
Multigraph bike(int n);
// Hub 0 joined to the rim cycle 1..n. n >= 3.
Multigraph wheel(int n);
// Complete graph K_n. n >= 1.
Multigraph complete(int n);

// The sequence r with product (0 1)(x1 x2 ... x2t) built from the
// alternating spoke pattern; x must be injective, of even length >= 2,
// with every value >= 2.
TranspSequence bike_product_sequence(const std::vector<int>& x);

// A rearrangement f of sigma(n) whose product is the cycle through h in
// order times the reversed cycle through the complement of h; h must be
// a nonempty proper subsequence of nu(n), n >= 3.
TranspSequence circuit_realizer(const std::vector<int>& h, int n);

// Catalog of literal sequences: "rect", "a", "b", "c", "d", "e", "h4".
TranspSequence named_sequence(const std::string& name);
// Catalog of literal permutation sequences: "s34a", "s34b".
std::vector<Permutation> named_permutation_sequence(const std::string& name);

std::vector<std::string> named_sequence_catalog();
std::vector<std::string> named_permutation_catalog();

// Shape predicates for the products of path/circuit rearrangements.
//
// Path shape: a single n-cycle that visits 0, an increasing block, n-1,
// then a decreasing block covering the rest.
bool is_path_product_shape(const Permutation& f);
// Circuit shape: the points split into exactly two orbits, one traversed
// in increasing circular order and the other in decreasing order.
bool is_circuit_product_shape(const Permutation& f);

}  // namespace prodset
