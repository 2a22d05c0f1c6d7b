#pragma once

#include <algorithm>
#include <vector>

#include "prodset/perm.hpp"

// Test-only independent oracle: iterate over all distinct rearrangements
// with next_permutation on the sorted term multiset and compose each one.
// Deliberately kept free of the subset-DP implementation it checks.

namespace testutil {

inline std::vector<prodset::Permutation> naive_prod(const prodset::TranspSequence& s) {
  auto terms = s.terms;
  std::sort(terms.begin(), terms.end());
  std::vector<prodset::Permutation> out;
  do {
    out.push_back(prodset::compose_sequence(terms, s.degree));
  } while (std::next_permutation(terms.begin(), terms.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<prodset::Permutation> naive_prod_perms(
    std::vector<prodset::Permutation> terms, int degree) {
  std::sort(terms.begin(), terms.end());
  std::vector<prodset::Permutation> out;
  do {
    out.push_back(prodset::compose_sequence(terms, degree));
  } while (std::next_permutation(terms.begin(), terms.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace testutil
