#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Core permutation algebra on the point set {0,...,n-1}.
//
// Composition is LEFT-TO-RIGHT everywhere in this library:
//     x (f.then(g)) == (x f) g
// Most permutation libraries compose right-to-left; every formula here
// assumes the left-to-right reading, so ported code must be checked.

namespace prodset {

// Thrown by the text parsers; line/column are 1-based.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : std::runtime_error(what), line(line_), column(column_) {}
};

class CycleType;

class Permutation {
 public:
  Permutation() = default;  // degree 0
  // images[x] is the image of x; must be a bijection of {0,...,n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // Builds the cyclic permutation through `points` (in order) on `degree`.
  static Permutation from_cycle(std::span<const int> points, int degree);
  // Parses disjoint cycle notation, e.g. "(0 1)(2 3 4)"; "()" is the
  // identity. The degree is always explicit, never inferred.
  static Permutation parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int x) const;
  const std::vector<int>& images() const { return images_; }

  // this first, then g (left-to-right composition).
  Permutation then(const Permutation& g) const;
  Permutation inverse() const;
  // g.inverse() * f * g in left-to-right order: conjugate of f by g.
  Permutation conjugated_by(const Permutation& g) const;

  bool is_identity() const;
  bool is_even() const;
  std::vector<int> support() const;

  // Nontrivial cycles, each starting at its least element, ordered by
  // least element.
  std::vector<std::vector<int>> cycles() const;
  CycleType cycle_type() const;
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Exponent vector of a cycle-length multiset: exponent(j) = number of
// j-cycles, fixed points included as 1-cycles.
class CycleType {
 public:
  CycleType() = default;
  CycleType(int degree, std::vector<int> exponents);
  static CycleType of(const Permutation& f);

  int degree() const { return degree_; }
  int exponent(int length) const;  // length in [1, degree]
  const std::vector<int>& exponents() const { return exponents_; }

  bool is_even() const;
  // "1^2 2^3 4^1": ascending, zero exponents omitted.
  std::string to_string() const;

  bool operator==(const CycleType&) const = default;
  auto operator<=>(const CycleType&) const = default;

 private:
  int degree_ = 0;
  std::vector<int> exponents_;
};

// Unordered pair of distinct points; stored with a < b.
struct Transposition {
  int a = 0;
  int b = 1;

  Transposition() = default;
  Transposition(int x, int y);

  int apply(int x) const { return x == a ? b : x == b ? a : x; }
  Permutation to_permutation(int degree) const;
  std::string to_string() const;

  bool operator==(const Transposition&) const = default;
  auto operator<=>(const Transposition&) const = default;
};

// Ordered sequence of transpositions acting on {0,...,degree-1};
// repeated terms allowed.
struct TranspSequence {
  int degree = 0;
  std::vector<Transposition> terms;

  TranspSequence() = default;
  TranspSequence(int degree, std::vector<Transposition> terms);

  int size() const { return static_cast<int>(terms.size()); }
  Permutation product() const;
  std::vector<int> support_union() const;
  std::map<Transposition, int> multiplicities() const;
  TranspSequence reversed() const;
  bool is_rearrangement_of(const TranspSequence& other) const;

  bool operator==(const TranspSequence&) const = default;
};

// Empty sequence yields the identity on `degree`.
Permutation compose_sequence(std::span<const Transposition> terms, int degree);
Permutation compose_sequence(std::span<const Permutation> terms, int degree);

// Cycle-type equality; degrees must match.
bool is_conjugate(const Permutation& f, const Permutation& g);

// Text format: one transposition per line "a b"; '#' starts a comment;
// order is significant. Degree is max point + 1 unless given.
TranspSequence parse_sequence_text(std::istream& in,
                                   std::optional<int> degree = std::nullopt);
std::string sequence_to_text(const TranspSequence& s);

}  // namespace prodset
