#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "prodset/perm.hpp"

// The transpositional multigraph of a sequence: an undirected multigraph
// on the vertex set {0,...,n-1} whose multiedge {a,b} carries the number
// of occurrences of (a b) as a term.

namespace prodset {

struct MultigraphComponent;

// One profile per multiedge that is a multitwig: an edge one of whose
// endpoints (the leaf) has exactly one neighbor.
struct TwigProfile {
  Transposition edge{0, 1};
  int multiplicity = 1;
  int leaf = 0;
  int hub = 1;
  int hub_degree = 1;  // distinct neighbors of the hub

  bool operator==(const TwigProfile&) const = default;
};

class Multigraph {
 public:
  explicit Multigraph(int n);

  static Multigraph from_sequence(const TranspSequence& u);

  int vertex_count() const { return n_; }
  void add_edge(int a, int b, int multiplicity = 1);  // sums with existing
  int multiplicity(int a, int b) const;               // 0 if absent
  const std::map<Transposition, int>& edges() const { return mult_; }

  int distinct_edge_count() const { return static_cast<int>(mult_.size()); }
  int total_multiplicity() const;
  bool is_simple() const;

  std::vector<int> neighbors(int v) const;
  int distinct_degree(int v) const;

  // Lexicographically sorted sequence with each edge repeated by its
  // multiplicity; from_sequence(canonical_sequence()) reproduces *this.
  TranspSequence canonical_sequence() const;

  // Connected components (isolated vertices become singleton components),
  // ordered by least vertex. Each component's graph is relabeled densely
  // following the sorted vertex list.
  std::vector<MultigraphComponent> components() const;
  bool is_connected() const;

  // Connected and the underlying simple graph is a tree.
  bool is_multitree() const;

  std::vector<TwigProfile> twig_profiles() const;

  // All edges (with multiplicity) having exactly one endpoint in v0.
  // v0 must be a proper nonempty subset of the vertices, no duplicates.
  std::vector<std::pair<Transposition, int>> cross_edges(
      const std::vector<int>& v0) const;

  Multigraph induced(const std::vector<int>& vertices, bool relabel) const;

  // Isomorphism-canonical flattened multiplicity matrix, minimized over
  // all vertex relabelings. Exponential; guarded to n <= 8.
  std::vector<int> canonical_key() const;
  Multigraph canonical_form() const;
  std::string canonical_id() const;

  // Text format: first line "n <N>"; then "a b m" lines (m optional,
  // default 1); '#' comments; duplicate "a b" lines sum multiplicities.
  static Multigraph parse_text(std::istream& in);
  std::string to_text() const;

  // JSON mirror {"n": ..., "edges": [[a,b,m],...]}.
  static Multigraph from_json_text(const std::string& text);
  std::string to_json() const;

  bool operator==(const Multigraph&) const = default;

 private:
  int n_ = 1;
  std::map<Transposition, int> mult_;
};

// A connected component: sorted original vertex labels plus the induced
// sub-multigraph relabeled densely (vertex i stands for vertices[i]).
struct MultigraphComponent {
  std::vector<int> vertices;
  Multigraph graph{1};

  int size() const { return static_cast<int>(vertices.size()); }
};

}  // namespace prodset
