#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prodset/enumeration.hpp"
#include "prodset/multigraph.hpp"
#include "prodset/perm.hpp"

// Decision procedures: permutational completeness and conjugacy
// invariance, each with a structural path (sound rules over the
// multigraph) and an oracle path (exhaustive enumeration). Structural
// and oracle verdicts are cross-validated by the test suites; a
// disagreement is a hard failure, never swallowed.

namespace prodset {

enum class Answer { yes, no, unknown };
enum class OracleVerdict { yes, no, refused };

std::string to_string(Answer a);
std::string to_string(OracleVerdict v);

struct StructuralVerdict {
  Answer answer = Answer::unknown;
  // Stable rule identifier; empty when answer == unknown.
  std::string rule;
  std::string detail;
  std::vector<int> witness_vertices;
};

// Yes iff |Prod(s)| = n!/2 (the parity of |s| forces which coset).
OracleVerdict perm_complete_bruteforce(const TranspSequence& s, const Budget& budget = {});

// First matching rule wins, in this fixed order:
//   N2 (yes, n <= 2), DISCONNECTED (no), DEG1 (no), DEG2 (no, simple
//   graphs), COUNT (no), CENTRAL (yes, simple graphs), SUPSEQ-BIKE (yes),
//   NAMED (yes), WNPC1 (no, simple), NPC2 (no, simple), else Unknown.
// The cut-set scan enumerates all vertex bipartitions (n <= 20 guard).
StructuralVerdict perm_complete_structural(const Multigraph& g);

// Yes iff every member of Prod(s) shares the cycle type of the product.
// Accepts general permutational sequences.
OracleVerdict ci_bruteforce(std::span<const Permutation> s, int degree,
                            const Budget& budget = {});
OracleVerdict ci_bruteforce(const TranspSequence& s, const Budget& budget = {});

// Complete decision, per connected component of the multigraph:
//   |V| <= 2: yes. |V| == 3: yes iff odd length or a multitree with a
//   simple multiedge. |V| >= 4: yes iff a multitree in which no vertex
//   lies on more than one nonsimple multiedge and every even-multiplicity
//   multiedge is a multitwig whose hub has exactly two neighbors;
//   any circuit is a no.
StructuralVerdict ci_structural(const TranspSequence& u);

// Per edge, multiplicity m becomes m when m <= 3, else 2 + (m mod 2);
// the earliest occurrences survive, order preserved.
TranspSequence reduce_sequence(const TranspSequence& u);

// |Prod(s)| == 1; nullopt when the oracle refused.
std::optional<bool> is_constant_product(std::span<const Permutation> s, int degree,
                                        const Budget& budget = {});

// Guarantee-only membership test for the one-new-vertex extension: given
// a perm-complete simple graph g on {0,...,n-1}, the supergraph joins a
// new vertex x == n to every vertex in w. For f on n+1 points with the
// parity of the extended edge count, f is guaranteed to be a product
// when one of these holds:
//   (1) x.f lies in w;
//   (2) f maps some w0 in w to a different w1 in w;
//   (3) f fixes x and the subgraph induced by w has a perfect matching.
// A false result means "no guarantee", never "not a product".
bool complicated_guarantee(const Multigraph& g, const std::vector<int>& w, int x,
                           const Permutation& f);

// Sum of (length - 1) over nontrivial cycles; 0 for the identity.
int minimal_factorization_length(const Permutation& f);

struct PhiOutcome {
  bool refused = false;
  std::uint64_t count = 0;
};

// Exact count of ordered minimal-length transpositional factorizations.
// Refuses when |supp(f)| exceeds budget.max_phi_support.
PhiOutcome count_minimal_factorizations(const Permutation& f, const Budget& budget = {});

struct CosetOutcome {
  bool refused = false;
  std::optional<std::uint64_t> order;  // |Prod(s)| when it is a coset
};

// Reports |Prod(s)| when Prod(s) is a right coset of a subgroup of
// Sym(n), i.e. Prod(s).g^- is closed under composition and inverse for
// a member g; absent otherwise.
CosetOutcome coset_check(const TranspSequence& s, const Budget& budget = {});

struct OracleSummary {
  OracleVerdict verdict = OracleVerdict::refused;
  std::uint64_t prod_size = 0;
  bool even = true;
  // Cycle-type spectrum of the product set: (type, member count).
  std::vector<std::pair<CycleType, std::uint64_t>> spectrum;
};

struct ClassificationReport {
  std::string input;
  std::string property;  // "perm-complete" or "conjugacy-invariant"
  StructuralVerdict structural;
  bool structural_ran = false;
  std::optional<OracleSummary> oracle;
  // set iff both paths ran and both were decisive
  std::optional<bool> agreement;

  std::string to_json() const;
  std::string to_text() const;
};

OracleSummary summarize_oracle(const ProdSet& prod, OracleVerdict verdict);

// run_structural / run_oracle select the paths; agreement is recorded
// whenever both ran and both decided.
ClassificationReport classify_perm_complete(const TranspSequence& s,
                                            const std::string& input_desc,
                                            bool run_structural, bool run_oracle,
                                            const Budget& budget = {});
ClassificationReport classify_ci(const TranspSequence& s, const std::string& input_desc,
                                 bool run_structural, bool run_oracle,
                                 const Budget& budget = {});
// CI report for general permutational sequences (oracle path only).
ClassificationReport classify_ci_perms(std::span<const Permutation> s, int degree,
                                       const std::string& input_desc,
                                       const Budget& budget = {});

}  // namespace prodset
