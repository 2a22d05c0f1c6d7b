#include "prodset/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "prodset/construct.hpp"
#include "prodset/detail/packed.hpp"

namespace prodset {

namespace {

using boost::multiprecision::cpp_int;
using Clock = std::chrono::steady_clock;

cpp_int factorial(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t half_order(int n) {
  // |Alt(n)| = |Blt(n)| = n!/2 for n >= 2; both cosets collapse to {id}
  // at n <= 1.
  if (n <= 1) return 1;
  cpp_int h = factorial(n) / 2;
  return h.convert_to<std::uint64_t>();
}

struct Deadline {
  Clock::time_point end;
  bool enabled;
  explicit Deadline(const Budget& b)
      : end(Clock::now() + b.soft_time), enabled(b.soft_time.count() > 0) {}
  bool over() const { return enabled && Clock::now() > end; }
};

}  // namespace

std::string to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    default: return "unknown";
  }
}

std::string to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::yes: return "yes";
    case OracleVerdict::no: return "no";
    default: return "refused";
  }
}

OracleVerdict perm_complete_bruteforce(const TranspSequence& s, const Budget& budget) {
  auto prod = enumerate_prod(s, budget);
  if (!prod) return OracleVerdict::refused;
  return prod->members.size() == half_order(s.degree) ? OracleVerdict::yes
                                                      : OracleVerdict::no;
}

namespace {

StructuralVerdict verdict(Answer a, std::string rule, std::string detail,
                          std::vector<int> witness = {}) {
  return StructuralVerdict{a, std::move(rule), std::move(detail), std::move(witness)};
}

// Forest / connectivity checks over a vertex bitmask, on the edge list of
// a simple graph.
struct SubsetChecks {
  int n;
  const std::vector<Transposition>& edges;

  int count_vertices(std::uint32_t mask) const {
    int c = 0;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) ++c;
    return c;
  }

  int internal_edges(std::uint32_t mask) const {
    int c = 0;
    for (const auto& e : edges)
      if ((mask & (1u << e.a)) && (mask & (1u << e.b))) ++c;
    return c;
  }

  int cross_count(std::uint32_t mask) const {
    int c = 0;
    for (const auto& e : edges)
      if (((mask >> e.a) & 1) != ((mask >> e.b) & 1)) ++c;
    return c;
  }

  int component_count(std::uint32_t mask) const {
    std::uint32_t seen = 0;
    int comps = 0;
    for (int start = 0; start < n; ++start) {
      if (!(mask & (1u << start)) || (seen & (1u << start))) continue;
      ++comps;
      std::vector<int> stack{start};
      seen |= 1u << start;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& e : edges) {
          int w = -1;
          if (e.a == v) w = e.b;
          else if (e.b == v) w = e.a;
          if (w < 0 || !(mask & (1u << w)) || (seen & (1u << w))) continue;
          seen |= 1u << w;
          stack.push_back(w);
        }
      }
    }
    return comps;
  }

  bool is_forest(std::uint32_t mask) const {
    return internal_edges(mask) == count_vertices(mask) - component_count(mask);
  }

  bool is_connected(std::uint32_t mask) const { return component_count(mask) == 1; }
};

std::vector<int> mask_vertices(std::uint32_t mask, int n) {
  std::vector<int> vs;
  for (int v = 0; v < n; ++v)
    if (mask & (1u << v)) vs.push_back(v);
  return vs;
}

const std::vector<std::pair<std::string, std::vector<int>>>& named_graph_keys() {
  static const auto keys = [] {
    std::vector<std::pair<std::string, std::vector<int>>> out;
    for (const auto& name : named_sequence_catalog()) {
      if (name == "e" || name == "h4") continue;  // not perm-complete
      auto g = Multigraph::from_sequence(named_sequence(name));
      out.emplace_back(name, g.canonical_key());
    }
    return out;
  }();
  return keys;
}

}  // namespace

StructuralVerdict perm_complete_structural(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n <= 2)
    return verdict(Answer::yes, "N2", "every sequence on at most two points");
  if (!g.is_connected())
    return verdict(Answer::no, "DISCONNECTED", "support union is not connected");

  // DEG1: a vertex with one neighbor whose sole multiedge is simple;
  // with higher multiplicity the rule abstains.
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() == 1 && g.multiplicity(v, nb[0]) == 1)
      return verdict(Answer::no, "DEG1", "vertex of degree 1 on a simple multiedge",
                     {v});
  }

  const bool simple = g.is_simple();

  // DEG2: adjacent vertices of degree 2 (simple graphs, n >= 4).
  if (simple && n >= 4) {
    for (const auto& [e, m] : g.edges()) {
      if (g.distinct_degree(e.a) == 2 && g.distinct_degree(e.b) == 2)
        return verdict(Answer::no, "DEG2", "adjacent vertices of degree 2",
                       {e.a, e.b});
    }
  }

  // COUNT: |Prod| <= |Seq| <= |E|! cannot reach n!/2.
  const int total = g.total_multiplicity();
  if (factorial(total) * 2 < factorial(n))
    return verdict(Answer::no, "COUNT",
                   "|E|! = " + std::to_string(total) + "! below n!/2");

  std::vector<int> centrals;
  for (int v = 0; v < n; ++v)
    if (g.distinct_degree(v) == n - 1) centrals.push_back(v);

  if (simple && centrals.size() >= 2)
    return verdict(Answer::yes, "CENTRAL", "two central vertices",
                   {centrals[0], centrals[1]});

  // Two central vertices in the underlying graph span a bike, so any
  // multigraph over it is a supersequence of a perm-complete one.
  if (centrals.size() >= 2)
    return verdict(Answer::yes, "SUPSEQ-BIKE", "spanning bike sub-multigraph",
                   {centrals[0], centrals[1]});

  // NAMED: the underlying support matches a known minimal perm-complete
  // example; extra multiplicity only adds supersequence terms.
  if (n <= 8) {
    Multigraph support(n);
    for (const auto& [e, m] : g.edges()) support.add_edge(e.a, e.b, 1);
    auto key = support.canonical_key();
    for (const auto& [name, named_key] : named_graph_keys())
      if (key == named_key)
        return verdict(Answer::yes, "NAMED", "support isomorphic to example " + name);
  }

  // Cut-set rules need the injectivity of the whole sequence, so they
  // apply to simple graphs only.
  if (simple && n <= 20) {
    std::vector<Transposition> edge_list;
    for (const auto& [e, m] : g.edges()) edge_list.push_back(e);
    SubsetChecks checks{n, edge_list};
    const std::uint32_t all = (n == 32 ? ~0u : (1u << n) - 1);

    for (std::uint32_t mask = 1; mask < all; ++mask) {
      const int v0 = checks.count_vertices(mask);
      const int v1 = n - v0;
      if (v1 < 2) continue;
      if (!checks.is_forest(mask)) continue;
      if (checks.cross_count(mask) <= v0)
        return verdict(Answer::no, "WNPC1",
                       "forest side with cut size at most its vertex count",
                       mask_vertices(mask, n));
    }
    for (std::uint32_t mask = 1; mask < all; ++mask) {
      if (!(mask & 1u)) continue;  // fix vertex 0's side; roles symmetric
      const int v0 = checks.count_vertices(mask);
      const int v1 = n - v0;
      if (v0 < 2 || v1 < 2) continue;
      const int c = checks.cross_count(mask);
      if (c >= std::min(v0, v1)) continue;
      if (!checks.is_connected(mask) || !checks.is_connected(all & ~mask)) continue;
      return verdict(Answer::no, "NPC2",
                     "cut smaller than both connected sides (|C|=" +
                         std::to_string(c) + ")",
                     mask_vertices(mask, n));
    }
  }

  return verdict(Answer::unknown, "", "no rule applies");
}

OracleVerdict ci_bruteforce(std::span<const Permutation> s, int degree,
                            const Budget& budget) {
  auto prod = enumerate_prod(s, degree, budget);
  if (!prod) return OracleVerdict::refused;
  if (prod->members.empty()) return OracleVerdict::yes;
  const CycleType t0 = prod->members.front().cycle_type();
  for (const auto& f : prod->members)
    if (f.cycle_type() != t0) return OracleVerdict::no;
  return OracleVerdict::yes;
}

OracleVerdict ci_bruteforce(const TranspSequence& s, const Budget& budget) {
  std::vector<Permutation> perms;
  perms.reserve(s.terms.size());
  for (const auto& t : s.terms) perms.push_back(t.to_permutation(s.degree));
  return ci_bruteforce(perms, s.degree, budget);
}

StructuralVerdict ci_structural(const TranspSequence& u) {
  Multigraph g = Multigraph::from_sequence(u);
  auto comps = g.components();
  std::vector<StructuralVerdict> decided;
  for (const auto& comp : comps) {
    const auto& sub = comp.graph;
    const int size = static_cast<int>(comp.vertices.size());
    auto original = [&](const std::vector<int>& local) {
      std::vector<int> out;
      for (int v : local) out.push_back(comp.vertices[v]);
      return out;
    };
    if (size <= 2) {
      decided.push_back(verdict(Answer::yes, "CI-SMALL",
                                "component on at most two points", comp.vertices));
      continue;
    }
    if (size == 3) {
      const int len = sub.total_multiplicity();
      if (len % 2 == 1) {
        decided.push_back(
            verdict(Answer::yes, "CI-N3", "odd length component", comp.vertices));
        continue;
      }
      bool has_simple = false;
      for (const auto& [e, m] : sub.edges())
        if (m == 1) has_simple = true;
      if (sub.is_multitree() && has_simple) {
        decided.push_back(verdict(Answer::yes, "CI-N3",
                                  "multitree with a simple multiedge", comp.vertices));
      } else {
        decided.push_back(verdict(Answer::no, "CI-N3",
                                  sub.is_multitree()
                                      ? "even length multitree with no simple multiedge"
                                      : "even length multitriangle",
                                  comp.vertices));
      }
      continue;
    }
    // size >= 4
    if (!sub.is_multitree()) {
      decided.push_back(
          verdict(Answer::no, "CI-CIRCUIT", "component contains a circuit",
                  comp.vertices));
      continue;
    }
    StructuralVerdict bad{};
    bool failed = false;
    for (int v = 0; v < size && !failed; ++v) {
      int nonsimple = 0;
      for (const auto& [e, m] : sub.edges())
        if (m >= 2 && (e.a == v || e.b == v)) ++nonsimple;
      if (nonsimple > 1) {
        bad = verdict(Answer::no, "CI-TREE",
                      "vertex on more than one nonsimple multiedge",
                      original(std::vector<int>{v}));
        failed = true;
      }
    }
    if (!failed) {
      for (const auto& [e, m] : sub.edges()) {
        if (m % 2 != 0) continue;
        const int da = sub.distinct_degree(e.a);
        const int db = sub.distinct_degree(e.b);
        if (da != 1 && db != 1) {
          bad = verdict(Answer::no, "CI-TREE",
                        "even-multiplicity multiedge is not a multitwig",
                        original(std::vector<int>{e.a, e.b}));
          failed = true;
          break;
        }
        const int hub = da == 1 ? e.b : e.a;
        if (sub.distinct_degree(hub) != 2) {
          bad = verdict(Answer::no, "CI-TREE",
                        "even multitwig hub does not have exactly two neighbors",
                        original(std::vector<int>{hub}));
          failed = true;
          break;
        }
      }
    }
    if (failed)
      decided.push_back(bad);
    else
      decided.push_back(verdict(Answer::yes, "CI-TREE",
                                "multitree satisfying both twig conditions",
                                comp.vertices));
  }

  for (const auto& d : decided)
    if (d.answer == Answer::no) return d;
  if (decided.size() == 1) return decided.front();
  // all components pass
  StructuralVerdict all_yes = verdict(Answer::yes, "CI-COMPONENTS",
                                      "every component is conjugacy invariant");
  return all_yes;
}

TranspSequence reduce_sequence(const TranspSequence& u) {
  auto mult = u.multiplicities();
  std::map<Transposition, int> keep;
  for (const auto& [t, m] : mult) keep[t] = m <= 3 ? m : 2 + (m % 2);
  std::vector<Transposition> terms;
  for (const auto& t : u.terms) {
    if (keep[t] > 0) {
      terms.push_back(t);
      --keep[t];
    }
  }
  return TranspSequence(u.degree, std::move(terms));
}

std::optional<bool> is_constant_product(std::span<const Permutation> s, int degree,
                                        const Budget& budget) {
  auto prod = enumerate_prod(s, degree, budget);
  if (!prod) return std::nullopt;
  return prod->members.size() == 1;
}

namespace {

bool has_perfect_matching(const Multigraph& g, const std::vector<int>& w) {
  if (w.size() % 2 != 0) return false;
  if (w.empty()) return true;
  if (w.size() > 12) throw std::domain_error("perfect matching search limited to 12 points");
  // exhaustive: match the least unmatched point against each neighbor
  std::vector<int> pts = w;
  std::sort(pts.begin(), pts.end());
  std::function<bool(std::uint32_t)> rec = [&](std::uint32_t matched) -> bool {
    int first = -1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!(matched & (1u << i))) {
        first = static_cast<int>(i);
        break;
      }
    }
    if (first < 0) return true;
    for (std::size_t j = first + 1; j < pts.size(); ++j) {
      if (matched & (1u << j)) continue;
      if (g.multiplicity(pts[first], pts[j]) == 0) continue;
      if (rec(matched | (1u << first) | (1u << j))) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

bool complicated_guarantee(const Multigraph& g, const std::vector<int>& w, int x,
                           const Permutation& f) {
  const int n = g.vertex_count();
  if (x != n)
    throw std::domain_error("the new vertex must be the next fresh label n");
  if (f.degree() != n + 1) throw std::domain_error("f must act on n+1 points");
  std::set<int> wset(w.begin(), w.end());
  if (wset.empty() || wset.size() != w.size())
    throw std::domain_error("w must be a nonempty set of old vertices");
  for (int v : wset)
    if (v < 0 || v >= n) throw std::domain_error("w vertex out of range");
  const int extended_edges = g.total_multiplicity() + static_cast<int>(w.size());
  if (f.is_even() != (extended_edges % 2 == 0))
    throw std::domain_error("parity of f must match parity of the extended edge count");

  if (wset.count(f.apply(x))) return true;  // lands x inside w
  for (int w0 : wset) {
    const int img = f.apply(w0);
    if (img != w0 && wset.count(img)) return true;  // moves w into itself
  }
  if (f.apply(x) == x && has_perfect_matching(g, w)) return true;
  return false;
}

int minimal_factorization_length(const Permutation& f) {
  int len = 0;
  for (const auto& c : f.cycles()) len += static_cast<int>(c.size()) - 1;
  return len;
}

namespace {

void phi_dfs(detail::Packed rest, int left, int k, std::uint64_t& count,
             const Deadline& deadline, std::uint64_t& nodes) {
  if (left == 0) {
    if (rest == detail::packed_identity(k)) ++count;
    return;
  }
  if ((++nodes & 0xFFF) == 0 && deadline.over()) throw std::runtime_error("phi timeout");
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      // rest' = t . rest must still be reachable in left-1 steps
      detail::Packed t = detail::packed_identity(k);
      t &= ~((detail::Packed{0xF} << (4 * a)) | (detail::Packed{0xF} << (4 * b)));
      t |= (detail::Packed(b) << (4 * a)) | (detail::Packed(a) << (4 * b));
      const detail::Packed next = detail::packed_then(t, rest, k);
      if (detail::min_transposition_length(next, k) != left - 1) continue;
      phi_dfs(next, left - 1, k, count, deadline, nodes);
    }
  }
}

}  // namespace

PhiOutcome count_minimal_factorizations(const Permutation& f, const Budget& budget) {
  auto supp = f.support();
  if (static_cast<int>(supp.size()) > budget.max_phi_support) return {true, 0};
  if (supp.empty()) return {false, 1};  // the empty factorization
  // relabel the support to 0..k-1
  const int k = static_cast<int>(supp.size());
  std::map<int, int> index;
  for (int i = 0; i < k; ++i) index[supp[i]] = i;
  std::vector<int> im(k);
  for (int i = 0; i < k; ++i) im[i] = index.at(f.apply(supp[i]));
  const Permutation target(std::move(im));
  const int len = minimal_factorization_length(target);
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  Deadline deadline(budget);
  try {
    // Peel the word from the left: after a prefix p the suffix must
    // realize p^- f, so the residual starts at f and each chosen letter
    // t maps it to t.residual; a minimal word shrinks it every step.
    phi_dfs(detail::pack(target), len, k, count, deadline, nodes);
  } catch (const std::runtime_error&) {
    return {true, 0};
  }
  return {false, count};
}

CosetOutcome coset_check(const TranspSequence& s, const Budget& budget) {
  auto prod = enumerate_prod(s, budget);
  if (!prod) return {true, std::nullopt};
  const int n = prod->degree;
  std::vector<detail::Packed> h;
  h.reserve(prod->members.size());
  const detail::Packed ginv = detail::pack(prod->members.front().inverse());
  for (const auto& p : prod->members)
    h.push_back(detail::packed_then(detail::pack(p), ginv, n));
  std::sort(h.begin(), h.end());
  Deadline deadline(budget);
  std::uint64_t steps = 0;
  for (detail::Packed a : h) {
    if (!std::binary_search(h.begin(), h.end(), detail::packed_inverse(a, n)))
      return {false, std::nullopt};
    for (detail::Packed b : h) {
      if ((++steps & 0xFFF) == 0 && deadline.over()) return {true, std::nullopt};
      if (!std::binary_search(h.begin(), h.end(), detail::packed_then(a, b, n)))
        return {false, std::nullopt};
    }
  }
  return {false, static_cast<std::uint64_t>(prod->members.size())};
}

OracleSummary summarize_oracle(const ProdSet& prod, OracleVerdict v) {
  OracleSummary s;
  s.verdict = v;
  s.prod_size = prod.members.size();
  s.even = prod.even;
  std::map<CycleType, std::uint64_t> spectrum;
  for (const auto& f : prod.members) ++spectrum[f.cycle_type()];
  s.spectrum.assign(spectrum.begin(), spectrum.end());
  return s;
}

namespace {

ClassificationReport build_report(const std::string& input, const std::string& property,
                                  bool run_structural,
                                  const std::optional<StructuralVerdict>& structural,
                                  const std::optional<OracleSummary>& oracle) {
  ClassificationReport r;
  r.input = input;
  r.property = property;
  r.structural_ran = run_structural;
  if (structural) r.structural = *structural;
  if (oracle) r.oracle = *oracle;
  if (run_structural && oracle && r.structural.answer != Answer::unknown &&
      oracle->verdict != OracleVerdict::refused) {
    r.agreement = (r.structural.answer == Answer::yes) ==
                  (oracle->verdict == OracleVerdict::yes);
  }
  return r;
}

}  // namespace

ClassificationReport classify_perm_complete(const TranspSequence& s,
                                            const std::string& input_desc,
                                            bool run_structural, bool run_oracle,
                                            const Budget& budget) {
  std::optional<StructuralVerdict> structural;
  if (run_structural)
    structural = perm_complete_structural(Multigraph::from_sequence(s));
  std::optional<OracleSummary> oracle;
  if (run_oracle) {
    auto prod = enumerate_prod(s, budget);
    if (!prod) {
      oracle = OracleSummary{};  // refused
    } else {
      const auto v = prod->members.size() == half_order(s.degree) ? OracleVerdict::yes
                                                                  : OracleVerdict::no;
      oracle = summarize_oracle(*prod, v);
    }
  }
  return build_report(input_desc, "perm-complete", run_structural, structural,
                      oracle);
}

ClassificationReport classify_ci(const TranspSequence& s, const std::string& input_desc,
                                 bool run_structural, bool run_oracle,
                                 const Budget& budget) {
  std::optional<StructuralVerdict> structural;
  if (run_structural) structural = ci_structural(s);
  std::optional<OracleSummary> oracle;
  if (run_oracle) {
    auto prod = enumerate_prod(s, budget);
    if (!prod) {
      oracle = OracleSummary{};
    } else {
      OracleVerdict v = OracleVerdict::yes;
      if (!prod->members.empty()) {
        const CycleType t0 = prod->members.front().cycle_type();
        for (const auto& f : prod->members)
          if (f.cycle_type() != t0) {
            v = OracleVerdict::no;
            break;
          }
      }
      oracle = summarize_oracle(*prod, v);
    }
  }
  return build_report(input_desc, "conjugacy-invariant", run_structural, structural,
                      oracle);
}

ClassificationReport classify_ci_perms(std::span<const Permutation> s, int degree,
                                       const std::string& input_desc,
                                       const Budget& budget) {
  std::optional<OracleSummary> oracle;
  auto prod = enumerate_prod(s, degree, budget);
  if (!prod) {
    oracle = OracleSummary{};
  } else {
    OracleVerdict v = OracleVerdict::yes;
    if (!prod->members.empty()) {
      const CycleType t0 = prod->members.front().cycle_type();
      for (const auto& f : prod->members)
        if (f.cycle_type() != t0) {
          v = OracleVerdict::no;
          break;
        }
    }
    oracle = summarize_oracle(*prod, v);
  }
  return build_report(input_desc, "conjugacy-invariant", false, std::nullopt,
                      oracle);
}

namespace {

nlohmann::ordered_json structural_json(const StructuralVerdict& v) {
  nlohmann::ordered_json j;
  j["answer"] = to_string(v.answer);
  j["rule"] = v.rule;
  j["detail"] = v.detail;
  j["witness_vertices"] = v.witness_vertices;
  return j;
}

nlohmann::ordered_json oracle_json(const OracleSummary& o) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(o.verdict);
  if (o.verdict == OracleVerdict::refused) return j;
  j["prod_size"] = o.prod_size;
  j["parity"] = o.even ? "even" : "odd";
  auto spec = nlohmann::ordered_json::array();
  for (const auto& [type, count] : o.spectrum)
    spec.push_back({{"type", type.to_string()}, {"count", count}});
  j["spectrum"] = spec;
  return j;
}

}  // namespace

std::string ClassificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["input"] = input;
  j["property"] = property;
  if (structural_ran)
    j["structural"] = structural_json(structural);
  else
    j["structural"] = nullptr;
  if (oracle)
    j["oracle"] = oracle_json(*oracle);
  else
    j["oracle"] = nullptr;
  if (agreement)
    j["agreement"] = *agreement;
  else
    j["agreement"] = "n/a";
  return j.dump();
}

std::string ClassificationReport::to_text() const {
  std::ostringstream os;
  os << "input: " << input << "\n";
  os << "property: " << property << "\n";
  if (structural_ran) {
    os << "structural: " << to_string(structural.answer);
    if (!structural.rule.empty()) os << " (rule " << structural.rule << ")";
    if (!structural.detail.empty()) os << " -- " << structural.detail;
    if (!structural.witness_vertices.empty()) {
      os << " [";
      for (std::size_t i = 0; i < structural.witness_vertices.size(); ++i)
        os << (i ? " " : "") << structural.witness_vertices[i];
      os << "]";
    }
    os << "\n";
  }
  if (oracle) {
    os << "oracle: " << to_string(oracle->verdict);
    if (oracle->verdict != OracleVerdict::refused) {
      os << " (|Prod| = " << oracle->prod_size << ", parity " <<
          (oracle->even ? "even" : "odd") << ", spectrum";
      for (const auto& [type, count] : oracle->spectrum)
        os << " " << type.to_string() << ":" << count;
      os << ")";
    }
    os << "\n";
  }
  if (agreement)
    os << "agreement: " << (*agreement ? "true" : "false") << "\n";
  else
    os << "agreement: n/a\n";
  return os.str();
}

}  // namespace prodset
