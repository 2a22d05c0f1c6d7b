#include "prodset/enumeration.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "prodset/detail/packed.hpp"
#include "prodset/multigraph.hpp"

namespace prodset {

namespace {

using Clock = std::chrono::steady_clock;
using boost::multiprecision::cpp_int;
using detail::kMaxPackedDegree;
using detail::pack;
using detail::Packed;
using detail::packed_identity;
using detail::packed_inverse;
using detail::packed_then;
using detail::unpack;

struct RefusedError {};

struct Deadline {
  Clock::time_point end;
  bool enabled;
  explicit Deadline(const Budget& b)
      : end(Clock::now() + b.soft_time), enabled(b.soft_time.count() > 0) {}
  void check() const {
    if (enabled && Clock::now() > end) throw RefusedError{};
  }
};

// Distinct letters of the multiset with counts and a mixed-radix state
// encoding of "how many of each letter are present".
struct LetterSet {
  int degree = 1;
  std::vector<Packed> letters;
  std::vector<int> counts;
  std::vector<std::uint64_t> radix;
  std::uint64_t state_count = 0;  // product of (count+1), saturated

  std::uint64_t full_state() const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) s += counts[i] * radix[i];
    return s;
  }
};

LetterSet make_letters(std::span<const Permutation> s, int degree) {
  if (degree < 1) throw std::domain_error("degree must be positive");
  if (degree > kMaxPackedDegree)
    throw std::domain_error("enumeration supports degree <= 16");
  std::map<Permutation, int> mult;
  for (const auto& f : s) {
    if (f.degree() != degree) throw std::domain_error("degree mismatch in sequence");
    ++mult[f];
  }
  LetterSet ls;
  ls.degree = degree;
  std::uint64_t states = 1;
  bool saturated = false;
  for (const auto& [f, c] : mult) {
    ls.letters.push_back(pack(f));
    ls.counts.push_back(c);
    ls.radix.push_back(states);
    const std::uint64_t next = states * (c + 1);
    if (next / (c + 1) != states) saturated = true;
    states = next;
  }
  ls.state_count = saturated ? UINT64_MAX : states;
  return ls;
}

bool within_budget(const LetterSet& ls, std::size_t total_terms, const Budget& b) {
  if (total_terms <= b.max_terms) return true;
  // Coarse peak estimate: every state could hold up to n!/2 members.
  cpp_int half_fact = 1;
  for (int i = 2; i <= ls.degree; ++i) half_fact *= i;
  half_fact /= 2;
  if (half_fact == 0) half_fact = 1;
  if (ls.state_count == UINT64_MAX) return false;
  return cpp_int(ls.state_count) * half_fact <= cpp_int(b.max_stored);
}

// Level-order subset DP: level k holds R(S) for all sub-multisets S of
// total size k; only two levels are live at a time. Each R(S) is a
// sorted deduplicated vector of packed permutations.
std::vector<Packed> run_subset_dp(const LetterSet& ls, const Budget& budget) {
  const int m = static_cast<int>(ls.letters.size());
  int total = 0;
  for (int c : ls.counts) total += c;

  Deadline deadline(budget);
  std::size_t stored = 0;

  std::unordered_map<std::uint64_t, std::pair<std::vector<int>, std::vector<Packed>>>
      level;
  level.reserve(16);
  level[0] = {std::vector<int>(m, 0), {packed_identity(ls.degree)}};
  stored = 1;

  for (int k = 0; k < total; ++k) {
    deadline.check();
    std::unordered_map<std::uint64_t,
                       std::pair<std::vector<int>, std::vector<Packed>>>
        next;
    next.reserve(level.size() * 2);
    std::size_t next_stored = 0;
    for (const auto& [key, entry] : level) {
      const auto& [used, set] = entry;
      for (int i = 0; i < m; ++i) {
        if (used[i] >= ls.counts[i]) continue;
        const std::uint64_t nkey = key + ls.radix[i];
        auto it = next.find(nkey);
        if (it == next.end()) {
          auto nused = used;
          ++nused[i];
          it = next.emplace(nkey, std::make_pair(std::move(nused),
                                                 std::vector<Packed>{}))
                   .first;
        }
        auto& bucket = it->second.second;
        for (Packed p : set) bucket.push_back(packed_then(p, ls.letters[i], ls.degree));
        next_stored += set.size();
        if (stored + next_stored > budget.max_stored) throw RefusedError{};
      }
      deadline.check();
    }
    for (auto& [key, entry] : next) {
      auto& bucket = entry.second;
      std::sort(bucket.begin(), bucket.end());
      bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
      bucket.shrink_to_fit();
    }
    next_stored = 0;
    for (const auto& [key, entry] : next) next_stored += entry.second.size();
    if (next_stored > budget.max_stored) throw RefusedError{};
    level = std::move(next);
    stored = next_stored;
  }

  if (level.size() != 1) throw std::logic_error("subset DP did not converge");
  return level.begin()->second.second;
}

ProdSet finish(const LetterSet& ls, std::span<const Permutation> s,
               std::vector<Packed> packed) {
  ProdSet out;
  out.degree = ls.degree;
  bool even = true;
  for (const auto& f : s) even = (even == f.is_even());
  out.even = even;
  out.members.reserve(packed.size());
  for (Packed p : packed) out.members.push_back(unpack(p, ls.degree));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace

std::optional<ProdSet> enumerate_prod(std::span<const Permutation> s, int degree,
                                      const Budget& budget) {
  LetterSet ls = make_letters(s, degree);
  if (!within_budget(ls, s.size(), budget)) return std::nullopt;
  try {
    return finish(ls, s, run_subset_dp(ls, budget));
  } catch (const RefusedError&) {
    return std::nullopt;
  }
}

std::optional<ProdSet> enumerate_prod(const TranspSequence& s, const Budget& budget) {
  std::vector<Permutation> perms;
  perms.reserve(s.terms.size());
  for (const auto& t : s.terms) perms.push_back(t.to_permutation(s.degree));
  return enumerate_prod(perms, s.degree, budget);
}

namespace {

using detail::min_transposition_length;

struct StatePartialHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    std::uint64_t h = k.first * 0x9E3779B97F4A7C15ull;
    h ^= k.second + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct FindContext {
  LetterSet ls;
  Packed target = 0;
  Budget budget;
  Deadline deadline;
  // Exact (remaining-count state, partial product) pairs known to fail.
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, StatePartialHash> failed;
  std::vector<int> remaining;
  std::vector<Transposition> letter_terms;
  std::vector<Transposition> chosen;

  explicit FindContext(const Budget& b) : budget(b), deadline(b) {}
};

bool find_dfs(FindContext& ctx, std::uint64_t state, Packed partial, int left) {
  ctx.deadline.check();
  if (left == 0) return partial == ctx.target;
  // What the suffix still has to realize must fit in `left` transpositions.
  const Packed rest =
      packed_then(packed_inverse(partial, ctx.ls.degree), ctx.target, ctx.ls.degree);
  if (min_transposition_length(rest, ctx.ls.degree) > left) return false;

  const auto memo_key = std::make_pair(state, partial);
  if (ctx.failed.count(memo_key)) return false;

  for (std::size_t i = 0; i < ctx.ls.letters.size(); ++i) {
    if (ctx.remaining[i] == 0) continue;
    --ctx.remaining[i];
    ctx.chosen.push_back(ctx.letter_terms[i]);
    const bool ok = find_dfs(ctx, state - ctx.ls.radix[i],
                             packed_then(partial, ctx.ls.letters[i], ctx.ls.degree),
                             left - 1);
    if (ok) return true;
    ctx.chosen.pop_back();
    ++ctx.remaining[i];
  }
  ctx.failed.insert(memo_key);
  if (ctx.failed.size() > ctx.budget.max_stored) throw RefusedError{};
  return false;
}

}  // namespace

FindOutcome find_rearrangement(const TranspSequence& s, const Permutation& f,
                               const Budget& budget) {
  if (f.degree() != s.degree)
    throw std::domain_error("target degree must match sequence degree");
  std::vector<Permutation> perms;
  perms.reserve(s.terms.size());
  for (const auto& t : s.terms) perms.push_back(t.to_permutation(s.degree));
  FindContext ctx(budget);
  ctx.ls = make_letters(perms, s.degree);
  if (!within_budget(ctx.ls, perms.size(), budget)) return {FindStatus::refused, {}};
  ctx.target = pack(f);
  ctx.remaining = ctx.ls.counts;
  // letters are sorted by permutation image; recover each one's pair
  for (Packed p : ctx.ls.letters) {
    Permutation q = unpack(p, s.degree);
    auto supp = q.support();
    ctx.letter_terms.emplace_back(supp[0], supp[1]);
  }
  try {
    if (find_dfs(ctx, ctx.ls.full_state(), packed_identity(s.degree), s.size()))
      return {FindStatus::found, TranspSequence(s.degree, ctx.chosen)};
    return {FindStatus::absent, {}};
  } catch (const RefusedError&) {
    return {FindStatus::refused, {}};
  }
}

PathDecomposition trace_paths(const TranspSequence& u) {
  const int n = u.degree;
  {
    std::vector<char> touched(n, 0);
    for (const auto& t : u.terms) touched[t.a] = touched[t.b] = 1;
    for (int v = 0; v < n; ++v)
      if (!touched[v])
        throw std::domain_error("every point must occur in some term");
  }
  PathDecomposition out;
  out.degree = n;
  out.walks.resize(n);
  out.arcs.resize(n);
  for (int x = 0; x < n; ++x) {
    int current = x;
    int pos = -1;
    out.walks[x].push_back(x);
    for (;;) {
      int next_idx = -1;
      for (int j = pos + 1; j < u.size(); ++j) {
        if (u.terms[j].a == current || u.terms[j].b == current) {
          next_idx = j;
          break;
        }
      }
      if (next_idx < 0) break;
      current = u.terms[next_idx].apply(current);
      pos = next_idx;
      out.walks[x].push_back(current);
      out.arcs[x].push_back(next_idx);
    }
  }
  return out;
}

boost::multiprecision::cpp_int arrangements_count(const TranspSequence& s) {
  cpp_int num = 1;
  for (int i = 2; i <= s.size(); ++i) num *= i;
  for (const auto& [t, m] : s.multiplicities())
    for (int i = 2; i <= m; ++i) num /= i;
  return num;
}

bool es_equivalent(const TranspSequence& u, const TranspSequence& s) {
  Multigraph g = Multigraph::from_sequence(u);
  if (!g.is_simple() || !g.is_multitree())
    throw std::domain_error("es_equivalent needs a simple-tree multigraph");
  if (!s.is_rearrangement_of(u))
    throw std::domain_error("second sequence must be a rearrangement of the first");
  for (int v = 0; v < u.degree; ++v) {
    std::vector<Transposition> uv, sv;
    for (const auto& t : u.terms)
      if (t.a == v || t.b == v) uv.push_back(t);
    for (const auto& t : s.terms)
      if (t.a == v || t.b == v) sv.push_back(t);
    if (uv != sv) return false;
  }
  return true;
}

std::string ProdSet::to_json() const {
  nlohmann::ordered_json j;
  j["degree"] = degree;
  j["parity"] = parity_name();
  j["size"] = members.size();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : members) arr.push_back(f.cycle_string());
  j["members"] = arr;
  return j.dump();
}

}  // namespace prodset
