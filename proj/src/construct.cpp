#include "prodset/construct.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace prodset {

std::vector<int> nu(int n) {
  if (n < 1) throw std::domain_error("nu needs n >= 1");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

TranspSequence tau(int n) {
  if (n < 2) throw std::domain_error("tau needs n >= 2");
  std::vector<Transposition> terms;
  for (int i = 0; i + 1 < n; ++i) terms.emplace_back(i, i + 1);
  return TranspSequence(n, std::move(terms));
}

TranspSequence sigma(int n) {
  if (n < 3) throw std::domain_error("sigma needs n >= 3");
  TranspSequence s = tau(n);
  s.terms.emplace_back(n - 1, 0);
  return s;
}

Multigraph bike(int n) {
  if (n < 0) throw std::domain_error("bike needs n >= 0");
  Multigraph g(n + 2);
  g.add_edge(0, 1);
  for (int i = 2; i <= n + 1; ++i) {
    g.add_edge(0, i);
    g.add_edge(1, i);
  }
  return g;
}

Multigraph wheel(int n) {
  if (n < 3) throw std::domain_error("wheel needs n >= 3");
  Multigraph g(n + 1);
  for (int i = 1; i <= n; ++i) g.add_edge(0, i);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  g.add_edge(1, n);
  return g;
}

Multigraph complete(int n) {
  if (n < 1) throw std::domain_error("complete needs n >= 1");
  Multigraph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

TranspSequence bike_product_sequence(const std::vector<int>& x) {
  const int len = static_cast<int>(x.size());
  if (len < 2 || len % 2 != 0)
    throw std::domain_error("bike product sequence needs even length >= 2");
  std::set<int> seen;
  for (int v : x) {
    if (v < 2) throw std::domain_error("bike product values must be >= 2");
    if (!seen.insert(v).second) throw std::domain_error("bike product values must be injective");
  }
  const int degree = *std::max_element(x.begin(), x.end()) + 1;
  std::vector<Transposition> terms;
  terms.emplace_back(0, x[0]);
  terms.emplace_back(1, x[1]);
  terms.emplace_back(0, x[1]);
  for (int i = 2; i + 1 < len; i += 2) {
    terms.emplace_back(0, x[i]);
    terms.emplace_back(1, x[i]);
    terms.emplace_back(1, x[i + 1]);
    terms.emplace_back(0, x[i + 1]);
  }
  terms.emplace_back(1, x[0]);
  return TranspSequence(degree, std::move(terms));
}

namespace {

// Arrangement of tau(m+1) whose product is the (m+1)-cycle that runs
// 0, then the points of p ascending, then m, then the remaining middle
// points descending. Built by Numbers-style accretion: putting the new
// top term in front sends its point to the ascending side, appending
// sends it to the descending side.
std::vector<Transposition> realize_path(const std::vector<int>& p, int m) {
  std::set<int> up(p.begin(), p.end());
  std::vector<Transposition> w{Transposition(0, 1)};
  for (int j = 2; j <= m; ++j) {
    if (up.count(j - 1))
      w.insert(w.begin(), Transposition(j - 1, j));
    else
      w.emplace_back(j - 1, j);
  }
  return w;
}

std::vector<int> complement_of(const std::vector<int>& h, int n) {
  std::vector<char> in(n, 0);
  for (int v : h) in[v] = 1;
  std::vector<int> c;
  for (int v = 0; v < n; ++v)
    if (!in[v]) c.push_back(v);
  return c;
}

std::vector<Transposition> realize_impl(const std::vector<int>& h, int n);

std::vector<Transposition> realize_reversed_complement(const std::vector<int>& h, int n) {
  auto w = realize_impl(complement_of(h, n), n);
  std::reverse(w.begin(), w.end());
  return w;
}

std::vector<Transposition> realize_impl(const std::vector<int>& h, int n) {
  if (n == 3) {
    // the three base words; each also realizes the complement of the
    // subsequence shown, because a 2-cycle is its own inverse
    const std::vector<Transposition> fu{{0, 1}, {1, 2}, {2, 0}};
    const std::vector<Transposition> fv{{0, 1}, {2, 0}, {1, 2}};
    const std::vector<Transposition> fw{{1, 2}, {0, 1}, {2, 0}};
    if (h == std::vector<int>{0} || h == std::vector<int>{1, 2}) return fu;
    if (h == std::vector<int>{1} || h == std::vector<int>{0, 2}) return fv;
    return fw;  // {2} or {0,1}
  }
  const int size = static_cast<int>(h.size());
  if (size == 1) {
    // explicit rotation word starting at the fixed point
    const int x = h[0];
    std::vector<Transposition> w;
    for (int k = 0; k < n; ++k)
      w.emplace_back((x + k) % n, (x + k + 1) % n);
    return w;
  }
  if (size == n - 1) return realize_reversed_complement(h, n);

  const bool has0 = h.front() == 0;
  const bool hasTop = h.back() == n - 1;
  if (has0 && hasTop) {
    // both ends present: middle-path word, the circuit-closing term,
    // then the descending chain absorbing the tail run
    const auto comp = complement_of(h, n);
    const int m = comp.back();
    std::vector<int> p;
    for (int v : h)
      if (v >= 1 && v < m) p.push_back(v);
    auto w = realize_path(p, m);
    w.emplace_back(n - 1, 0);
    for (int j = n - 1; j > m; --j) w.emplace_back(j, j - 1);
    return w;
  }
  if (!has0) return realize_reversed_complement(h, n);

  // 0 in h, n-1 not: splice the tail run into the complement cycle by
  // expanding the circuit-closing term into an ascending chain.
  const int top = h.back();
  std::vector<int> c;
  for (int v = 1; v < top; ++v)
    if (!std::binary_search(h.begin(), h.end(), v)) c.push_back(v);
  std::vector<Transposition> w;
  if (c.empty()) {
    // h is the full prefix {0,...,top}: descending run realizes the
    // prefix cycle, then the ascending chain builds the reversed rest
    for (int j = top; j >= 0; --j) w.emplace_back(j, j + 1);
    for (int j = top + 1; j + 1 < n; ++j) w.emplace_back(j, j + 1);
    w.emplace_back(n - 1, 0);
  } else {
    const int m2 = c.back();
    std::vector<int> p;
    for (int v : h)
      if (v >= 1 && v < m2) p.push_back(v);
    w = realize_path(p, m2);
    for (int j = top; j + 1 < n; ++j) w.emplace_back(j, j + 1);
    w.emplace_back(n - 1, 0);
    for (int j = top; j > m2; --j) w.emplace_back(j, j - 1);
  }
  return w;
}

}  // namespace

TranspSequence circuit_realizer(const std::vector<int>& h, int n) {
  if (n < 3) throw std::domain_error("circuit realizer needs n >= 3");
  if (h.empty() || static_cast<int>(h.size()) >= n)
    throw std::domain_error("h must be a nonempty proper subsequence of nu(n)");
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] < 0 || h[i] >= n) throw std::domain_error("h value out of range");
    if (i > 0 && h[i] <= h[i - 1])
      throw std::domain_error("h must be strictly increasing");
  }
  TranspSequence f(n, realize_impl(h, n));
  assert(f.is_rearrangement_of(sigma(n)));
  return f;
}

namespace {

TranspSequence literal(int degree, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Transposition> terms;
  for (auto [a, b] : pairs) terms.emplace_back(a, b);
  return TranspSequence(degree, std::move(terms));
}

}  // namespace

TranspSequence named_sequence(const std::string& name) {
  if (name == "rect")
    return literal(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  if (name == "a")
    return literal(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  if (name == "b") {
    TranspSequence s = named_sequence("a");
    TranspSequence out(6, {});
    out.terms = s.terms;
    out.terms.emplace_back(2, 5);
    out.terms.emplace_back(3, 5);
    return out;
  }
  if (name == "c")
    return literal(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {3, 4}});
  if (name == "d") {
    TranspSequence s = named_sequence("b");
    TranspSequence out(7, {});
    out.terms = s.terms;
    out.terms.emplace_back(4, 6);
    out.terms.emplace_back(5, 6);
    return out;
  }
  if (name == "e")
    return literal(8, {{0, 1},
                       {0, 3},
                       {1, 2},
                       {1, 3},
                       {2, 3},
                       {2, 4},
                       {3, 4},
                       {3, 7},
                       {4, 5},
                       {4, 7},
                       {5, 6},
                       {5, 7},
                       {6, 7}});
  if (name == "h4")
    return literal(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  std::string catalog;
  for (const auto& s : named_sequence_catalog()) catalog += " " + s;
  throw std::domain_error("unknown sequence name '" + name + "'; catalog:" + catalog);
}

std::vector<Permutation> named_permutation_sequence(const std::string& name) {
  if (name == "s34a") {
    Permutation c012 = Permutation::parse_cycles("(0 1 2)", 3);
    Permutation c021 = Permutation::parse_cycles("(0 2 1)", 3);
    return {c012, c021, c021};
  }
  if (name == "s34b") {
    return {Permutation::parse_cycles("(0 1 2)", 4), Permutation::parse_cycles("(0 3 2)", 4),
            Permutation::parse_cycles("(0 3 1)", 4)};
  }
  std::string catalog;
  for (const auto& s : named_permutation_catalog()) catalog += " " + s;
  throw std::domain_error("unknown permutation sequence '" + name + "'; catalog:" + catalog);
}

std::vector<std::string> named_sequence_catalog() {
  return {"rect", "a", "b", "c", "d", "e", "h4"};
}

std::vector<std::string> named_permutation_catalog() { return {"s34a", "s34b"}; }

bool is_path_product_shape(const Permutation& f) {
  const int n = f.degree();
  if (n < 2) return false;
  auto cyc = f.cycles();
  if (cyc.size() != 1 || static_cast<int>(cyc.front().size()) != n) return false;
  const auto& c = cyc.front();  // starts at its least element, which must be 0
  if (c.front() != 0) return false;
  const auto top = std::find(c.begin(), c.end(), n - 1);
  // ascending block through n-1, then a strictly decreasing tail
  for (auto it = c.begin() + 1; it <= top; ++it)
    if (*(it - 1) >= *it) return false;
  for (auto it = top + 2; it < c.end(); ++it)
    if (*(it - 1) <= *it) return false;
  return true;
}

namespace {

bool orbit_monotone_cyclic(const Permutation& f, const std::vector<int>& orbit,
                           bool increasing) {
  std::vector<int> sorted = orbit;
  std::sort(sorted.begin(), sorted.end());
  const int k = static_cast<int>(sorted.size());
  for (int i = 0; i < k; ++i) {
    const int x = sorted[i];
    const int expected =
        increasing ? sorted[(i + 1) % k] : sorted[(i - 1 + k) % k];
    if (f.apply(x) != expected) return false;
  }
  return true;
}

}  // namespace

bool is_circuit_product_shape(const Permutation& f) {
  const int n = f.degree();
  if (n < 2) return false;
  // orbits, fixed points included
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[j]; j = f.apply(j)) {
      seen[j] = 1;
      orbit.push_back(j);
    }
    orbits.push_back(std::move(orbit));
  }
  if (orbits.size() != 2) return false;
  return (orbit_monotone_cyclic(f, orbits[0], true) &&
          orbit_monotone_cyclic(f, orbits[1], false)) ||
         (orbit_monotone_cyclic(f, orbits[1], true) &&
          orbit_monotone_cyclic(f, orbits[0], false));
}

}  // namespace prodset
