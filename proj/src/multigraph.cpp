#include "prodset/multigraph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace prodset {

Multigraph::Multigraph(int n) : n_(n) {
  if (n < 1) throw std::domain_error("multigraph needs at least one vertex");
}

Multigraph Multigraph::from_sequence(const TranspSequence& u) {
  Multigraph g(u.degree);
  for (const auto& t : u.terms) g.add_edge(t.a, t.b);
  return g;
}

void Multigraph::add_edge(int a, int b, int multiplicity) {
  if (a == b) throw std::domain_error("no self-loops");
  if (a < 0 || b < 0 || a >= n_ || b >= n_)
    throw std::domain_error("edge endpoint out of range");
  if (multiplicity < 1) throw std::domain_error("multiplicity must be >= 1");
  mult_[Transposition(a, b)] += multiplicity;
}

int Multigraph::multiplicity(int a, int b) const {
  auto it = mult_.find(Transposition(a, b));
  return it == mult_.end() ? 0 : it->second;
}

int Multigraph::total_multiplicity() const {
  int total = 0;
  for (const auto& [e, m] : mult_) total += m;
  return total;
}

bool Multigraph::is_simple() const {
  for (const auto& [e, m] : mult_)
    if (m != 1) return false;
  return true;
}

std::vector<int> Multigraph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::domain_error("vertex out of range");
  std::vector<int> out;
  for (const auto& [e, m] : mult_) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Multigraph::distinct_degree(int v) const {
  return static_cast<int>(neighbors(v).size());
}

TranspSequence Multigraph::canonical_sequence() const {
  std::vector<Transposition> terms;
  for (const auto& [e, m] : mult_)
    for (int i = 0; i < m; ++i) terms.push_back(e);
  return TranspSequence(n_, std::move(terms));
}

std::vector<MultigraphComponent> Multigraph::components() const {
  std::vector<int> comp(n_, -1);
  int count = 0;
  for (int start = 0; start < n_; ++start) {
    if (comp[start] != -1) continue;
    const int id = count++;
    std::vector<int> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors(v)) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<MultigraphComponent> parts;
  for (int id = 0; id < count; ++id) {
    std::vector<int> vs;
    for (int v = 0; v < n_; ++v)
      if (comp[v] == id) vs.push_back(v);
    parts.push_back(MultigraphComponent{vs, induced(vs, /*relabel=*/true)});
  }
  return parts;
}

bool Multigraph::is_connected() const { return components().size() == 1; }

bool Multigraph::is_multitree() const {
  return is_connected() && distinct_edge_count() == n_ - 1;
}

std::vector<TwigProfile> Multigraph::twig_profiles() const {
  std::vector<TwigProfile> out;
  for (const auto& [e, m] : mult_) {
    const int da = distinct_degree(e.a);
    const int db = distinct_degree(e.b);
    if (da != 1 && db != 1) continue;
    TwigProfile p;
    p.edge = e;
    p.multiplicity = m;
    if (da == 1 && db == 1) {
      p.leaf = e.a;  // two-vertex multigraph: lowest index is the leaf
      p.hub = e.b;
    } else if (da == 1) {
      p.leaf = e.a;
      p.hub = e.b;
    } else {
      p.leaf = e.b;
      p.hub = e.a;
    }
    p.hub_degree = distinct_degree(p.hub);
    out.push_back(p);
  }
  return out;
}

std::vector<std::pair<Transposition, int>> Multigraph::cross_edges(
    const std::vector<int>& v0) const {
  std::set<int> side(v0.begin(), v0.end());
  if (side.size() != v0.size()) throw std::domain_error("duplicate vertex in v0");
  if (side.empty() || static_cast<int>(side.size()) >= n_)
    throw std::domain_error("v0 must be a proper nonempty vertex subset");
  for (int v : side)
    if (v < 0 || v >= n_) throw std::domain_error("vertex out of range in v0");
  std::vector<std::pair<Transposition, int>> out;
  for (const auto& [e, m] : mult_)
    if (side.count(e.a) != side.count(e.b)) out.emplace_back(e, m);
  return out;
}

Multigraph Multigraph::induced(const std::vector<int>& vertices, bool relabel) const {
  std::map<int, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= n_) throw std::domain_error("vertex out of range");
    index[v] = static_cast<int>(i);
  }
  if (index.size() != vertices.size()) throw std::domain_error("duplicate vertex");
  Multigraph g(relabel ? static_cast<int>(vertices.size()) : n_);
  for (const auto& [e, m] : mult_) {
    auto ia = index.find(e.a);
    auto ib = index.find(e.b);
    if (ia == index.end() || ib == index.end()) continue;
    if (relabel)
      g.add_edge(ia->second, ib->second, m);
    else
      g.add_edge(e.a, e.b, m);
  }
  return g;
}

std::vector<int> Multigraph::canonical_key() const {
  if (n_ > 8)
    throw std::domain_error("canonical labeling uses exhaustive relabeling, n <= 8 only");
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> key;
    key.reserve(1 + n_ * (n_ - 1) / 2);
    key.push_back(n_);
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) key.push_back(multiplicity(perm[a], perm[b]));
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Multigraph Multigraph::canonical_form() const {
  auto key = canonical_key();
  Multigraph g(n_);
  std::size_t idx = 1;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      if (key[idx] > 0) g.add_edge(a, b, key[idx]);
      ++idx;
    }
  return g;
}

std::string Multigraph::canonical_id() const {
  Multigraph g = canonical_form();
  std::ostringstream os;
  os << 'g' << g.n_;
  for (const auto& [e, m] : g.mult_) os << ':' << e.a << '-' << e.b << 'x' << m;
  return os.str();
}

Multigraph Multigraph::parse_text(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::array<int, 3>> pending;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (n < 0) {
      long declared;
      if (first != "n" || !(ls >> declared) || declared < 1)
        throw ParseError("expected header line \"n <N>\"", lineno, 1);
      std::string extra;
      if (ls >> extra) throw ParseError("unexpected token after header", lineno, 1);
      n = static_cast<int>(declared);
      continue;
    }
    long a, b, m = 1;
    try {
      a = std::stol(first);
    } catch (...) {
      throw ParseError("expected edge line \"a b [m]\"", lineno, 1);
    }
    if (!(ls >> b)) throw ParseError("expected edge line \"a b [m]\"", lineno, 1);
    if (!(ls >> m)) m = 1;
    std::string extra;
    if (ls >> extra) throw ParseError("unexpected token after edge", lineno, 1);
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError("edge endpoint out of range", lineno, 1);
    if (a == b) throw ParseError("no self-loops", lineno, 1);
    if (m < 1) throw ParseError("multiplicity must be >= 1", lineno, 1);
    pending.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(m)});
  }
  if (n < 0) throw ParseError("missing header line \"n <N>\"", lineno, 1);
  Multigraph g(n);
  for (auto [a, b, m] : pending) g.add_edge(a, b, m);
  return g;
}

std::string Multigraph::to_text() const {
  std::ostringstream os;
  os << "n " << n_ << "\n";
  for (const auto& [e, m] : mult_) os << e.a << ' ' << e.b << ' ' << m << "\n";
  return os.str();
}

Multigraph Multigraph::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Multigraph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || (e.size() != 2 && e.size() != 3))
      throw std::domain_error("edge entries must be [a,b] or [a,b,m]");
    int m = e.size() == 3 ? e[2].get<int>() : 1;
    g.add_edge(e[0].get<int>(), e[1].get<int>(), m);
  }
  return g;
}

std::string Multigraph::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [e, m] : mult_) edges.push_back({e.a, e.b, m});
  j["edges"] = edges;
  return j.dump();
}

}  // namespace prodset
