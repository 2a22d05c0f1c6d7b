#include "prodset/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace prodset {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw std::domain_error("permutation images must be a bijection of {0,...,n-1}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::domain_error("degree must be nonnegative");
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_cycle(std::span<const int> points, int degree) {
  Permutation p = identity(degree);
  const int k = static_cast<int>(points.size());
  std::vector<char> seen(degree, 0);
  for (int x : points) {
    if (x < 0 || x >= degree) throw std::domain_error("cycle point out of range");
    if (seen[x]) throw std::domain_error("repeated point in cycle");
    seen[x] = 1;
  }
  for (int i = 0; i < k; ++i) p.images_[points[i]] = points[(i + 1) % k];
  return p;
}

int Permutation::apply(int x) const {
  if (x < 0 || x >= degree()) throw std::domain_error("point out of range");
  return images_[x];
}

Permutation Permutation::then(const Permutation& g) const {
  if (degree() != g.degree()) throw std::domain_error("degree mismatch in composition");
  Permutation r;
  r.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) r.images_[i] = g.images_[images_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
  return r;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse().then(*this).then(g);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  // parity = degree - #cycles (fixed points included)
  int cycles_count = 0;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++cycles_count;
    for (int j = i; !seen[j]; j = images_[j]) seen[j] = 1;
  }
  return (degree() - cycles_count) % 2 == 0;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) s.push_back(i);
  return s;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = 1;
      continue;
    }
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

CycleType Permutation::cycle_type() const { return CycleType::of(*this); }

std::string Permutation::cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  if (degree < 0) throw std::domain_error("degree must be nonnegative");
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto col = [&] { return static_cast<int>(i) + 1; };
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", 1, col());
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle", 1, col());
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point or ')'", 1, col());
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1'000'000) throw ParseError("point too large", 1, col());
        ++i;
      }
      if (v >= degree) throw ParseError("point out of range for degree", 1, col());
      if (used[v]) throw ParseError("point repeated across cycles", 1, col());
      used[v] = 1;
      cyc.push_back(static_cast<int>(v));
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      images[cyc[k]] = cyc[(k + 1) % cyc.size()];
    any = true;
    skip_ws();
  }
  if (!any) throw ParseError("empty permutation text", 1, 1);
  return Permutation(std::move(images));
}

CycleType::CycleType(int degree, std::vector<int> exponents)
    : degree_(degree), exponents_(std::move(exponents)) {
  if (degree_ < 0 || static_cast<int>(exponents_.size()) != degree_)
    throw std::domain_error("cycle type needs one exponent per length 1..n");
  long long total = 0;
  for (int j = 1; j <= degree_; ++j) {
    if (exponents_[j - 1] < 0) throw std::domain_error("negative exponent");
    total += static_cast<long long>(j) * exponents_[j - 1];
  }
  if (total != degree_)
    throw std::domain_error("cycle type exponents must satisfy sum j*e(j) = n");
}

CycleType CycleType::of(const Permutation& f) {
  const int n = f.degree();
  std::vector<int> exp(n, 0);
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = f.images()[j]) {
      seen[j] = 1;
      ++len;
    }
    ++exp[len - 1];
  }
  CycleType t;
  t.degree_ = n;
  t.exponents_ = std::move(exp);
  return t;
}

int CycleType::exponent(int length) const {
  if (length < 1 || length > degree_) throw std::domain_error("cycle length out of range");
  return exponents_[length - 1];
}

bool CycleType::is_even() const {
  int parity = 0;
  for (int j = 2; j <= degree_; ++j) parity += (j - 1) * exponents_[j - 1];
  return parity % 2 == 0;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 1; j <= degree_; ++j) {
    if (exponents_[j - 1] == 0) continue;
    if (!first) os << ' ';
    os << j << '^' << exponents_[j - 1];
    first = false;
  }
  return os.str();
}

Transposition::Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
  if (x == y) throw std::domain_error("transposition endpoints must differ");
  if (a < 0) throw std::domain_error("transposition point must be nonnegative");
}

Permutation Transposition::to_permutation(int degree) const {
  if (b >= degree) throw std::domain_error("transposition point out of range");
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  im[a] = b;
  im[b] = a;
  return Permutation(std::move(im));
}

std::string Transposition::to_string() const {
  return "(" + std::to_string(a) + " " + std::to_string(b) + ")";
}

TranspSequence::TranspSequence(int degree_, std::vector<Transposition> terms_)
    : degree(degree_), terms(std::move(terms_)) {
  if (degree < 1) throw std::domain_error("sequence degree must be positive");
  for (const auto& t : terms)
    if (t.b >= degree) throw std::domain_error("sequence term out of range");
}

Permutation TranspSequence::product() const { return compose_sequence(terms, degree); }

std::vector<int> TranspSequence::support_union() const {
  std::vector<char> in(degree, 0);
  for (const auto& t : terms) in[t.a] = in[t.b] = 1;
  std::vector<int> out;
  for (int i = 0; i < degree; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::map<Transposition, int> TranspSequence::multiplicities() const {
  std::map<Transposition, int> m;
  for (const auto& t : terms) ++m[t];
  return m;
}

TranspSequence TranspSequence::reversed() const {
  TranspSequence r = *this;
  std::reverse(r.terms.begin(), r.terms.end());
  return r;
}

bool TranspSequence::is_rearrangement_of(const TranspSequence& other) const {
  return degree == other.degree && multiplicities() == other.multiplicities();
}

Permutation compose_sequence(std::span<const Transposition> terms, int degree) {
  if (degree < 0) throw std::domain_error("degree must be nonnegative");
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  // apply terms left to right to each point's running image
  for (const auto& t : terms) {
    if (t.b >= degree) throw std::domain_error("point out of range in sequence");
    for (int i = 0; i < degree; ++i) im[i] = t.apply(im[i]);
  }
  return Permutation(std::move(im));
}

Permutation compose_sequence(std::span<const Permutation> terms, int degree) {
  Permutation acc = Permutation::identity(degree);
  for (const auto& f : terms) {
    if (f.degree() != degree) throw std::domain_error("degree mismatch in sequence");
    acc = acc.then(f);
  }
  return acc;
}

bool is_conjugate(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) throw std::domain_error("degree mismatch in conjugacy test");
  return f.cycle_type() == g.cycle_type();
}

TranspSequence parse_sequence_text(std::istream& in, std::optional<int> degree) {
  std::vector<Transposition> terms;
  int max_point = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long a, b;
    if (!(ls >> a)) continue;  // blank / comment-only line
    if (!(ls >> b)) throw ParseError("expected two points per line", lineno, 1);
    std::string extra;
    if (ls >> extra) throw ParseError("unexpected token after pair", lineno, 1);
    if (a < 0 || b < 0) throw ParseError("points must be nonnegative", lineno, 1);
    if (a == b) throw ParseError("transposition endpoints must differ", lineno, 1);
    terms.emplace_back(static_cast<int>(a), static_cast<int>(b));
    max_point = std::max(max_point, static_cast<int>(std::max(a, b)));
  }
  int n = degree.value_or(max_point + 1);
  if (n < 1) n = 1;
  if (max_point >= n) throw ParseError("point out of range for declared degree", lineno, 1);
  return TranspSequence(n, std::move(terms));
}

std::string sequence_to_text(const TranspSequence& s) {
  std::ostringstream os;
  os << "# degree " << s.degree << "\n";
  for (const auto& t : s.terms) os << t.a << ' ' << t.b << "\n";
  return os.str();
}

}  // namespace prodset
