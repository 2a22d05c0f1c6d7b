#include "prodset/survey.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace prodset {

std::vector<Multigraph> connected_simple_graph_classes(int n) {
  if (n < 1 || n > 8) throw std::domain_error("simple graph classes need 1 <= n <= 8");
  std::vector<Transposition> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  const int np = static_cast<int>(pairs.size());
  std::map<std::vector<int>, Multigraph> classes;
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    Multigraph g(n);
    for (int i = 0; i < np; ++i)
      if (mask & (1u << i)) g.add_edge(pairs[i].a, pairs[i].b);
    if (!g.is_connected()) continue;
    auto key = g.canonical_key();
    if (!classes.count(key)) classes.emplace(std::move(key), g.canonical_form());
  }
  std::vector<Multigraph> out;
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

namespace {

// All multiplicity vectors >= 1 per edge with a total budget, appended
// onto `base` edgewise.
void assign_multiplicities(const Multigraph& base,
                           const std::vector<Transposition>& edges, std::size_t idx,
                           int budget_left, std::vector<int>& current,
                           std::map<std::vector<int>, Multigraph>& classes) {
  if (idx == edges.size()) {
    Multigraph g(base.vertex_count());
    for (std::size_t i = 0; i < edges.size(); ++i)
      g.add_edge(edges[i].a, edges[i].b, current[i]);
    auto key = g.canonical_key();
    if (!classes.count(key)) classes.emplace(std::move(key), g.canonical_form());
    return;
  }
  const int remaining_edges = static_cast<int>(edges.size() - idx) - 1;
  for (int m = 1; m + remaining_edges <= budget_left; ++m) {
    current[idx] = m;
    assign_multiplicities(base, edges, idx + 1, budget_left - m, current, classes);
  }
}

}  // namespace

std::vector<Multigraph> connected_multigraph_classes(int n, int max_total) {
  std::map<std::vector<int>, Multigraph> classes;
  for (const auto& simple : connected_simple_graph_classes(n)) {
    std::vector<Transposition> edges;
    for (const auto& [e, m] : simple.edges()) edges.push_back(e);
    if (static_cast<int>(edges.size()) > max_total) continue;
    if (edges.empty()) {
      // n == 1: the one-vertex multigraph
      auto key = simple.canonical_key();
      if (!classes.count(key)) classes.emplace(std::move(key), simple);
      continue;
    }
    std::vector<int> current(edges.size(), 1);
    assign_multiplicities(simple, edges, 0, max_total, current, classes);
  }
  std::vector<Multigraph> out;
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

bool SurveyRow::disagreement() const {
  const bool pc_bad =
      pc_structural.answer != Answer::unknown && pc_oracle != OracleVerdict::refused &&
      (pc_structural.answer == Answer::yes) != (pc_oracle == OracleVerdict::yes);
  const bool ci_bad =
      ci_structural.answer != Answer::unknown && ci_oracle != OracleVerdict::refused &&
      (ci_structural.answer == Answer::yes) != (ci_oracle == OracleVerdict::yes);
  return pc_bad || ci_bad;
}

std::string SurveyRow::csv_header() {
  return "# prodset-survey v1\n"
         "id,n,total_multiplicity,distinct_edges,pc_structural,pc_rule,pc_oracle,"
         "ci_structural,ci_rule,ci_oracle,prod_size,parity,spectrum";
}

std::string SurveyRow::to_csv() const {
  std::ostringstream os;
  os << id << ',' << n << ',' << total_multiplicity << ',' << distinct_edges << ','
     << to_string(pc_structural.answer) << ',' << pc_structural.rule << ','
     << to_string(pc_oracle) << ',' << to_string(ci_structural.answer) << ','
     << ci_structural.rule << ',' << to_string(ci_oracle) << ',';
  if (pc_oracle == OracleVerdict::refused)
    os << "refused";
  else
    os << prod_size;
  os << ',' << parity << ',' << spectrum;
  return os.str();
}

std::string SurveyRow::to_json() const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["n"] = n;
  j["total_multiplicity"] = total_multiplicity;
  j["distinct_edges"] = distinct_edges;
  j["pc_structural"] = to_string(pc_structural.answer);
  j["pc_rule"] = pc_structural.rule;
  j["pc_oracle"] = to_string(pc_oracle);
  j["ci_structural"] = to_string(ci_structural.answer);
  j["ci_rule"] = ci_structural.rule;
  j["ci_oracle"] = to_string(ci_oracle);
  if (pc_oracle == OracleVerdict::refused)
    j["prod_size"] = "refused";
  else
    j["prod_size"] = prod_size;
  j["parity"] = parity;
  j["spectrum"] = spectrum;
  return j.dump();
}

SurveyRow survey_row(const Multigraph& g, const Budget& budget) {
  SurveyRow row;
  row.id = g.canonical_id();
  row.n = g.vertex_count();
  row.total_multiplicity = g.total_multiplicity();
  row.distinct_edges = g.distinct_edge_count();
  const TranspSequence seq = g.canonical_sequence();
  row.pc_structural = perm_complete_structural(g);
  row.ci_structural = ci_structural(seq);
  auto prod = enumerate_prod(seq, budget);
  if (!prod) {
    row.pc_oracle = OracleVerdict::refused;
    row.ci_oracle = OracleVerdict::refused;
    row.parity = "refused";
    row.spectrum = "refused";
    return row;
  }
  const std::uint64_t half =
      row.n <= 1 ? 1 : [&] {
        std::uint64_t f = 1;
        for (int i = 2; i <= row.n; ++i) f *= i;
        return f / 2;
      }();
  row.pc_oracle =
      prod->members.size() == half ? OracleVerdict::yes : OracleVerdict::no;
  std::map<CycleType, std::uint64_t> spectrum;
  for (const auto& f : prod->members) ++spectrum[f.cycle_type()];
  row.ci_oracle = spectrum.size() <= 1 ? OracleVerdict::yes : OracleVerdict::no;
  row.prod_size = prod->members.size();
  row.parity = prod->parity_name();
  std::ostringstream spec;
  bool first = true;
  for (const auto& [type, count] : spectrum) {
    if (!first) spec << ';';
    spec << type.to_string() << ':' << count;
    first = false;
  }
  row.spectrum = spec.str();
  return row;
}

std::vector<SurveyRow> run_survey(int max_n, int max_edges, const Budget& budget) {
  std::vector<Multigraph> inputs;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : connected_multigraph_classes(n, max_edges))
      inputs.push_back(std::move(g));

  std::vector<SurveyRow> rows(inputs.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(),
                            static_cast<unsigned>(inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= inputs.size()) return;
        rows[i] = survey_row(inputs[i], budget);
      }
    });
  }
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace prodset
