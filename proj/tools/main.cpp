#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "prodset/classify.hpp"
#include "prodset/construct.hpp"
#include "prodset/enumeration.hpp"
#include "prodset/multigraph.hpp"
#include "prodset/survey.hpp"

// Command-line surface: classification, enumeration, construction,
// verification suites and the small-multigraph survey atlas.
//
// Exit codes: 0 ok, 1 usage/parse error, 2 structural/oracle
// disagreement, 3 oracle refused.

namespace {

using namespace prodset;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitRefused = 3;

struct ResolvedInput {
  std::string desc;
  std::optional<TranspSequence> seq;
  std::optional<Multigraph> graph;
  std::optional<std::vector<Permutation>> perm_seq;
  int perm_degree = 0;
};

bool parse_catalog_int(const std::string& token, const std::string& prefix, int& value) {
  if (token.rfind(prefix + ":", 0) != 0) return false;
  try {
    value = std::stoi(token.substr(prefix.size() + 1));
  } catch (...) {
    throw std::domain_error("bad parameter in '" + token + "'");
  }
  return true;
}

ResolvedInput resolve_input(const std::string& token, std::optional<int> degree) {
  ResolvedInput in;
  in.desc = token;
  if (std::filesystem::exists(token)) {
    std::ifstream f(token);
    std::stringstream buffer;
    buffer << f.rdbuf();
    std::string text = buffer.str();
    // sniff: a multigraph file opens with an "n <N>" header
    std::istringstream sniff(text);
    std::string line;
    bool is_graph = false;
    while (std::getline(sniff, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string first;
      if (!(ls >> first)) continue;
      is_graph = (first == "n");
      break;
    }
    std::istringstream contents(text);
    if (is_graph)
      in.graph = Multigraph::parse_text(contents);
    else
      in.seq = parse_sequence_text(contents, degree);
    return in;
  }
  int k = 0;
  if (parse_catalog_int(token, "tau", k)) {
    in.seq = tau(k);
    return in;
  }
  if (parse_catalog_int(token, "sigma", k)) {
    in.seq = sigma(k);
    return in;
  }
  if (parse_catalog_int(token, "bike", k)) {
    in.graph = bike(k);
    return in;
  }
  if (parse_catalog_int(token, "wheel", k)) {
    in.graph = wheel(k);
    return in;
  }
  if (parse_catalog_int(token, "complete", k)) {
    in.graph = complete(k);
    return in;
  }
  for (const auto& name : named_sequence_catalog())
    if (token == name) {
      in.seq = named_sequence(name);
      return in;
    }
  for (const auto& name : named_permutation_catalog())
    if (token == name) {
      in.perm_seq = named_permutation_sequence(name);
      in.perm_degree = in.perm_seq->front().degree();
      return in;
    }
  throw std::domain_error(
      "input '" + token +
      "' is neither a file nor a catalog entry (try tau:N, sigma:N, bike:N, "
      "wheel:N, complete:N, rect, a, b, c, d, e, h4, s34a, s34b)");
}

struct BudgetFlags {
  std::size_t terms = Budget{}.max_terms;
  std::size_t stored = Budget{}.max_stored;
  long long ms = Budget{}.soft_time.count();

  Budget to_budget() const {
    Budget b;
    b.max_terms = terms;
    b.max_stored = stored;
    b.soft_time = std::chrono::milliseconds(ms);
    return b;
  }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags) {
  cmd->add_option("--budget-terms", flags.terms,
                  "term-count cap before the state estimate must fit")
      ->envname("PRODSET_BUDGET_TERMS");
  cmd->add_option("--budget-stored", flags.stored,
                  "cap on permutations stored across memo entries")
      ->envname("PRODSET_BUDGET_STORED");
  cmd->add_option("--budget-ms", flags.ms, "soft wall-clock limit in ms (0 = off)")
      ->envname("PRODSET_BUDGET_MS");
}

int run_classify(const std::string& input, std::optional<int> degree, bool ci_mode,
                 bool structural_only, bool oracle_only, const std::string& format,
                 const Budget& budget) {
  ResolvedInput in = resolve_input(input, degree);
  const bool run_structural = !oracle_only;
  const bool run_oracle = !structural_only;

  ClassificationReport report;
  if (in.perm_seq) {
    if (!ci_mode && structural_only) {
      std::cerr << "structural rules need a transpositional sequence\n";
      return kExitError;
    }
    if (ci_mode) {
      report = classify_ci_perms(*in.perm_seq, in.perm_degree, in.desc, budget);
    } else {
      // completeness of a general permutational sequence: oracle only
      auto prod = enumerate_prod(*in.perm_seq, in.perm_degree, budget);
      report.input = in.desc;
      report.property = "perm-complete";
      if (prod) {
        std::uint64_t half = 1;
        for (int i = 2; i <= in.perm_degree; ++i) half *= i;
        if (in.perm_degree >= 2) half /= 2;
        report.oracle = summarize_oracle(
            *prod, prod->members.size() == half ? OracleVerdict::yes
                                                : OracleVerdict::no);
      } else {
        report.oracle = OracleSummary{};
      }
    }
    if (run_structural)
      std::cerr << "note: structural path skipped for a permutational sequence\n";
  } else {
    TranspSequence seq = in.seq ? *in.seq : in.graph->canonical_sequence();
    report = ci_mode
                 ? classify_ci(seq, in.desc, run_structural, run_oracle, budget)
                 : classify_perm_complete(seq, in.desc, run_structural, run_oracle,
                                          budget);
  }

  std::cout << (format == "json" ? report.to_json() + "\n" : report.to_text());
  if (report.oracle && report.oracle->verdict == OracleVerdict::refused)
    return kExitRefused;
  if (report.agreement && !*report.agreement) return kExitDisagreement;
  return kExitOk;
}

int run_prod(const std::string& input, std::optional<int> degree, std::size_t limit,
             const std::string& format, const Budget& budget) {
  ResolvedInput in = resolve_input(input, degree);
  std::optional<ProdSet> prod;
  if (in.perm_seq)
    prod = enumerate_prod(*in.perm_seq, in.perm_degree, budget);
  else if (in.seq)
    prod = enumerate_prod(*in.seq, budget);
  else
    prod = enumerate_prod(in.graph->canonical_sequence(), budget);
  if (!prod) {
    std::cout << "refused\n";
    return kExitRefused;
  }
  if (format == "json") {
    if (limit > 0 && prod->members.size() > limit)
      prod->members.resize(limit);
    std::cout << prod->to_json() << "\n";
    return kExitOk;
  }
  std::cout << "degree " << prod->degree << "\nparity " << prod->parity_name()
            << "\nsize " << prod->members.size() << "\n";
  std::size_t shown = 0;
  for (const auto& f : prod->members) {
    if (limit > 0 && shown++ >= limit) {
      std::cout << "...\n";
      break;
    }
    std::cout << f.cycle_string() << "\n";
  }
  return kExitOk;
}

int run_find(const std::string& input, const std::string& target,
             std::optional<int> degree, const Budget& budget) {
  ResolvedInput in = resolve_input(input, degree);
  TranspSequence seq = in.seq ? *in.seq : in.graph->canonical_sequence();
  Permutation f = Permutation::parse_cycles(target, seq.degree);
  auto outcome = find_rearrangement(seq, f, budget);
  switch (outcome.status) {
    case FindStatus::found:
      std::cout << "found\n" << sequence_to_text(*outcome.witness);
      return kExitOk;
    case FindStatus::absent:
      std::cout << "absent\n";
      return kExitOk;
    default:
      std::cout << "refused\n";
      return kExitRefused;
  }
}

int run_construct(const std::string& name, const std::string& format) {
  int k = 0;
  auto emit_seq = [&](const TranspSequence& s) {
    if (format == "json") {
      nlohmann::ordered_json j;
      j["degree"] = s.degree;
      auto arr = nlohmann::ordered_json::array();
      for (const auto& t : s.terms) arr.push_back({t.a, t.b});
      j["terms"] = arr;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << sequence_to_text(s);
    }
  };
  auto emit_graph = [&](const Multigraph& g) {
    std::cout << (format == "json" ? g.to_json() + "\n" : g.to_text());
  };
  if (parse_catalog_int(name, "tau", k)) {
    emit_seq(tau(k));
    return kExitOk;
  }
  if (parse_catalog_int(name, "sigma", k)) {
    emit_seq(sigma(k));
    return kExitOk;
  }
  if (parse_catalog_int(name, "nu", k)) {
    auto v = nu(k);
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? " " : "") << v[i];
    std::cout << "\n";
    return kExitOk;
  }
  if (parse_catalog_int(name, "bike", k)) {
    emit_graph(bike(k));
    return kExitOk;
  }
  if (parse_catalog_int(name, "wheel", k)) {
    emit_graph(wheel(k));
    return kExitOk;
  }
  if (parse_catalog_int(name, "complete", k)) {
    emit_graph(complete(k));
    return kExitOk;
  }
  for (const auto& s : named_sequence_catalog())
    if (name == s) {
      emit_seq(named_sequence(name));
      return kExitOk;
    }
  for (const auto& s : named_permutation_catalog())
    if (name == s) {
      auto perms = named_permutation_sequence(name);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["degree"] = perms.front().degree();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& p : perms) arr.push_back(p.cycle_string());
        j["terms"] = arr;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "# degree " << perms.front().degree() << "\n";
        for (const auto& p : perms) std::cout << p.cycle_string() << "\n";
      }
      return kExitOk;
    }
  std::cerr << "unknown construct '" << name << "'\n";
  return kExitError;
}

// ---- verify suites ----------------------------------------------------

struct SuiteReport {
  int passed = 0;
  int failed = 0;
  int refused = 0;
  int reported = 0;

  void line(const std::string& status, const std::string& item,
            const std::string& detail = "") {
    std::cout << status << " " << item;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    if (status == "ok") ++passed;
    else if (status == "FAIL") ++failed;
    else if (status == "refused") ++refused;
    else ++reported;
  }

  int finish() const {
    std::cout << "passed " << passed << ", failed " << failed << ", refused "
              << refused << ", reported " << reported << "\n";
    return failed == 0 ? kExitOk : kExitError;
  }
};

int verify_bikes(int max_n, const Budget& budget) {
  SuiteReport rep;
  for (int k = 0; k <= max_n; ++k) {
    Multigraph g = bike(k);
    const TranspSequence seq = g.canonical_sequence();
    auto pc = perm_complete_bruteforce(seq, budget);
    const std::string item = "bike " + std::to_string(k);
    if (pc == OracleVerdict::refused) {
      rep.line("refused", item);
      continue;
    }
    if (pc != OracleVerdict::yes) {
      rep.line("FAIL", item, "not perm-complete by oracle");
      continue;
    }
    bool minimal = true;
    for (int drop = 0; drop < seq.size() && minimal; ++drop) {
      TranspSequence shorter(seq.degree, {});
      for (int i = 0; i < seq.size(); ++i)
        if (i != drop) shorter.terms.push_back(seq.terms[i]);
      auto sub = perm_complete_bruteforce(shorter, budget);
      if (sub == OracleVerdict::refused) {
        rep.line("refused", item, "deletion check");
        minimal = false;
      } else if (sub == OracleVerdict::yes) {
        rep.line("FAIL", item, "deletion stays perm-complete");
        minimal = false;
      }
    }
    if (minimal) rep.line("ok", item, "perm-complete and minimal");
  }
  return rep.finish();
}

int verify_numbers(int max_n, const Budget& budget) {
  (void)budget;
  SuiteReport rep;
  for (int n = 3; n <= max_n; ++n) {
    // every rearrangement of the path sequence has the split-cycle shape
    {
      auto terms = tau(n).terms;
      std::sort(terms.begin(), terms.end());
      bool ok = true;
      do {
        if (!is_path_product_shape(compose_sequence(terms, n))) ok = false;
      } while (ok && std::next_permutation(terms.begin(), terms.end()));
      rep.line(ok ? "ok" : "FAIL", "path products n=" + std::to_string(n));
    }
    // every rearrangement of the circuit sequence splits into one
    // increasing and one decreasing cycle
    {
      auto terms = sigma(n).terms;
      std::sort(terms.begin(), terms.end());
      bool ok = true;
      do {
        if (!is_circuit_product_shape(compose_sequence(terms, n))) ok = false;
      } while (ok && std::next_permutation(terms.begin(), terms.end()));
      rep.line(ok ? "ok" : "FAIL", "circuit products n=" + std::to_string(n));
    }
    // the realizer hits every target shape exactly
    {
      bool ok = true;
      std::string bad;
      for (std::uint32_t mask = 1; mask + 1 < (1u << n) && ok; ++mask) {
        std::vector<int> h;
        for (int v = 0; v < n; ++v)
          if (mask & (1u << v)) h.push_back(v);
        TranspSequence f = circuit_realizer(h, n);
        if (!f.is_rearrangement_of(sigma(n))) {
          ok = false;
          bad = "not a rearrangement";
          break;
        }
        Permutation expect = Permutation::from_cycle(h, n);
        std::vector<int> comp;
        for (int v = 0; v < n; ++v)
          if (!(mask & (1u << v))) comp.push_back(v);
        expect = expect.then(Permutation::from_cycle(comp, n).inverse());
        if (f.product() != expect) {
          ok = false;
          bad = "wrong product";
        }
      }
      rep.line(ok ? "ok" : "FAIL", "circuit realizer n=" + std::to_string(n), bad);
    }
  }
  return rep.finish();
}

int verify_wheels(int max_n, const Budget& budget) {
  SuiteReport rep;
  for (int n = 3; n <= max_n; ++n) {
    Multigraph g = wheel(n);
    auto pc = perm_complete_bruteforce(g.canonical_sequence(), budget);
    // findings are reported, never asserted
    const std::string item = "wheel " + std::to_string(n);
    if (pc == OracleVerdict::refused)
      rep.line("refused", item);
    else
      rep.line("report", item,
               pc == OracleVerdict::yes ? "perm-complete by oracle"
                                        : "NOT perm-complete by oracle");
  }
  return rep.finish();
}

int verify_named(const Budget& budget) {
  SuiteReport rep;
  for (const std::string name : {"rect", "a", "b", "c", "d"}) {
    TranspSequence seq = named_sequence(name);
    auto pc = perm_complete_bruteforce(seq, budget);
    if (pc == OracleVerdict::refused) {
      rep.line("refused", name, "completeness check over budget");
      continue;
    }
    if (pc != OracleVerdict::yes) {
      rep.line("FAIL", name, "not perm-complete by oracle");
      continue;
    }
    bool minimal = true;
    bool undecided = false;
    for (int drop = 0; drop < seq.size(); ++drop) {
      TranspSequence shorter(seq.degree, {});
      for (int i = 0; i < seq.size(); ++i)
        if (i != drop) shorter.terms.push_back(seq.terms[i]);
      auto sub = perm_complete_bruteforce(shorter, budget);
      if (sub == OracleVerdict::refused) undecided = true;
      if (sub == OracleVerdict::yes) minimal = false;
    }
    if (!minimal)
      rep.line("FAIL", name, "a deletion stays perm-complete");
    else if (undecided)
      rep.line("refused", name, "some deletion checks over budget");
    else
      rep.line("ok", name, "perm-complete and minimal by oracle");
  }
  {
    // the two-block amalgam: structurally not perm-complete
    TranspSequence seq = named_sequence("e");
    auto sv = perm_complete_structural(Multigraph::from_sequence(seq));
    if (sv.answer == Answer::no)
      rep.line("ok", "e", "structurally not perm-complete (rule " + sv.rule + ")");
    else
      rep.line("FAIL", "e", "expected a structural no");
    auto pc = perm_complete_bruteforce(seq, budget);
    if (pc == OracleVerdict::refused)
      rep.line("refused", "e", "oracle over budget");
    else
      rep.line(pc == OracleVerdict::no ? "ok" : "FAIL", "e",
               "oracle completeness check");
  }
  return rep.finish();
}

int run_survey(int max_n, int max_edges, const std::string& out_format,
               const std::string& output, const Budget& budget) {
  auto rows = ::prodset::run_survey(max_n, max_edges, budget);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "cannot open " << output << "\n";
      return kExitError;
    }
    os = &file;
  }
  if (out_format == "csv") *os << SurveyRow::csv_header() << "\n";
  bool disagreement = false;
  for (const auto& row : rows) {
    *os << (out_format == "csv" ? row.to_csv() : row.to_json()) << "\n";
    if (row.disagreement()) {
      std::cerr << "DISAGREEMENT at " << row.id << "\n";
      disagreement = true;
    }
  }
  return disagreement ? kExitDisagreement : kExitOk;
}

int run_count_phi(const std::string& target, int degree, const Budget& budget) {
  Permutation f = Permutation::parse_cycles(target, degree);
  std::cout << "minimal_length " << minimal_factorization_length(f) << "\n";
  auto phi = count_minimal_factorizations(f, budget);
  if (phi.refused) {
    std::cout << "count refused\n";
    return kExitRefused;
  }
  std::cout << "count " << phi.count << "\n";
  return kExitOk;
}

int run_coset(const std::string& input, std::optional<int> degree, const Budget& budget) {
  ResolvedInput in = resolve_input(input, degree);
  TranspSequence seq = in.seq ? *in.seq : in.graph->canonical_sequence();
  auto outcome = coset_check(seq, budget);
  if (outcome.refused) {
    std::cout << "refused\n";
    return kExitRefused;
  }
  if (outcome.order)
    std::cout << "coset of order " << *outcome.order << "\n";
  else
    std::cout << "absent\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transpositional sequences, their multigraphs, and the products "
               "over all rearrangements"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file for any option");

  BudgetFlags budget;

  std::string input, target, format = "text", name;
  std::optional<int> degree;
  bool ci_mode = false, pc_mode = false;
  bool structural_only = false, oracle_only = false, both = false;
  std::size_t limit = 0;
  int max_n = 0, max_edges = 8;
  std::string suite, out_format = "csv", output;

  auto* classify = app.add_subcommand("classify", "classify an input sequence or multigraph");
  classify->add_option("input", input, "file or catalog entry")->required();
  classify->add_flag("--ci", ci_mode, "decide conjugacy invariance");
  classify->add_flag("--pc", pc_mode, "decide permutational completeness (default)");
  classify->add_flag("--structural", structural_only, "structural path only");
  classify->add_flag("--oracle", oracle_only, "oracle path only");
  classify->add_flag("--both", both, "run both paths (default)");
  classify->add_option("--degree", degree, "degree override for sequence files");
  classify->add_option("--format", format, "text or json");
  add_budget_flags(classify, budget);

  auto* prod = app.add_subcommand("prod", "enumerate the product set");
  prod->add_option("input", input, "file or catalog entry")->required();
  prod->add_option("--degree", degree, "degree override for sequence files");
  prod->add_option("--limit", limit, "print at most this many members (0 = all)");
  prod->add_option("--format", format, "text or json");
  add_budget_flags(prod, budget);

  auto* find = app.add_subcommand("find", "find a rearrangement with a given product");
  find->add_option("input", input, "file or catalog entry")->required();
  find->add_option("target", target, "target permutation in cycle notation")->required();
  find->add_option("--degree", degree, "degree override for sequence files");
  add_budget_flags(find, budget);

  auto* construct = app.add_subcommand("construct", "emit a catalog object");
  construct->add_option("name", name,
                        "tau:N sigma:N nu:N bike:N wheel:N complete:N rect a b c d "
                        "e h4 s34a s34b")
      ->required();
  construct->add_option("--format", format, "text or json");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "bikes | numbers | wheels | named")->required();
  verify->add_option("--max-n", max_n, "suite size parameter");
  add_budget_flags(verify, budget);

  auto* survey = app.add_subcommand("survey", "classify all small multigraphs");
  survey->add_option("--max-n", max_n, "largest vertex count (default 5)");
  survey->add_option("--max-edges", max_edges, "total multiplicity cap (default 8)");
  survey->add_option("--out", out_format, "csv or jsonl");
  survey->add_option("--output", output, "output path (default stdout)");
  add_budget_flags(survey, budget);

  auto* phi = app.add_subcommand("count-phi", "count minimal transposition factorizations");
  phi->add_option("target", target, "permutation in cycle notation")->required();
  phi->add_option("--degree", degree, "degree of the permutation")->required();
  add_budget_flags(phi, budget);

  auto* coset = app.add_subcommand("coset", "check whether the product set is a coset");
  coset->add_option("input", input, "file or catalog entry")->required();
  coset->add_option("--degree", degree, "degree override for sequence files");
  add_budget_flags(coset, budget);

  CLI11_PARSE(app, argc, argv);

  try {
    const Budget b = budget.to_budget();
    if (*classify) {
      if (structural_only && oracle_only) {
        std::cerr << "--structural and --oracle are mutually exclusive\n";
        return kExitError;
      }
      if (ci_mode && pc_mode) {
        std::cerr << "--ci and --pc are mutually exclusive\n";
        return kExitError;
      }
      return run_classify(input, degree, ci_mode, structural_only, oracle_only,
                          format, b);
    }
    if (*prod) return run_prod(input, degree, limit, format, b);
    if (*find) return run_find(input, target, degree, b);
    if (*construct) return run_construct(name, format);
    if (*verify) {
      if (suite == "bikes") return verify_bikes(max_n > 0 ? max_n : 3, b);
      if (suite == "numbers") return verify_numbers(max_n > 0 ? max_n : 5, b);
      if (suite == "wheels") return verify_wheels(max_n > 0 ? max_n : 4, b);
      if (suite == "named") return verify_named(b);
      std::cerr << "unknown suite '" << suite << "'\n";
      return kExitError;
    }
    if (*survey) return run_survey(max_n > 0 ? max_n : 5, max_edges, out_format, output, b);
    if (*phi) return run_count_phi(target, degree.value_or(0), b);
    if (*coset) return run_coset(input, degree, b);
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line << ", column " << e.column << ": "
              << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
