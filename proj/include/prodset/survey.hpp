#pragma once

#include <string>
#include <vector>

#include "prodset/classify.hpp"
#include "prodset/multigraph.hpp"

// Small-multigraph atlas: enumerate isomorphism classes, classify each
// one both structurally and by oracle, and emit one row per class.

namespace prodset {

// Connected simple graphs on exactly n vertices, one per isomorphism
// class, ordered by canonical key. n <= 8.
std::vector<Multigraph> connected_simple_graph_classes(int n);

// Connected multigraphs on exactly n vertices with total multiplicity
// <= max_total, one per isomorphism class, ordered by canonical key.
std::vector<Multigraph> connected_multigraph_classes(int n, int max_total);

struct SurveyRow {
  std::string id;  // canonical multigraph id
  int n = 1;
  int total_multiplicity = 0;
  int distinct_edges = 0;
  StructuralVerdict pc_structural;
  OracleVerdict pc_oracle = OracleVerdict::refused;
  StructuralVerdict ci_structural;
  OracleVerdict ci_oracle = OracleVerdict::refused;
  std::uint64_t prod_size = 0;  // 0 when the oracle refused
  std::string parity;
  std::string spectrum;  // "type:count;type:count"

  // true when a decisive structural verdict contradicts the oracle
  bool disagreement() const;

  std::string to_csv() const;
  std::string to_json() const;
  static std::string csv_header();
};

SurveyRow survey_row(const Multigraph& g, const Budget& budget = {});

// Rows for every class with n <= max_n and total multiplicity <=
// max_edges, in canonical order. Rows are computed concurrently and
// emitted deterministically.
std::vector<SurveyRow> run_survey(int max_n, int max_edges, const Budget& budget = {});

}  // namespace prodset
