#include "chowlab/hilbert_covariants.hpp"

#include <map>

#include "chowlab/characters.hpp"
#include "chowlab/error.hpp"

namespace chowlab {

namespace {

void check_order(int order) {
  if (order < 0) fail(Errc::BadRange, "series order must be nonnegative");
}

void check_degree(int d) {
  if (d < 0) fail(Errc::BadRange, "negative degree");
}

}  // namespace

TQSeries ha_series(int d, int order) {
  check_degree(d);
  check_order(order);
  TQSeries s(order);
  for (int m = 0; m <= order; ++m) s.coeff(m) = qnumber(m + 1).pow(static_cast<unsigned>(d));
  return s;
}

TQSeries hb_series(int d, int order) {
  check_degree(d);
  check_order(order);
  TQSeries s(order);
  for (int m = 0; m <= order; ++m) s.coeff(m) = qbinomial(m + d, d);
  return s;
}

TQSeries hm_lambda_series(const Partition& lambda, int order) {
  if (lambda.size() > 8) fail(Errc::TooLarge, "hm_lambda_series is limited to |lambda| <= 8");
  check_order(order);
  TQSeries s(order);
  for (int m = 0; m <= order; ++m) s.coeff(m) = schur_principal(lambda, m);
  return s;
}

bool carlitz_identity_check(int d, int order) {
  const TQSeries lhs = ha_series(d, order) * qpochhammer(d).to_series(order);
  return lhs == carlitz_numerator(d).to_series(order);
}

bool hb_closed_form_check(int d, int order) { return hb_series(d, order) == expand_inv_qpochhammer(d, order); }

bool hm_lambda_identity_check(const Partition& lambda, int order) {
  const TQSeries rhs = syt_numerator(lambda).to_series(order) * expand_inv_qpochhammer(lambda.size(), order);
  return hm_lambda_series(lambda, order) == rhs;
}

bool isotypic_sum_check(int d, int order) {
  TQSeries acc(order);
  for (const auto& lambda : partitions_of(d)) {
    const TQSeries h = hm_lambda_series(lambda, order);
    const QPoly f(static_cast<long>(syt_count(lambda)));
    for (int m = 0; m <= order; ++m) acc.coeff(m) += f * h.coeff(m);
  }
  return acc == ha_series(d, order);
}

int GeneratorTable::max_degree() const { return rows.empty() ? -1 : rows.back().degree; }

std::size_t GeneratorTable::generator_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.tableaux.size();
  return n;
}

GeneratorTable generator_table(const Partition& lambda) {
  if (lambda.size() > 10) fail(Errc::TooLarge, "generator_table is limited to |lambda| <= 10");
  std::map<int, GeneratorRow> by_degree;
  for (auto& t : enumerate_syt(lambda)) {
    const auto s = descent_stats(t);
    auto& row = by_degree[s.des];
    row.degree = s.des;
    row.character.add_term(s.maj, 1);
    row.tableaux.push_back(std::move(t));
  }
  GeneratorTable table{lambda, {}};
  for (auto& [deg, row] : by_degree) table.rows.push_back(std::move(row));
  return table;
}

std::string to_tsv(const GeneratorTable& table) {
  std::string s = "degree\tcharacter\ttableaux\n";
  for (const auto& r : table.rows)
    s += std::to_string(r.degree) + "\t" + to_compact_string(r.character) + "\t" + std::to_string(r.tableaux.size()) + "\n";
  return s;
}

}  // namespace chowlab
