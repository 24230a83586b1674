#pragma once

#include <string>
#include <vector>

#include "chowlab/combinatorics.hpp"
#include "chowlab/qseries.hpp"

namespace chowlab {

/// sum_m ([m+1]_q)^d t^m
TQSeries ha_series(int d, int order);
/// sum_m [m+d choose d]_q t^m
TQSeries hb_series(int d, int order);
/// sum_m s_lambda(1, q, ..., q^m) t^m. Throws TooLarge for |lambda| > 8.
TQSeries hm_lambda_series(const Partition& lambda, int order);

/// ha_series(d) * prod_{i=0}^{d}(1 - q^i t) equals carlitz_numerator(d) to t^order.
bool carlitz_identity_check(int d, int order);
/// hb_series(d) equals the expansion of 1 / prod_{i=0}^{d}(1 - q^i t).
bool hb_closed_form_check(int d, int order);
/// hm_lambda_series equals syt_numerator(lambda) / prod_{i=0}^{d}(1 - q^i t).
bool hm_lambda_identity_check(const Partition& lambda, int order);
/// sum over |lambda| = d of f^lambda * hm_lambda_series(lambda) equals ha_series(d).
bool isotypic_sum_check(int d, int order);

struct GeneratorRow {
  int degree = 0;
  QPoly character;  // sum of q^maj(T) over tableaux T with des(T) = degree
  std::vector<Tableau> tableaux;
};
struct GeneratorTable {
  Partition lambda;
  std::vector<GeneratorRow> rows;  // increasing degree, nonempty rows only

  int max_degree() const;
  std::size_t generator_count() const;
};
/// Throws TooLarge for |lambda| > 10.
GeneratorTable generator_table(const Partition& lambda);
/// Header "degree\tcharacter\ttableaux" then one line per row.
std::string to_tsv(const GeneratorTable& table);

}  // namespace chowlab
