#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chowlab/polynomial.hpp"

namespace chowlab {

/// Graded quotient of the polynomial ring in `nvars` variables by
/// homogeneous relations. Supported: no relations, monomial relations only,
/// or one arbitrary relation in at most three variables.
struct GradedRingSpec {
  int nvars = 0;
  std::vector<Poly> relations;

  static GradedRingSpec polynomial_ring(int nvars) { return {nvars, {}}; }
};

/// Standard monomials spanning R_degree, in increasing lexicographic order.
/// Throws RelationReductionUnsupported outside the supported cases.
std::vector<ExponentVector> graded_piece_basis(const GradedRingSpec& ring, int degree);

/// Homology of lambda^(i+1)(R_n) x R_((d-i-1)n) -> lambda^i(R_n) x R_((d-i)n)
/// -> lambda^(i-1)(R_n) x R_((d-i+1)n) at the middle term.
struct KoszulHomology {
  int n = 0, i = 0, d = 0;
  std::size_t dim_middle = 0;
  std::size_t rank_in = 0;   // from the (i+1)-st term
  std::size_t rank_out = 0;  // to the (i-1)-st term
  std::size_t dim = 0;
  bool exact = true;  // ranks computed over Q rather than by modular certificate
  bool composition_zero = false;
};

/// Ranks are exact when every term has dimension <= exact_limit, otherwise
/// taken from two random 60-bit primes that must agree. Throws TooLarge and
/// NegativeHomology.
KoszulHomology koszul_tor(const GradedRingSpec& ring, int n, int i, int d, std::uint64_t seed = 1,
                          std::size_t exact_limit = 400);
std::size_t koszul_tor_dim(const GradedRingSpec& ring, int n, int i, int d, std::uint64_t seed = 1);

/// dim lambda^i(R_n) x R_((d-i)n)
std::size_t koszul_term_dim(const GradedRingSpec& ring, int n, int i, int d);
/// sum_i (-1)^i dim of the terms equals sum_i (-1)^i dim Tor_i, over all i.
bool euler_characteristic_check(const GradedRingSpec& ring, int n, int d, std::uint64_t seed = 1);

struct TorTable {
  int i = 0, d = 0;
  std::map<int, std::size_t> dims;  // n -> dimension
};
TorTable tor_table(const GradedRingSpec& ring, int i, int d, int n_min, int n_max, std::uint64_t seed = 1);
/// Header "n\tdim" then one line per n.
std::string to_tsv(const TorTable& table);

struct GrowthReport {
  std::vector<Rational> coefficients;  // of 1, n, n^2, ...
  int degree = -1;                     // -1 when the tail is identically zero
  int bound = 0;                       // (nvars - 1) * d
  bool bound_ok = false;
  int onset = 0;                       // first n of the fitted tail
  std::string polynomial;

  Rational leading_coefficient() const;
};
/// Fits the minimal-degree polynomial through the longest suffix of the table
/// whose (bound+1)-st differences vanish. Throws BadRange when the table has
/// fewer than bound + 3 points and NoStabilization when no suffix of at least
/// bound + 2 points fits.
GrowthReport polynomial_growth_check(const GradedRingSpec& ring, const TorTable& table);
GrowthReport polynomial_growth_check(const GradedRingSpec& ring, int i, int d, int n_min, int n_max,
                                     std::uint64_t seed = 1);

}  // namespace chowlab
