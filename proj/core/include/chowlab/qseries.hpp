#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowlab/combinatorics.hpp"
#include "chowlab/exactla.hpp"

namespace chowlab {

/// Polynomial in q with integer coefficients; zero coefficients are never stored.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long constant);  // NOLINT: integers promote to constant polynomials
  static QPoly monomial(const Integer& coeff, int exponent);

  const std::map<int, Integer>& terms() const noexcept { return terms_; }
  Integer coeff(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const;  // -1 for zero
  Integer at_one() const;

  void add_term(int exponent, const Integer& coeff);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  QPoly pow(unsigned e) const;
  /// Exact division; throws IntegralityViolated if the divisor does not divide.
  QPoly divide_exact(const QPoly& divisor) const;

 private:
  std::map<int, Integer> terms_;
};

/// Truncated power series in t with QPoly coefficients, t^0..t^order.
class TQSeries {
 public:
  explicit TQSeries(int order = 0);
  TQSeries(int order, std::vector<QPoly> coeffs);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const QPoly& coeff(int m) const { return coeffs_.at(static_cast<std::size_t>(m)); }
  QPoly& coeff(int m) { return coeffs_.at(static_cast<std::size_t>(m)); }
  const std::vector<QPoly>& coeffs() const noexcept { return coeffs_; }
  TQSeries truncated(int order) const;

  // Binary operations truncate to the smaller order of the operands.
  friend TQSeries operator+(const TQSeries& a, const TQSeries& b);
  friend TQSeries operator-(const TQSeries& a, const TQSeries& b);
  friend TQSeries operator*(const TQSeries& a, const TQSeries& b);
  friend bool operator==(const TQSeries&, const TQSeries&) = default;

 private:
  std::vector<QPoly> coeffs_;
};

/// Polynomial in t and q, stored by t-degree with trailing zeros trimmed.
class TQPoly {
 public:
  TQPoly() = default;
  explicit TQPoly(std::vector<QPoly> by_t_degree);

  const std::vector<QPoly>& coeffs() const noexcept { return coeffs_; }
  QPoly coeff(int t_degree) const;
  int t_degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  void add(int t_degree, const QPoly& c);
  TQSeries to_series(int order) const;
  /// Substitutes q = 1.
  std::vector<Integer> at_q_one() const;
  /// Substitutes t = 1.
  QPoly at_t_one() const;

  friend TQPoly operator+(const TQPoly& a, const TQPoly& b);
  friend TQPoly operator*(const TQPoly& a, const TQPoly& b);
  friend TQPoly operator*(const QPoly& a, const TQPoly& b);
  friend bool operator==(const TQPoly&, const TQPoly&) = default;

 private:
  void trim();
  std::vector<QPoly> coeffs_;
};

QPoly qnumber(int m);
QPoly qfactorial(int m);
/// Throws BadRange unless 0 <= k <= m.
QPoly qbinomial(int m, int k);

/// 1 / prod_{i=0}^{d} (1 - q^i t), expanded to t^order.
TQSeries expand_inv_qpochhammer(int d, int order);
/// prod_{i=0}^{d} (1 - q^i t).
TQPoly qpochhammer(int d);

/// Sum over S_d of t^des q^maj. Throws TooLarge for d > 9.
TQPoly carlitz_numerator(int d);
/// Sum over SYT(lambda) of t^des q^maj. Throws TooLarge for |lambda| > 10.
TQPoly syt_numerator(const Partition& lambda);

/// "c*q^i" terms, ascending, e.g. "1*q^0 + 2*q^1"; zero prints as "0".
std::string to_string(const QPoly& p);
/// "[...]*t^m" terms, ascending, zero coefficients omitted.
std::string to_string(const TQSeries& s);
/// Compact notation, e.g. "2q+2q^2".
std::string to_compact_string(const QPoly& p);
/// Compact notation, e.g. "1 + t(2q+2q^2) + t^2 q^3".
std::string to_compact_string(const TQPoly& p);

}  // namespace chowlab
