#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "chowlab/exactla.hpp"

namespace chowlab {

using ExponentVector = std::vector<int>;

/// Multivariate polynomial with rational coefficients in a fixed number of
/// variables. Zero coefficients are never stored.
class Poly {
 public:
  explicit Poly(int nvars = 0);

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);
  static Poly monomial(const ExponentVector& e, const Rational& c = 1);

  int nvars() const noexcept { return nvars_; }
  const std::map<ExponentVector, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const ExponentVector& e) const;
  void add_term(const ExponentVector& e, const Rational& c);

  int degree() const;  // -1 for zero
  bool is_homogeneous() const;

  Poly derivative(int var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes images[i] for variable i; all images share one variable count.
  Poly compose(const std::vector<Poly>& images) const;
  Poly pow(unsigned e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Variables are named by `names` when given, x0, x1, ... otherwise.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  std::map<ExponentVector, Rational> terms_;
};

/// Determinant of a square matrix of polynomials by Laplace expansion.
Poly determinant(const std::vector<std::vector<Poly>>& m);

}  // namespace chowlab
