#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "chowlab/polynomial.hpp"

namespace chowlab {

/// Homogeneous form of a fixed degree in nvars variables.
class Form {
 public:
  Form(int nvars, int degree);
  /// Throws NotHomogeneous unless every term of p has the given degree.
  Form(Poly p, int degree);

  int nvars() const noexcept { return poly_.nvars(); }
  int degree() const noexcept { return degree_; }
  const Poly& poly() const noexcept { return poly_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }
  Rational coeff(const ExponentVector& e) const { return poly_.coeff(e); }
  void set_coeff(const ExponentVector& e, const Rational& c);

  friend bool operator==(const Form&, const Form&) = default;

 private:
  Poly poly_;
  int degree_ = 0;
};

/// Coefficients of l = c_0 x_0 + ... + c_n x_n.
using LinearForm = std::vector<Rational>;

/// Form JSON: object mapping "a0,a1,...,an" to a rational string "p/q".
/// Throws ParseError on malformed input.
Form form_from_json(std::string_view json);
std::string form_to_json(const Form& f);

Form expand_product(const std::vector<LinearForm>& forms);

/// Random linear form with small integer numerators and denominators.
LinearForm random_linear_form(std::mt19937_64& rng, int nvars, int bound = 9);

struct EMatrixReport {
  int d = 0;
  Poly determinant;
  Rational leading_term_coefficient;  // of v1^(d-1) v2^(d-2) ... v_{d-1}
};
/// Expands det M for the d x d matrix with entry (k, i) = e_k of the v's
/// omitting v_i. Throws TooLarge for d > 5.
EMatrixReport e_matrix_det_check(int d);

/// Recovers the forms l_i = x_0 + v1[i] x_1 + sum_{j>=2} v_j^(i) x_j with
/// product F. Throws SingularM on repeated v1 values and Inconsistent when F
/// is not such a product.
std::vector<LinearForm> recover_coordinates(int d, int n, const std::vector<Rational>& v1, const Form& f);

/// Ternary cubic monomials (exponents of x, y, z) in lexicographically
/// increasing order: 003, 012, 021, 030, 102, 111, 120, 201, 210, 300.
const std::vector<ExponentVector>& cubic_monomials();
std::vector<Rational> cubic_coefficients(const Form& f);
Form cubic_from_coefficients(const std::vector<Rational>& a);

/// Determinant of the matrix of second partials. Throws BadShape unless f
/// is a ternary cubic.
Form hessian_cubic(const Form& f);
/// f is proportional to its Hessian. Throws ZeroForm for f = 0.
bool aronhold_test(const Form& f);

/// Entry of the d2 matrix: coeff * a_var, with var indexing cubic_monomials().
struct D2Entry {
  int coeff = 0;
  int var = -1;
};
struct D2Matrix {
  std::array<std::array<D2Entry, 10>, 10> entries{};

  std::vector<std::vector<Rational>> evaluate(const std::vector<Rational>& a) const;
  /// Entries as polynomials in the ten coefficient variables.
  std::vector<std::vector<Poly>> symbolic() const;
  bool is_skew() const;
};
D2Matrix d2_matrix();
/// The matrix variables are the coordinates of the cubic written as
/// f = sum 3!/(a!b!c!) a_abc x^a y^b z^c; this returns them for a given f.
std::vector<Rational> d2_coordinates(const Form& f);
std::size_t d2_rank(const std::vector<Rational>& a);

struct Syzygy {
  std::vector<int> var;              // entry i is scalar[i] * generator[var[i]]
  std::vector<Rational> scalar;
};
struct ComplexReport {
  bool skew = false;
  Syzygy linear;   // rows of d1 built from the a's
  Syzygy hessian;  // rows of d1 built from the Hessian coefficients
  bool composition_zero = false;
  std::size_t generic_rank = 0;
  std::vector<std::size_t> decomposable_ranks;
  bool passed = false;
};
/// Throws CheckFailed naming the failing sub-check.
ComplexReport complex_checks(std::uint64_t seed = 1);

}  // namespace chowlab
