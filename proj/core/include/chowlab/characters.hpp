#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowlab/combinatorics.hpp"
#include "chowlab/exactla.hpp"
#include "chowlab/qseries.hpp"

namespace chowlab {

using ExponentVector = std::vector<int>;

/// Integer polynomial in k variables, intended to hold GL_k characters.
/// Symmetry and homogeneity are properties checked on demand, not enforced.
class SymPoly {
 public:
  explicit SymPoly(int nvars = 0);

  int nvars() const noexcept { return nvars_; }
  const std::map<ExponentVector, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(const ExponentVector& e) const;
  void add_term(const ExponentVector& e, const Integer& c);

  bool is_symmetric() const;
  bool is_homogeneous() const;
  int degree() const;  // total degree of the terms, -1 for zero
  Integer at_ones() const;
  /// x_i -> q^(i-1)
  QPoly principal_specialization() const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Integer& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  /// Divides every coefficient by c; throws IntegralityViolated otherwise.
  SymPoly divide_exact(const Integer& c) const;

 private:
  int nvars_ = 0;
  std::map<ExponentVector, Integer> terms_;
};

/// All exponent vectors of length k summing to d, in lexicographically
/// decreasing order.
std::vector<ExponentVector> compositions(int d, int k);

/// Sum over semistandard tableaux of shape lambda with entries <= k; zero if
/// lambda has more than k parts.
SymPoly schur_poly(const Partition& lambda, int k);
/// dim S_lambda(C^k) by the product formula.
Integer weyl_dim(const Partition& lambda, int k);
/// s_lambda(1, q, ..., q^m).
QPoly schur_principal(const Partition& lambda, int m);

/// Character of Sym^m(Sym^d C^k). Throws TooLarge past the monomial guard.
SymPoly sym_of_sym_char(int m, int d, int k);
/// Character of the i-th exterior power of Sym^m C^k.
SymPoly wedge_of_sym_char(int i, int m, int k);

struct Decomposition {
  std::vector<std::pair<Partition, Integer>> terms;  // reverse-lex order
  bool is_virtual = false;                            // some multiplicity < 0

  Integer multiplicity(const Partition& lambda) const;
  /// One "lambda : multiplicity" line per constituent.
  std::string to_string() const;
};
/// Throws NotSymmetric / NotHomogeneous.
Decomposition schur_decompose(const SymPoly& p);

struct FoulkesWitness {
  Partition lambda;
  Integer inner;  // multiplicity in Sym^m(Sym^d)
  Integer outer;  // multiplicity in Sym^d(Sym^m)
};
struct FoulkesReport {
  int m = 0;
  int d = 0;
  int nvars = 0;
  bool contained = false;
  std::vector<FoulkesWitness> witnesses;
};
/// Compares Sym^m(Sym^d) against Sym^d(Sym^m) in d variables; requires d >= m.
FoulkesReport foulkes_check(int m, int d);

/// Sym^a(Sym^b C^2) == Sym^b(Sym^a C^2) as characters.
bool hermite_check(int a, int b);

}  // namespace chowlab
