#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chowlab/characters.hpp"
#include "chowlab/exactla.hpp"

namespace chowlab {

/// Monomial z_{a_1} ... z_{a_m} of the coordinate ring of degree-d forms:
/// a sorted multiset of m exponent vectors, each summing to d.
using DomainBasisElt = std::vector<ExponentVector>;
/// S_d-orbit of a monomial in the d sets of variables u^(i)_j, represented by
/// its d exponent rows (each summing to m) in descending lexicographic order.
using CodomainBasisElt = std::vector<ExponentVector>;
/// Monomial prod_i prod_j (u^(i)_j)^E[i][j] as its d x (n+1) exponent matrix.
using FactorMonomial = std::vector<ExponentVector>;

/// Image of z_alpha: sum over words b in {0..n}^d with content alpha of
/// u^(1)_{b_1} ... u^(d)_{b_d}. Throws BadDegree unless |alpha| = d.
std::map<FactorMonomial, Integer> mu_sharp_generator(const ExponentVector& alpha, int d, int n);

/// Matrix of the degree-m Foulkes-Howe map: rows index codomain orbits,
/// columns index domain monomials, entries are the coefficient of the
/// orbit's canonical monomial in the expanded product.
struct FHMatrix {
  int d = 0;
  int n = 0;
  int m = 0;
  std::vector<DomainBasisElt> domain;
  std::vector<CodomainBasisElt> codomain;
  IntMatrix matrix;
};

std::vector<DomainBasisElt> fh_domain_basis(int d, int n, int m);
std::vector<CodomainBasisElt> fh_codomain_basis(int d, int n, int m);
Integer fh_domain_dim(int d, int n, int m);
Integer fh_codomain_dim(int d, int n, int m);

/// Throws TooLarge when the expansion exceeds the work guard.
FHMatrix fh_matrix(int d, int n, int m);

struct FHReport {
  int d = 0, n = 0, m = 0;
  std::size_t dim_domain = 0;
  std::size_t dim_codomain = 0;
  std::size_t rank = 0;
  std::size_t dim_J = 0;      // degree-m equations of the Chow variety
  std::size_t dim_coker = 0;  // degree-m piece of the obstruction module
  bool modular = false;       // rank from a multi-prime certificate
  bool full_rank_certified = false;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> prime_ranks;
};

/// Exact rank when min(rows, cols) <= exact_limit, otherwise the maximum over
/// at least three random 60-bit primes.
FHReport fh_analysis(const FHMatrix& fh, std::uint64_t seed = 1, std::size_t exact_limit = 800,
                     std::size_t prime_count = 3);
FHReport fh_analysis(int d, int n, int m, std::uint64_t seed = 1);

/// Kernel of the map reduced mod p (equations in characteristic p).
std::vector<std::vector<Integer>> fh_kernel_mod_p(int d, int n, int m, std::uint64_t p);

/// Renders a domain vector as a polynomial in the z variables, e.g.
/// "z200*z011^2 + z011*z101*z110".
std::string domain_vector_to_string(const std::vector<DomainBasisElt>& domain,
                                    const std::vector<Integer>& v);
std::string z_name(const ExponentVector& alpha);

/// Number of distinct row permutations of a codomain element.
Integer orbit_size(const CodomainBasisElt& rows);

}  // namespace chowlab
