#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace chowlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a reduced rational with positive denominator.
Rational make_rational(const Integer& num, const Integer& den);
/// Parses "p/q" or "p"; throws ParseError.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;
};

/// Exact integer matrix in coordinate-triplet form. Entries are kept sorted by
/// (row, col) with no explicit zeros; duplicate triplets are summed on
/// construction.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> triplets);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_dense(const std::vector<std::vector<Integer>>& dense);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }
  std::span<const MatrixEntry> entries() const noexcept { return entries_; }

  Integer at(std::size_t row, std::size_t col) const;
  std::vector<std::vector<Integer>> to_dense() const;
  IntMatrix transposed() const;

  std::vector<Integer> apply(std::span<const Integer> v) const;
  std::vector<Rational> apply(std::span<const Rational> v) const;
  IntMatrix multiply(const IntMatrix& rhs) const;
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Submatrix on the given (sorted or unsorted) index lists, reindexed 0..k-1
  /// in list order.
  IntMatrix submatrix(std::span<const std::size_t> row_ids,
                      std::span<const std::size_t> col_ids) const;

  /// Text dump: "ROWS COLS" then "row col value" per nonzero, row-major.
  void dump(std::ostream& os) const;
  std::string dump_string() const;
  static IntMatrix parse(std::istream& is);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

/// Connected components of the bipartite row/column incidence graph. A matrix
/// is block diagonal (after permutation) along these blocks, so ranks and
/// kernels split over them. Empty rows and columns are reported separately.
struct MatrixBlock {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};
struct BlockDecomposition {
  std::vector<MatrixBlock> blocks;
  std::vector<std::size_t> empty_rows;
  std::vector<std::size_t> empty_cols;
};
BlockDecomposition connected_blocks(const IntMatrix& m);

bool is_prime_u64(std::uint64_t n);
/// Uniform random prime in [2^(bits-1), 2^bits).
std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits = 60);

/// Rank over the rationals. Blocks are eliminated fraction-free (Bareiss).
std::size_t rank_exact(const IntMatrix& m);
/// Rank of the reduction modulo p. Requires p prime and p < 2^62.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Multi-prime rank certificate: the maximum of the modular ranks is a lower
/// bound for the rational rank and equals it for all but finitely many primes.
struct ModularRank {
  std::size_t rank = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::size_t> ranks;
  bool agree = true;  // all primes gave the same rank
  /// rank == min(rows, cols): a full-rank certificate, hence exact.
  bool full_rank = false;
};
ModularRank rank_multi_modular(const IntMatrix& m, std::size_t prime_count, std::uint64_t seed);

struct Rationals {};
struct PrimeField {
  std::uint64_t p = 0;
};
using Field = std::variant<Rationals, PrimeField>;

/// Basis of the right null space. Over Q vectors are integral with content 1
/// and a positive first nonzero entry; over F_p entries lie in [0, p) and the
/// first nonzero entry is 1. Vectors are ordered by their leading free column.
std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m, const Field& field);

struct SolveResult {
  std::vector<Rational> solution;
  bool underdetermined = false;
};
/// One solution of m x = rhs. Throws Inconsistent when none exists; free
/// variables are set to zero and the result is flagged underdetermined.
SolveResult solve_linear(const IntMatrix& m, std::span<const Rational> rhs);

/// Clears denominators row by row so that rational systems can reuse the
/// integer routines. Row scaling preserves ranks and kernels.
IntMatrix integer_rows(const std::vector<std::vector<Rational>>& dense);

}  // namespace chowlab
