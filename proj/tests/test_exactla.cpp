#include <doctest.h>

#include <random>
#include <sstream>

#include "chowlab/error.hpp"
#include "chowlab/exactla.hpp"

using namespace chowlab;

namespace {

// Textbook Gauss-Jordan over Q, kept independent of the library routines.
std::size_t oracle_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> to_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
  for (const auto& e : m.entries()) out[e.row][e.col] = Rational(e.value);
  return out;
}

// Sparse random matrix with a planted low-rank part so ranks vary.
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> val(-5, 5);
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<std::vector<Integer>> dense(rows, std::vector<Integer>(cols));
  for (auto& row : dense)
    for (auto& x : row)
      if (coin(rng) == 0) x = val(rng);
  if (rows > 2) {
    for (std::size_t c = 0; c < cols; ++c) dense[rows - 1][c] = 2 * dense[0][c] - 3 * dense[1][c];
  }
  return IntMatrix::from_dense(dense);
}

IntMatrix dense(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> d;
  for (auto r : rows) {
    d.emplace_back();
    for (long x : r) d.back().emplace_back(x);
  }
  return IntMatrix::from_dense(d);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("sparse matrix construction sums duplicates and drops zeros") {
  IntMatrix m(2, 2, {{0, 0, 3}, {0, 0, -3}, {1, 1, 2}, {1, 1, 5}});
  CHECK(m.nonzeros() == 1);
  CHECK(m.at(1, 1) == 7);
  CHECK(m.at(0, 0) == 0);
  CHECK(m.transposed().transposed() == m);
}

TEST_CASE("matrix text dump round trips") {
  const IntMatrix m = dense({{1, 0, -4}, {0, 0, 12345678901234567}});
  std::istringstream in(m.dump_string());
  CHECK(IntMatrix::parse(in) == m);
}

TEST_CASE("rank_exact small cases") {
  CHECK(rank_exact(IntMatrix::identity(3)) == 3);
  CHECK(rank_exact(dense({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_exact(IntMatrix(4, 5)) == 0);
}

TEST_CASE("rank_mod_p small cases and prime validation") {
  CHECK(rank_mod_p(dense({{2, 0}, {0, 2}}), 2) == 0);
  CHECK(rank_mod_p(IntMatrix::identity(4), 7) == 4);
  CHECK_THROWS_AS(rank_mod_p(IntMatrix::identity(2), 91), Error);
  try {
    rank_mod_p(IntMatrix::identity(2), 91);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPrime);
  }
}

TEST_CASE("kernel_basis small cases") {
  const auto k = kernel_basis(dense({{1, 1}}), Rationals{});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Integer>{1, -1});
  CHECK(kernel_basis(IntMatrix::identity(3), Rationals{}).empty());
  CHECK_THROWS_AS(kernel_basis(IntMatrix::identity(2), PrimeField{10}), Error);
}

TEST_CASE("solve_linear") {
  const std::vector<Rational> rhs{1, 2};
  CHECK(solve_linear(IntMatrix::identity(2), rhs).solution == rhs);

  const std::vector<Rational> rhs2{10, 29};
  const auto r = solve_linear(dense({{1, 1}, {5, 2}}), rhs2);
  CHECK(r.solution == std::vector<Rational>{3, 7});
  CHECK_FALSE(r.underdetermined);

  const IntMatrix singular = dense({{1, 2}, {2, 4}});
  const std::vector<Rational> ok{3, 6};
  const auto u = solve_linear(singular, ok);
  CHECK(u.underdetermined);
  CHECK(singular.apply(std::span<const Rational>(u.solution)) == ok);

  const std::vector<Rational> bad{1, 3};
  try {
    solve_linear(singular, bad);
    FAIL("expected Inconsistent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Inconsistent);
  }
}

TEST_CASE("integer_rows clears denominators per row") {
  const IntMatrix m = integer_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(2), Rational(0)}});
  CHECK(m.at(0, 0) == 3);
  CHECK(m.at(0, 1) == 2);
  CHECK(m.at(1, 0) == 2);
}

TEST_CASE("property: exact rank agrees with an independent elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
    const IntMatrix m = random_matrix(rng, rows, cols);
    CAPTURE(m.dump_string());
    CHECK(rank_exact(m) == oracle_rank(to_rational(m)));
  }
}

TEST_CASE("property: rank plus nullity equals columns, kernels are annihilated") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = random_matrix(rng, 1 + rng() % 8, 1 + rng() % 8);
    const auto ker = kernel_basis(m, Rationals{});
    CHECK(rank_exact(m) + ker.size() == m.cols());
    for (const auto& v : ker) {
      for (const auto& x : m.apply(std::span<const Integer>(v))) CHECK(x == 0);
      Integer g = 0;
      for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      CHECK(g == 1);
    }
    if (!ker.empty()) {
      std::vector<std::vector<Rational>> rows;
      for (const auto& v : ker) {
        rows.emplace_back();
        for (const auto& x : v) rows.back().emplace_back(x);
      }
      CHECK(oracle_rank(rows) == ker.size());
    }
  }
}

TEST_CASE("property: modular rank is a lower bound and matches for random large primes") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix m = random_matrix(rng, 2 + rng() % 10, 2 + rng() % 10);
    const std::size_t exact = rank_exact(m);
    CHECK(rank_mod_p(m, 2) <= exact);
    CHECK(rank_mod_p(m, 3) <= exact);
    bool matched = false;
    for (int i = 0; i < 5; ++i) {
      const std::uint64_t p = random_prime(rng);
      const std::size_t r = rank_mod_p(m, p);
      CHECK(r <= exact);
      matched = matched || r == exact;
    }
    CHECK(matched);
    const auto cert = rank_multi_modular(m, 3, trial);
    CHECK(cert.rank == exact);
    CHECK(cert.primes.size() == 3);
  }
}

TEST_CASE("property: modular kernels are annihilated mod p") {
  std::mt19937_64 rng(14);
  const std::uint64_t p = 1000003;
  for (int trial = 0; trial < 20; ++trial) {
    const IntMatrix m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7);
    const auto ker = kernel_basis(m, PrimeField{p});
    CHECK(rank_mod_p(m, p) + ker.size() == m.cols());
    for (const auto& v : ker)
      for (const auto& x : m.apply(std::span<const Integer>(v))) {
        Integer r = x % Integer(p);
        CHECK(r == 0);
      }
  }
}

TEST_CASE("block decomposition covers every nonzero once") {
  const IntMatrix m = dense({{1, 0, 0, 2}, {0, 0, 0, 0}, {0, 3, 0, 0}, {4, 0, 0, 0}});
  const auto b = connected_blocks(m);
  CHECK(b.blocks.size() == 2);
  CHECK(b.empty_rows == std::vector<std::size_t>{1});
  CHECK(b.empty_cols == std::vector<std::size_t>{2});
}

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(1000000007));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));
  std::mt19937_64 rng(3);
  const auto p = random_prime(rng);
  CHECK(is_prime_u64(p));
  CHECK((p >> 59) == 1);
}
