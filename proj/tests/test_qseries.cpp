#include <doctest.h>

#include <random>

#include "chowlab/combinatorics.hpp"
#include "chowlab/error.hpp"
#include "chowlab/qseries.hpp"

using namespace chowlab;

namespace {

QPoly q(std::initializer_list<long> coeffs) {
  QPoly p;
  int e = 0;
  for (long c : coeffs) p.add_term(e++, c);
  return p;
}

// h_d(1, q, ..., q^m) by direct enumeration of weakly increasing index words.
QPoly complete_homogeneous_principal(int d, int m) {
  QPoly out;
  std::vector<int> word(static_cast<std::size_t>(d), 0);
  std::function<void(int, int, int)> rec = [&](int pos, int lo, int weight) {
    if (pos == d) {
      out.add_term(weight, 1);
      return;
    }
    for (int v = lo; v <= m; ++v) rec(pos + 1, v, weight + v);
  };
  rec(0, 0, 0);
  return out;
}

QPoly random_qpoly(std::mt19937_64& rng) {
  QPoly p;
  const int terms = static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i) p.add_term(static_cast<int>(rng() % 5), static_cast<long>(rng() % 7) - 3);
  return p;
}

TQSeries random_series(std::mt19937_64& rng, int order) {
  TQSeries s(order);
  for (int m = 0; m <= order; ++m) s.coeff(m) = random_qpoly(rng);
  return s;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

TEST_CASE("q-numbers, factorials and binomials") {
  CHECK(qnumber(3) == q({1, 1, 1}));
  CHECK(qfactorial(3) == q({1, 2, 2, 1}));
  CHECK(qbinomial(3, 2) == q({1, 1, 1}));
  CHECK(qbinomial(4, 2) == q({1, 1, 2, 1, 1}));
  for (int m = 0; m <= 10; ++m)
    for (int k = 0; k <= m; ++k) CHECK(qbinomial(m, k).at_one() == binomial(m, k));
  CHECK_THROWS_AS(qbinomial(2, 3), Error);
  CHECK_THROWS_AS(qbinomial(2, -1), Error);
}

TEST_CASE("exact division") {
  CHECK(qfactorial(5).divide_exact(qfactorial(3)) == qnumber(4) * qnumber(5));
  try {
    qnumber(3).divide_exact(q({1, 1}));
    FAIL("expected IntegralityViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IntegralityViolated);
  }
}

TEST_CASE("inverse q-Pochhammer expansion") {
  const auto s0 = expand_inv_qpochhammer(0, 6);
  for (int m = 0; m <= 6; ++m) CHECK(s0.coeff(m) == QPoly(1));
  CHECK(expand_inv_qpochhammer(1, 4).coeff(2) == q({1, 1, 1}));
  for (int d = 0; d <= 4; ++d) {
    const auto s = expand_inv_qpochhammer(d, 6);
    for (int m = 0; m <= 6; ++m) {
      CHECK(s.coeff(m) == complete_homogeneous_principal(d, m));
      CHECK(s.coeff(m) == qbinomial(m + d, d));
    }
  }
}

TEST_CASE("Pochhammer product times its inverse is one") {
  for (int d = 0; d <= 5; ++d) {
    const auto prod = qpochhammer(d).to_series(8) * expand_inv_qpochhammer(d, 8);
    CHECK(prod == TQPoly({QPoly(1)}).to_series(8));
  }
}

TEST_CASE("carlitz_numerator") {
  CHECK(carlitz_numerator(1) == TQPoly({QPoly(1)}));
  CHECK(to_compact_string(carlitz_numerator(3)) == "1 + t(2q+2q^2) + t^2 q^3");
  CHECK(carlitz_numerator(3) == TQPoly({QPoly(1), q({0, 2, 2}), q({0, 0, 0, 1})}));
  CHECK_THROWS_AS(carlitz_numerator(10), Error);
}

TEST_CASE("Carlitz numerator specializes to Eulerian numbers and q-factorials") {
  for (int d = 1; d <= 7; ++d) {
    const TQPoly c = carlitz_numerator(d);
    CHECK(c.t_degree() == d - 1);
    CHECK(c.at_t_one() == qfactorial(d));
    // Eulerian numbers from the recurrence A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1).
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(d + 1), std::vector<Integer>(static_cast<std::size_t>(d + 1)));
    a[1][0] = 1;
    for (int n = 2; n <= d; ++n)
      for (int k = 0; k < n; ++k) {
        a[n][k] = (k + 1) * a[n - 1][k];
        if (k) a[n][k] += (n - k) * a[n - 1][k - 1];
      }
    const auto eulerian = c.at_q_one();
    for (int k = 0; k < d; ++k) CHECK(eulerian[static_cast<std::size_t>(k)] == a[d][k]);
  }
}

TEST_CASE("syt_numerator") {
  CHECK(syt_numerator(Partition({4})) == TQPoly({QPoly(1)}));
  CHECK(syt_numerator(Partition({2, 1})) == TQPoly({QPoly(), q({0, 1, 1})}));
  for (int d = 1; d <= 6; ++d) {
    TQPoly sum;
    for (const auto& l : partitions_of(d))
      sum = sum + QPoly(static_cast<long>(syt_count(l))) * syt_numerator(l);
    CHECK(sum == carlitz_numerator(d));
  }
  CHECK_THROWS_AS(syt_numerator(Partition({11})), Error);
}

TEST_CASE("printing") {
  CHECK(to_string(q({1, 2})) == "1*q^0 + 2*q^1");
  CHECK(to_string(QPoly()) == "0");
  TQSeries s(2);
  s.coeff(0) = QPoly(1);
  s.coeff(2) = q({0, 3});
  CHECK(to_string(s) == "[1*q^0]*t^0 + [3*q^1]*t^2");
  CHECK(to_compact_string(q({0, 2, 2})) == "2q+2q^2");
}

TEST_CASE("property: truncated series form a commutative ring") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_series(rng, 5), b = random_series(rng, 5), c = random_series(rng, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
  }
  const auto a = random_series(rng, 6), b = random_series(rng, 3);
  CHECK((a * b).order() == 3);
  CHECK((a + b).order() == 3);
}
