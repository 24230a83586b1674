#include <doctest.h>

#include <functional>

#include "chowlab/characters.hpp"
#include "chowlab/combinatorics.hpp"
#include "chowlab/error.hpp"
#include "chowlab/qseries.hpp"

using namespace chowlab;

namespace {

Integer binomial(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

// Character of Sym^m (strict = false) or Wedge^m (strict = true) of Sym^d C^k,
// by enumerating multisets or subsets of degree-d monomials directly.
SymPoly brute_force_outer(int m, int d, int k, bool strict) {
  const auto monos = compositions(d, k);
  SymPoly out(k);
  std::vector<int> acc(static_cast<std::size_t>(k), 0);
  std::function<void(int, std::size_t)> rec = [&](int left, std::size_t from) {
    if (left == 0) {
      out.add_term(acc, 1);
      return;
    }
    for (std::size_t i = from; i < monos.size(); ++i) {
      for (int j = 0; j < k; ++j) acc[j] += monos[i][j];
      rec(left - 1, strict ? i + 1 : i);
      for (int j = 0; j < k; ++j) acc[j] -= monos[i][j];
    }
  };
  rec(m, 0);
  return out;
}

SymPoly from_decomposition(const Decomposition& dec, int k) {
  SymPoly out(k);
  for (const auto& [lambda, mult] : dec.terms) {
    SymPoly s = schur_poly(lambda, k);
    s *= mult;
    out += s;
  }
  return out;
}

Decomposition expect(std::initializer_list<std::pair<std::vector<int>, long>> terms) {
  Decomposition d;
  for (const auto& [parts, mult] : terms) d.terms.emplace_back(Partition(parts), Integer(mult));
  return d;
}

void check_same(const Decomposition& got, const Decomposition& want) {
  CAPTURE(got.to_string());
  REQUIRE(got.terms.size() == want.terms.size());
  for (std::size_t i = 0; i < got.terms.size(); ++i) {
    CHECK(got.terms[i].first == want.terms[i].first);
    CHECK(got.terms[i].second == want.terms[i].second);
  }
}

}  // namespace

TEST_CASE("compositions are listed in decreasing lex order") {
  const auto c = compositions(2, 2);
  CHECK(c == std::vector<ExponentVector>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(compositions(3, 3).size() == 10);
}

TEST_CASE("schur_poly") {
  const auto s1 = schur_poly(Partition({1}), 3);
  CHECK(s1.terms().size() == 3);
  CHECK(s1.coeff({1, 0, 0}) == 1);
  CHECK(schur_poly(Partition({1, 1, 1, 1}), 3).is_zero());
  const auto s21 = schur_poly(Partition({2, 1}), 3);
  CHECK(s21.terms().size() == 6 + 1);
  CHECK(s21.coeff({1, 1, 1}) == 2);
  CHECK(s21.at_ones() == 8);
  CHECK(s21.is_symmetric());
  // Non-rectangular shape with three rows: entry bounds depend on column height.
  const auto s321 = schur_poly(Partition({3, 2, 1}), 3);
  CHECK(s321.coeff({2, 2, 2}) == 2);
  CHECK(s321.at_ones() == 8);
}

TEST_CASE("weyl_dim") {
  CHECK(weyl_dim(Partition({4, 2, 2}), 3) == 6);
  CHECK(weyl_dim(Partition({7, 3, 2}), 3) == 35);
  for (int k = 1; k <= 5; ++k)
    for (int d = 0; d <= 6; ++d) CHECK(weyl_dim(Partition(d ? std::vector<int>{d} : std::vector<int>{}), k) == binomial(k + d - 1, static_cast<unsigned long>(d)));
  for (int d = 1; d <= 7; ++d)
    for (const auto& l : partitions_of(d))
      for (int k = 1; k <= 4; ++k) CHECK(weyl_dim(l, k) == schur_poly(l, k).at_ones());
}

TEST_CASE("schur_principal") {
  for (int d = 1; d <= 4; ++d)
    for (int m = 0; m <= 4; ++m) CHECK(schur_principal(Partition({d}), m) == qbinomial(m + d, d));
  QPoly expected;
  for (auto [e, c] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 2}, {4, 2}, {5, 1}}) expected.add_term(e, c);
  CHECK(schur_principal(Partition({2, 1}), 2) == expected);
  CHECK(schur_principal(Partition({1, 1}), 1) == QPoly::monomial(1, 1));
}

TEST_CASE("property: principal specialization of schur_poly matches schur_principal") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& l : partitions_of(d))
      for (int m = 0; m <= 3; ++m) CHECK(schur_poly(l, m + 1).principal_specialization() == schur_principal(l, m));
}

TEST_CASE("plethysm characters agree with multiset enumeration") {
  for (int k = 1; k <= 3; ++k)
    for (int d = 1; d <= 3; ++d)
      for (int m = 1; m <= 3; ++m) {
        CAPTURE(m);
        CAPTURE(d);
        CAPTURE(k);
        CHECK(sym_of_sym_char(m, d, k) == brute_force_outer(m, d, k, false));
        CHECK(wedge_of_sym_char(m, d, k) == brute_force_outer(m, d, k, true));
      }
  CHECK(sym_of_sym_char(4, 1, 3) == schur_poly(Partition({4}), 3));
  CHECK(wedge_of_sym_char(1, 4, 2) == schur_poly(Partition({4}), 2));
}

TEST_CASE("schur_decompose examples") {
  check_same(schur_decompose(schur_poly(Partition({3, 1}), 3)), expect({{{3, 1}, 1}}));
  SymPoly p1 = schur_poly(Partition({1}), 3);
  check_same(schur_decompose(p1 * p1 * p1), expect({{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}}));
  check_same(schur_decompose(sym_of_sym_char(2, 2, 2)), expect({{{4}, 1}, {{2, 2}, 1}}));
  check_same(schur_decompose(wedge_of_sym_char(2, 2, 2)), expect({{{3, 1}, 1}}));
  check_same(schur_decompose(sym_of_sym_char(3, 3, 3)),
             expect({{{9}, 1}, {{7, 2}, 1}, {{6, 3}, 1}, {{5, 2, 2}, 1}, {{4, 4, 1}, 1}}));
  CHECK(schur_decompose(sym_of_sym_char(3, 3, 3)).to_string() ==
        "(9) : 1\n(7,2) : 1\n(6,3) : 1\n(5,2,2) : 1\n(4,4,1) : 1\n");
}

TEST_CASE("schur_decompose flags virtual characters and rejects bad input") {
  const auto dec = schur_decompose(schur_poly(Partition({2}), 2) - schur_poly(Partition({1, 1}), 2));
  CHECK(dec.is_virtual);
  CHECK(dec.multiplicity(Partition({1, 1})) == -1);

  SymPoly asym(2);
  asym.add_term({2, 0}, 1);
  try {
    schur_decompose(asym);
    FAIL("expected NotSymmetric");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSymmetric);
  }
  SymPoly mixed(2);
  mixed.add_term({1, 0}, 1);
  mixed.add_term({0, 1}, 1);
  mixed.add_term({1, 1}, 1);
  try {
    schur_decompose(mixed);
    FAIL("expected NotHomogeneous");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotHomogeneous);
  }
}

TEST_CASE("second exterior power of Sym^m C^2 is a sum over a >= b of S_(2a+1,2b+1)") {
  for (int m = 2; m <= 5; ++m) {
    Decomposition want;
    for (int a = m - 1; a >= 0; --a) {
      const int b = m - 1 - a;
      if (a >= b) want.terms.emplace_back(Partition({2 * a + 1, 2 * b + 1}), Integer(1));
    }
    check_same(schur_decompose(wedge_of_sym_char(2, m, 2)), want);
  }
}

TEST_CASE("property: plethysm dimensions, round trips and positivity") {
  for (int k = 2; k <= 3; ++k)
    for (int d = 1; d <= 3; ++d)
      for (int m = 1; m <= 3; ++m) {
        const SymPoly ch = sym_of_sym_char(m, d, k);
        CHECK(ch.at_ones() == binomial(binomial(k + d - 1, static_cast<unsigned long>(d)) + m - 1, static_cast<unsigned long>(m)));
        const Decomposition dec = schur_decompose(ch);
        CHECK_FALSE(dec.is_virtual);
        for (const auto& [lambda, mult] : dec.terms) CHECK(mult > 0);
        CHECK(from_decomposition(dec, k) == ch);
      }
}

TEST_CASE("foulkes_check") {
  CHECK(foulkes_check(1, 4).contained);
  const auto r = foulkes_check(2, 3);
  CHECK(r.contained);
  CHECK(r.nvars == 3);
  // In three variables: Sym^2(Sym^3) = s6 + s42 (dim 55), Sym^3(Sym^2) = s6 + s42 + s222 (dim 56).
  check_same(schur_decompose(sym_of_sym_char(2, 3, 3)), expect({{{6}, 1}, {{4, 2}, 1}}));
  check_same(schur_decompose(sym_of_sym_char(3, 2, 3)), expect({{{6}, 1}, {{4, 2}, 1}, {{2, 2, 2}, 1}}));
  CHECK(sym_of_sym_char(2, 3, 3).at_ones() == 55);
  CHECK(sym_of_sym_char(3, 2, 3).at_ones() == 56);
  for (const auto& w : r.witnesses) CHECK(w.inner <= w.outer);
  CHECK(foulkes_check(3, 4).contained);
  CHECK(foulkes_check(2, 4).contained);
  CHECK(foulkes_check(2, 5).contained);
}

TEST_CASE("hermite_check") {
  CHECK(hermite_check(1, 5));
  CHECK(hermite_check(2, 3));
  CHECK(sym_of_sym_char(2, 3, 2).at_ones() == 10);
  CHECK(sym_of_sym_char(3, 2, 2).at_ones() == 10);
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b) CHECK(hermite_check(a, b));
  // Reciprocity is special to two variables.
  CHECK(sym_of_sym_char(2, 3, 3) != sym_of_sym_char(3, 2, 3));
}

TEST_CASE("size guard") { CHECK_THROWS_AS(sym_of_sym_char(40, 40, 40), Error); }
