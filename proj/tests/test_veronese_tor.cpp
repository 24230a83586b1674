#include <doctest.h>

#include "chowlab/error.hpp"
#include "chowlab/veronese_tor.hpp"

using namespace chowlab;

namespace {

std::size_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * static_cast<std::size_t>(n - k + j) / static_cast<std::size_t>(j);
  return r;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::CheckFailed;
}

const GradedRingSpec kPlane = GradedRingSpec::polynomial_ring(2);

}  // namespace

TEST_CASE("graded_piece_basis") {
  const auto b = graded_piece_basis(kPlane, 3);
  CHECK(b == std::vector<ExponentVector>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
  CHECK(graded_piece_basis(kPlane, 0).size() == 1);
  const GradedRingSpec quotient{3, {Poly::monomial({2, 0, 0})}};
  CHECK(graded_piece_basis(quotient, 2).size() == 5);
  const GradedRingSpec conic{3, {Poly::monomial({2, 0, 0}) + Poly::monomial({0, 1, 1})}};
  CHECK(graded_piece_basis(conic, 2).size() == 5);
  CHECK(graded_piece_basis(conic, 3).size() == 7);
  const GradedRingSpec two{3, {Poly::monomial({2, 0, 0}) + Poly::monomial({0, 1, 1}),
                               Poly::monomial({0, 2, 0}) + Poly::monomial({1, 0, 1})}};
  CHECK(code_of([&] { graded_piece_basis(two, 2); }) == Errc::RelationReductionUnsupported);
}

TEST_CASE("koszul_tor examples") {
  CHECK(koszul_tor_dim(kPlane, 3, 0, 0) == 1);
  CHECK(koszul_tor_dim(kPlane, 2, 1, 2) == 1);
  CHECK(koszul_tor_dim(kPlane, 3, 1, 2) == 3);
  const auto h = koszul_tor(kPlane, 3, 1, 2);
  CHECK(h.dim_middle == 16);
  CHECK(h.rank_in == 6);
  CHECK(h.rank_out == 7);
  CHECK(h.composition_zero);
  CHECK(h.exact);
  CHECK(koszul_term_dim(kPlane, 3, 1, 2) == 4 * 4);
}

TEST_CASE("rational normal curves have the Eagon-Northcott Betti numbers") {
  for (int n = 1; n <= 7; ++n)
    for (int i = 0; i <= 3; ++i)
      for (int d = 0; d <= 4; ++d) {
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(d);
        std::size_t expected = 0;
        if (i == 0 && d == 0) expected = 1;
        if (i >= 1 && d == i + 1) expected = static_cast<std::size_t>(i) * choose(n, i + 1);
        CHECK(koszul_tor_dim(kPlane, n, i, d) == expected);
      }
}

TEST_CASE("Tor table and growth for i = 1, d = 2") {
  const auto table = tor_table(kPlane, 1, 2, 1, 8);
  for (int n = 1; n <= 8; ++n) CHECK(table.dims.at(n) == choose(n, 2));
  const auto fit = polynomial_growth_check(kPlane, table);
  CHECK(fit.degree == 2);
  CHECK(fit.bound == 2);
  CHECK(fit.bound_ok);
  CHECK(fit.coefficients == std::vector<Rational>{0, Rational(-1, 2), Rational(1, 2)});
  CHECK(fit.leading_coefficient() == Rational(1, 2));
  CHECK(to_tsv(table).rfind("n\tdim\n1\t0\n2\t1\n", 0) == 0);
}

TEST_CASE("growth for i = 2, d = 3 and the trivial case") {
  const auto fit = polynomial_growth_check(kPlane, 2, 3, 2, 9);
  CHECK(fit.degree <= 3);
  CHECK(fit.bound_ok);
  const auto trivial = polynomial_growth_check(kPlane, 0, 0, 1, 4);
  CHECK(trivial.degree == 0);
  CHECK(trivial.coefficients == std::vector<Rational>{1});
}

TEST_CASE("growth errors") {
  CHECK(code_of([] { polynomial_growth_check(kPlane, 1, 2, 1, 3); }) == Errc::BadRange);
  TorTable fake;
  fake.i = 1;
  fake.d = 2;
  for (int n = 1; n <= 9; ++n) fake.dims[n] = std::size_t{1} << n;
  CHECK(code_of([&] { polynomial_growth_check(kPlane, fake); }) == Errc::NoStabilization);
  TorTable gap = fake;
  gap.dims.erase(4);
  CHECK(code_of([&] { polynomial_growth_check(kPlane, gap); }) == Errc::BadRange);
}

TEST_CASE("size guard") { CHECK(code_of([] { koszul_tor(GradedRingSpec::polynomial_ring(6), 12, 3, 6); }) == Errc::TooLarge); }

TEST_CASE("property: composition and Euler characteristic on every computed instance") {
  const std::vector<GradedRingSpec> rings = {
      kPlane,
      GradedRingSpec::polynomial_ring(3),
      GradedRingSpec{3, {Poly::monomial({2, 0, 0})}},
      GradedRingSpec{3, {Poly::monomial({2, 0, 0}) + Poly::monomial({0, 1, 1})}},
  };
  for (const auto& ring : rings)
    for (int n = 1; n <= 3; ++n)
      for (int d = 0; d <= 3; ++d) {
        CAPTURE(ring.nvars);
        CAPTURE(n);
        CAPTURE(d);
        CHECK(euler_characteristic_check(ring, n, d));
        for (int i = 0; i <= d; ++i) {
          const auto h = koszul_tor(ring, n, i, d);
          CHECK(h.composition_zero);
          CHECK(h.rank_in + h.rank_out + h.dim == h.dim_middle);
        }
      }
}

TEST_CASE("property: modular ranks agree with exact ranks") {
  const auto ring = GradedRingSpec::polynomial_ring(3);
  for (int n = 1; n <= 2; ++n)
    for (int i = 1; i <= 2; ++i) {
      const auto exact = koszul_tor(ring, n, i, 3, 1, 100000);
      const auto modular = koszul_tor(ring, n, i, 3, 5, 0);
      CHECK(exact.exact);
      CHECK_FALSE(modular.exact);
      CHECK(exact.dim == modular.dim);
    }
}
