#include "chowlab/verify.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "chowlab/characters.hpp"
#include "chowlab/chow_geometry.hpp"
#include "chowlab/combinatorics.hpp"
#include "chowlab/error.hpp"
#include "chowlab/foulkes_howe.hpp"
#include "chowlab/hilbert_covariants.hpp"
#include "chowlab/qseries.hpp"
#include "chowlab/veronese_tor.hpp"

namespace chowlab {

namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (!failures_.empty()) failures_ += "; ";
    failures_ += what;
  }
  void note(const std::string& s) {
    if (!notes_.empty()) notes_ += ", ";
    notes_ += s;
  }
  bool passed() const { return failures_.empty(); }
  std::string detail() const { return passed() ? notes_ : failures_; }

 private:
  std::string failures_;
  std::string notes_;
};

std::string dims(const FHReport& r) {
  return "(" + std::to_string(r.d) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + ") domain " +
         std::to_string(r.dim_domain) + " codomain " + std::to_string(r.dim_codomain) + " rank " +
         std::to_string(r.rank);
}

// Domain vector of a quadratic-in-z polynomial given over the z variables
// indexed like compositions(d, n+1).
std::vector<Integer> to_domain_vector(const std::vector<DomainBasisElt>& domain, const Poly& p, int d, int n) {
  const auto alphas = compositions(d, n + 1);
  std::vector<Integer> v(domain.size(), 0);
  for (const auto& [e, c] : p.terms()) {
    DomainBasisElt mono;
    for (std::size_t i = 0; i < e.size(); ++i) mono.insert(mono.end(), static_cast<std::size_t>(e[i]), alphas[i]);
    const auto it = std::find(domain.begin(), domain.end(), mono);
    if (it == domain.end() || c.get_den() != 1) fail(Errc::CheckFailed, "polynomial outside the domain basis");
    v[static_cast<std::size_t>(it - domain.begin())] = c.get_num();
  }
  return v;
}

void normalize(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  for (const auto& x : v)
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  for (auto& x : v) x /= g;
}

void criterion_1(Checker& c, std::uint64_t) {
  const auto fh = fh_matrix(2, 2, 3);
  const auto r = fh_analysis(fh);
  c.note(dims(r));
  c.expect(r.dim_domain == 56 && r.dim_codomain == 55 && r.rank == 55 && r.dim_J == 1,
           "unexpected dimensions " + dims(r));

  // z variables in the order 200, 110, 101, 020, 011, 002
  std::vector<Poly> z;
  for (int i = 0; i < 6; ++i) z.push_back(Poly::variable(6, i));
  const Poly two = Poly::constant(6, 2);
  const std::vector<std::vector<Poly>> zmat = {
      {two * z[0], z[1], z[2]}, {z[1], two * z[3], z[4]}, {z[2], z[4], two * z[5]}};
  auto expected = to_domain_vector(fh.domain, determinant(zmat) * Rational(1, 2), 2, 2);
  normalize(expected);
  const auto ker = kernel_basis(fh.matrix, Rationals{});
  c.expect(ker.size() == 1 && ker[0] == expected, "rational kernel differs from det(Z)/2");
  if (ker.size() == 1) c.note("J_3 = <" + domain_vector_to_string(fh.domain, ker[0]) + ">");

  const Poly char2 = z[0] * z[4] * z[4] + z[3] * z[2] * z[2] + z[5] * z[1] * z[1] + z[4] * z[2] * z[1];
  const auto expected2 = to_domain_vector(fh.domain, char2, 2, 2);
  const auto ker2 = fh_kernel_mod_p(2, 2, 3, 2);
  c.expect(ker2.size() == 1 && ker2[0] == expected2, "kernel mod 2 differs from the characteristic-2 quartic");
}

void criterion_2(Checker& c, std::uint64_t) {
  const auto a = fh_analysis(3, 2, 2);
  c.note(dims(a));
  c.expect(a.dim_J == 0 && a.dim_coker == 1, "(3,2,2) is not injective with cokernel 1");
  const auto b = fh_analysis(3, 2, 3);
  c.note(dims(b));
  c.expect(b.rank == 220 && b.dim_J == 0 && b.dim_coker == 0, "(3,2,3) is not bijective of rank 220");
}

void criterion_3(Checker& c, std::uint64_t seed) {
  const auto a = fh_analysis(4, 2, 2, seed);
  c.note(dims(a) + " coker " + std::to_string(a.dim_coker));
  c.expect(a.dim_J == 0 && Integer(static_cast<unsigned long>(a.dim_coker)) == weyl_dim(Partition({4, 2, 2}), 3),
           "(4,2,2) cokernel is not dim S_(4,2,2)");
  const auto b = fh_analysis(4, 2, 3, seed);
  c.note(dims(b) + " coker " + std::to_string(b.dim_coker));
  c.expect(b.dim_J == 0 && Integer(static_cast<unsigned long>(b.dim_coker)) == weyl_dim(Partition({7, 3, 2}), 3),
           "(4,2,3) cokernel is not dim S_(7,3,2)");
  c.expect(b.dim_domain == 680 && b.dim_codomain == 715, "(4,2,3) has unexpected basis sizes");
}

void criterion_4(Checker& c, std::uint64_t seed) {
  const auto fh = fh_matrix(4, 2, 4);
  const auto r = fh_analysis(fh, seed, 800, 3);
  c.note(dims(r) + " modular over " + std::to_string(r.primes.size()) + " primes");
  c.expect(r.modular && r.primes.size() >= 3, "no multi-prime certificate");
  c.expect(r.rank == 3060 && r.dim_domain == 3060 && r.dim_codomain == 3060 && r.full_rank_certified,
           "(4,2,4) is not an isomorphism");
}

void criterion_5(Checker& c, std::uint64_t) {
  const auto dec = schur_decompose(sym_of_sym_char(3, 3, 3));
  const std::vector<std::vector<int>> expected = {{9}, {7, 2}, {6, 3}, {5, 2, 2}, {4, 4, 1}};
  bool same = dec.terms.size() == expected.size() && !dec.is_virtual;
  for (std::size_t i = 0; same && i < expected.size(); ++i)
    same = dec.terms[i].first == Partition(expected[i]) && dec.terms[i].second == 1;
  c.expect(same, "decomposition differs: " + dec.to_string());
  Integer dim = 0;
  for (const auto& [lambda, mult] : dec.terms) dim += mult * weyl_dim(lambda, 3);
  c.expect(dim == 220 && fh_domain_dim(3, 2, 3) == 220, "dimension cross-check is not 220");
  c.note("Sym^3(Sym^3) = s9+s72+s63+s522+s441, dim " + dim.get_str());
}

void criterion_6(Checker& c, std::uint64_t) {
  for (auto [m, d] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 4}, {2, 5}}) {
    const auto r = foulkes_check(m, d);
    bool slack = true;
    for (const auto& w : r.witnesses) slack = slack && w.outer >= w.inner && w.inner >= 0;
    c.expect(r.contained && slack, "Foulkes fails for (" + std::to_string(m) + "," + std::to_string(d) + ")");
  }
  c.note("(2,3) (2,4) (3,4) (2,5) contained");
}

void criterion_7(Checker& c, std::uint64_t) {
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b)
      c.expect(hermite_check(a, b), "Hermite fails for (" + std::to_string(a) + "," + std::to_string(b) + ")");
  c.note("64 pairs");
}

void criterion_8(Checker& c, std::uint64_t) {
  for (int d = 1; d <= 6; ++d) {
    c.expect(carlitz_identity_check(d, 8), "Carlitz identity fails for d=" + std::to_string(d));
    TQPoly sum;
    for (const auto& lambda : partitions_of(d))
      sum = sum + QPoly(static_cast<long>(syt_count(lambda))) * syt_numerator(lambda);
    c.expect(sum == carlitz_numerator(d), "SYT refinement fails for d=" + std::to_string(d));
  }
  const std::string n3 = to_compact_string(carlitz_numerator(3));
  c.expect(n3 == "1 + t(2q+2q^2) + t^2 q^3", "d=3 numerator is " + n3);
  c.note("d=3 numerator " + n3);
}

void criterion_9(Checker& c, std::uint64_t) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& lambda : partitions_of(d))
      c.expect(hm_lambda_identity_check(lambda, 8), "identity fails for " + lambda.to_string());
  const auto t21 = generator_table(Partition({2, 1}));
  c.expect(t21.rows.size() == 1 && t21.rows[0].degree == 1 && t21.rows[0].tableaux.size() == 2 &&
               t21.rows[0].character == schur_principal(Partition({2, 1}), 1),
           "generators of (2,1) are not 2 in degree 1 with character q+q^2");
  const auto t111 = generator_table(Partition({1, 1, 1}));
  c.expect(t111.rows.size() == 1 && t111.rows[0].degree == 2 && t111.rows[0].tableaux.size() == 1 &&
               t111.rows[0].character == schur_principal(Partition({3, 3}), 1),
           "generator of (1,1,1) is not a single one in degree 2 with character q^3");
  c.note("(2,1): degree 1 q+q^2 x2, (1,1,1): degree 2 q^3");
}

void criterion_10(Checker& c, std::uint64_t) {
  for (int d = 1; d <= 6; ++d) {
    bool same = true;
    for_each_permutation(d, [&](const Permutation& sigma) {
      const auto [p, q] = rsk(sigma);
      same = same && descent_stats(sigma).descent_set == descent_stats(q).descent_set;
    });
    c.expect(same, "RSK changes a descent set for d=" + std::to_string(d));
    std::uint64_t sq = 0;
    for (const auto& lambda : partitions_of(d)) sq += syt_count(lambda) * syt_count(lambda);
    c.expect(sq == factorial(d), "sum of squared f^lambda differs from d! for d=" + std::to_string(d));
  }
  const auto s = descent_stats(Tableau{{{1, 3, 5, 7, 8}, {2, 6}, {4}}});
  c.expect(s.des == 3 && s.maj == 9, "example tableau has des " + std::to_string(s.des) + " maj " + std::to_string(s.maj));
  c.note("example tableau des 3 maj 9");
}

void criterion_11(Checker& c, std::uint64_t seed) {
  Form xyz(3, 3);
  xyz.set_coeff({1, 1, 1}, 1);
  Form two_xyz(3, 3);
  two_xyz.set_coeff({1, 1, 1}, 2);
  c.expect(hessian_cubic(xyz) == two_xyz, "Hessian of xyz is not 2xyz");
  std::mt19937_64 rng(seed);
  int decomposable = 0;
  for (int s = 0; s < 50; ++s) {
    std::vector<LinearForm> ls;
    for (int k = 0; k < 3; ++k) ls.push_back(random_linear_form(rng, 3));
    const Form f = expand_product(ls);
    if (f.is_zero()) continue;
    decomposable += aronhold_test(f) ? 1 : 0;
  }
  c.expect(decomposable == 50, "Aronhold test accepted only " + std::to_string(decomposable) + " of 50 products");
  Form fermat(3, 3);
  for (int i = 0; i < 3; ++i) {
    ExponentVector e(3, 0);
    e[static_cast<std::size_t>(i)] = 3;
    fermat.set_coeff(e, 1);
  }
  c.expect(!aronhold_test(fermat), "Aronhold test accepts the Fermat cubic");
  c.note("50/50 products accepted, Fermat rejected");
}

void criterion_12(Checker& c, std::uint64_t seed) {
  const auto r = complex_checks(seed);
  c.expect(r.passed, "complex checks failed");
  std::string scal;
  for (std::size_t i = 0; i < 10; ++i) scal += (i ? " " : "") + to_string(r.hessian.scalar[i]);
  c.note("generic rank " + std::to_string(r.generic_rank) + ", Hessian scalars " + scal);
}

void criterion_13(Checker& c, std::uint64_t seed) {
  for (int d = 2; d <= 4; ++d) {
    const auto e = e_matrix_det_check(d);
    c.expect(e.leading_term_coefficient == 1, "leading coefficient for d=" + std::to_string(d) + " is " +
                                                   to_string(e.leading_term_coefficient));
  }
  std::mt19937_64 rng(seed);
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}}) {
    int ok = 0;
    for (int s = 0; s < 50; ++s) {
      std::vector<LinearForm> ls;
      std::vector<Rational> v1;
      while (static_cast<int>(ls.size()) < d) {
        auto l = random_linear_form(rng, n + 1);
        l[0] = 1;
        if (std::find(v1.begin(), v1.end(), l[1]) != v1.end()) continue;
        v1.push_back(l[1]);
        ls.push_back(std::move(l));
      }
      ok += recover_coordinates(d, n, v1, expand_product(ls)) == ls ? 1 : 0;
    }
    c.expect(ok == 50, "round trip failed for (" + std::to_string(d) + "," + std::to_string(n) + ")");
  }
  c.note("leading coefficient 1 for d=2,3,4; 150 round trips");
}

void criterion_14(Checker& c, std::uint64_t seed) {
  const auto ring = GradedRingSpec::polynomial_ring(2);
  const auto table = tor_table(ring, 1, 2, 1, 8, seed);
  for (const auto& [n, dim] : table.dims)
    c.expect(dim == static_cast<std::size_t>(n * (n - 1) / 2), "Tor_1 at n=" + std::to_string(n) + " is " + std::to_string(dim));
  const auto g = polynomial_growth_check(ring, table);
  c.expect(g.degree == 2 && g.bound == 2 && g.bound_ok, "fitted degree " + std::to_string(g.degree));
  c.expect(g.coefficients == std::vector<Rational>{0, Rational(-1, 2), Rational(1, 2)}, "fit is " + g.polynomial);
  for (int n = 1; n <= 8; ++n)
    c.expect(euler_characteristic_check(ring, n, 2, seed), "Euler characteristic fails at n=" + std::to_string(n));
  c.note("fit " + g.polynomial + " from n=" + std::to_string(g.onset));
}

struct Entry {
  const char* name;
  Level level;
  void (*run)(Checker&, std::uint64_t);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"fh(2,2,3) kernel and char-2 generator", Level::Quick, criterion_1},
      {"fh(3,2,2) injective, fh(3,2,3) bijective", Level::Quick, criterion_2},
      {"fh(4,2,2) and fh(4,2,3) cokernels", Level::Quick, criterion_3},
      {"fh(4,2,4) modular isomorphism", Level::Full, criterion_4},
      {"Sym^3(Sym^3) plethysm", Level::Quick, criterion_5},
      {"Foulkes containment at desk scale", Level::Quick, criterion_6},
      {"Hermite reciprocity a,b <= 8", Level::Quick, criterion_7},
      {"Carlitz identity and SYT refinement", Level::Quick, criterion_8},
      {"covariant series and generator tables", Level::Quick, criterion_9},
      {"RSK descents and tableau statistics", Level::Quick, criterion_10},
      {"Hessian and Aronhold test", Level::Quick, criterion_11},
      {"d2/d1 complex checks", Level::Quick, criterion_12},
      {"E-matrix determinant and coordinate recovery", Level::Quick, criterion_13},
      {"Veronese Tor table and growth", Level::Quick, criterion_14},
  };
  return r;
}

const Entry& entry(int id) {
  if (id < 1 || id > static_cast<int>(registry().size())) fail(Errc::BadRange, "no criterion " + std::to_string(id));
  return registry()[static_cast<std::size_t>(id - 1)];
}

}  // namespace

std::vector<int> criterion_ids() {
  std::vector<int> ids;
  for (int i = 1; i <= static_cast<int>(registry().size()); ++i) ids.push_back(i);
  return ids;
}

Level criterion_level(int id) { return entry(id).level; }

std::string criterion_name(int id) { return entry(id).name; }

CriterionResult run_criterion(int id, std::uint64_t seed) {
  const Entry& e = entry(id);
  CriterionResult r;
  r.id = id;
  r.name = e.name;
  r.level = e.level;
  const auto start = std::chrono::steady_clock::now();
  Checker c;
  try {
    e.run(c, seed);
    r.passed = c.passed();
    r.detail = c.detail();
  } catch (const std::exception& ex) {
    r.passed = false;
    r.detail = ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_criteria(Level level, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id : criterion_ids())
    if (level == Level::Full || criterion_level(id) == Level::Quick) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace chowlab
