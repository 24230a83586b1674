#include "chowlab/veronese_tor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "chowlab/characters.hpp"
#include "chowlab/error.hpp"

namespace chowlab {

namespace {

constexpr std::size_t kTermGuard = 150'000;

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Normal forms modulo the relations: either a monomial ideal or a principal
// ideal, in both cases the relations already form a Groebner basis for lex.
class Reducer {
 public:
  explicit Reducer(const GradedRingSpec& ring) : nvars_(ring.nvars) {
    if (ring.nvars < 1) fail(Errc::BadRange, "ring needs at least one variable");
    std::vector<Poly> rels;
    for (const auto& r : ring.relations) {
      if (r.nvars() != ring.nvars) fail(Errc::BadShape, "relation has the wrong variable count");
      if (!r.is_homogeneous()) fail(Errc::NotHomogeneous, "relations must be homogeneous");
      if (!r.is_zero()) rels.push_back(r);
    }
    const bool all_monomial =
        std::all_of(rels.begin(), rels.end(), [](const Poly& r) { return r.terms().size() == 1; });
    if (!all_monomial && (rels.size() > 1 || ring.nvars > 3))
      fail(Errc::RelationReductionUnsupported,
           "only monomial relations or a single relation in at most three variables are supported");
    for (const auto& r : rels) leads_.push_back(r.terms().rbegin()->first);
    if (!all_monomial) principal_ = rels.front();
  }

  bool is_standard(const ExponentVector& e) const {
    return std::none_of(leads_.begin(), leads_.end(), [&](const ExponentVector& l) { return divides(l, e); });
  }

  std::vector<ExponentVector> basis(int degree) const {
    if (degree < 0) return {};
    auto all = compositions(degree, nvars_);
    std::reverse(all.begin(), all.end());
    std::vector<ExponentVector> out;
    for (auto& e : all)
      if (is_standard(e)) out.push_back(std::move(e));
    return out;
  }

  // Normal form of c * x^e.
  Poly reduce(const ExponentVector& e, const Rational& c) const {
    Poly p = Poly::monomial(e, c);
    if (principal_.is_zero()) return is_standard(e) ? p : Poly(nvars_);
    const auto& lead = leads_.front();
    const Rational lc = principal_.terms().rbegin()->second;
    for (;;) {
      const std::pair<const ExponentVector, Rational>* hit = nullptr;
      for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        if (divides(lead, it->first)) {
          hit = &*it;
          break;
        }
      if (!hit) return p;
      ExponentVector shift = hit->first;
      for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= lead[i];
      const Rational factor = hit->second / lc;
      p -= Poly::monomial(shift, factor) * principal_;
    }
  }

  int nvars() const { return nvars_; }

 private:
  int nvars_;
  std::vector<ExponentVector> leads_;
  Poly principal_{0};
};

Integer binomial(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct Term {
  std::vector<std::vector<int>> wedges;
  std::vector<ExponentVector> coeffs;  // basis of R_((d-j)n)
  std::size_t dim() const { return wedges.size() * coeffs.size(); }
};

class KoszulComplex {
 public:
  KoszulComplex(const GradedRingSpec& ring, int n, int d) : reducer_(ring), n_(n), d_(d) {
    if (n < 1) fail(Errc::BadRange, "Veronese index n must be positive");
    if (d < 0) fail(Errc::BadRange, "negative degree");
    gens_ = reducer_.basis(n);
  }

  std::size_t term_dim(int j) const {
    if (j < 0 || j > d_ || j > static_cast<int>(gens_.size())) return 0;
    const Integer dim = binomial(gens_.size(), static_cast<std::size_t>(j)) *
                        static_cast<unsigned long>(reducer_.basis((d_ - j) * n_).size());
    if (dim > kTermGuard) fail(Errc::TooLarge, "Koszul term exceeds " + std::to_string(kTermGuard));
    return dim.get_ui();
  }

  Term term(int j) const {
    Term t;
    if (term_dim(j) == 0) return t;
    t.wedges = subsets(static_cast<int>(gens_.size()), j);
    t.coeffs = reducer_.basis((d_ - j) * n_);
    return t;
  }

  // Matrix of the differential from term j to term j-1, rows indexing term j-1.
  IntMatrix differential(int j) const {
    const Term src = term(j), dst = term(j - 1);
    if (src.dim() == 0 || dst.dim() == 0) return IntMatrix(dst.dim(), src.dim());
    std::map<std::vector<int>, std::size_t> wedge_index;
    for (std::size_t w = 0; w < dst.wedges.size(); ++w) wedge_index.emplace(dst.wedges[w], w);
    std::map<ExponentVector, std::size_t> coeff_index;
    for (std::size_t c = 0; c < dst.coeffs.size(); ++c) coeff_index.emplace(dst.coeffs[c], c);

    std::vector<std::tuple<std::size_t, std::size_t, Rational>> raw;
    ExponentVector prod(static_cast<std::size_t>(reducer_.nvars()));
    for (std::size_t w = 0; w < src.wedges.size(); ++w) {
      const auto& wedge = src.wedges[w];
      for (std::size_t c = 0; c < src.coeffs.size(); ++c) {
        const std::size_t col = w * src.coeffs.size() + c;
        for (std::size_t t = 0; t < wedge.size(); ++t) {
          std::vector<int> rest = wedge;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
          const std::size_t rw = wedge_index.at(rest);
          const auto& g = gens_[static_cast<std::size_t>(wedge[t])];
          for (std::size_t v = 0; v < prod.size(); ++v) prod[v] = g[v] + src.coeffs[c][v];
          const Poly nf = reducer_.reduce(prod, t % 2 ? -1 : 1);
          for (const auto& [e, x] : nf.terms())
            raw.emplace_back(rw * dst.coeffs.size() + coeff_index.at(e), col, x);
        }
      }
    }
    Integer scale = 1;
    for (const auto& [r, c, x] : raw) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    std::vector<MatrixEntry> entries;
    entries.reserve(raw.size());
    for (const auto& [r, c, x] : raw) entries.push_back({r, c, x.get_num() * (scale / x.get_den())});
    return IntMatrix(dst.dim(), src.dim(), std::move(entries));
  }

  const std::vector<ExponentVector>& generators() const { return gens_; }

 private:
  Reducer reducer_;
  int n_, d_;
  std::vector<ExponentVector> gens_;
};

std::size_t rank_of(const IntMatrix& m, bool use_exact, std::uint64_t seed, bool& exact) {
  if (m.is_zero()) return 0;
  if (use_exact) return rank_exact(m);
  exact = false;
  auto cert = rank_multi_modular(m, 2, seed);
  if (!cert.agree) cert = rank_multi_modular(m, 4, seed + 1);
  return cert.rank;
}

}  // namespace

std::vector<ExponentVector> graded_piece_basis(const GradedRingSpec& ring, int degree) {
  if (degree < 0) fail(Errc::BadRange, "negative degree");
  return Reducer(ring).basis(degree);
}

std::size_t koszul_term_dim(const GradedRingSpec& ring, int n, int i, int d) {
  return KoszulComplex(ring, n, d).term_dim(i);
}

KoszulHomology koszul_tor(const GradedRingSpec& ring, int n, int i, int d, std::uint64_t seed,
                          std::size_t exact_limit) {
  if (i < 0) fail(Errc::BadRange, "negative homological degree");
  const KoszulComplex k(ring, n, d);
  KoszulHomology h;
  h.n = n;
  h.i = i;
  h.d = d;
  h.dim_middle = k.term_dim(i);
  const bool use_exact = std::max({k.term_dim(i - 1), h.dim_middle, k.term_dim(i + 1)}) <= exact_limit;
  const IntMatrix out = k.differential(i);
  const IntMatrix in = k.differential(i + 1);
  h.composition_zero = out.multiply(in).is_zero();
  if (!h.composition_zero) fail(Errc::CheckFailed, "Koszul differentials do not compose to zero");
  h.rank_out = rank_of(out, use_exact, seed, h.exact);
  h.rank_in = rank_of(in, use_exact, seed + 7, h.exact);
  if (h.rank_in + h.rank_out > h.dim_middle)
    fail(Errc::NegativeHomology, "ranks exceed the dimension of the middle term");
  h.dim = h.dim_middle - h.rank_in - h.rank_out;
  return h;
}

std::size_t koszul_tor_dim(const GradedRingSpec& ring, int n, int i, int d, std::uint64_t seed) {
  return koszul_tor(ring, n, i, d, seed).dim;
}

bool euler_characteristic_check(const GradedRingSpec& ring, int n, int d, std::uint64_t seed) {
  const KoszulComplex k(ring, n, d);
  long terms = 0, homology = 0;
  for (int i = 0; i <= d; ++i) {
    const long sign = i % 2 ? -1 : 1;
    const std::size_t dim = k.term_dim(i);
    if (dim == 0) continue;
    terms += sign * static_cast<long>(dim);
    homology += sign * static_cast<long>(koszul_tor(ring, n, i, d, seed).dim);
  }
  return terms == homology;
}

TorTable tor_table(const GradedRingSpec& ring, int i, int d, int n_min, int n_max, std::uint64_t seed) {
  if (n_min < 1 || n_max < n_min) fail(Errc::BadRange, "need 1 <= n_min <= n_max");
  TorTable t;
  t.i = i;
  t.d = d;
  for (int n = n_min; n <= n_max; ++n) t.dims[n] = koszul_tor_dim(ring, n, i, d, seed);
  return t;
}

std::string to_tsv(const TorTable& table) {
  std::string s = "n\tdim\n";
  for (const auto& [n, dim] : table.dims) s += std::to_string(n) + "\t" + std::to_string(dim) + "\n";
  return s;
}

Rational GrowthReport::leading_coefficient() const {
  return coefficients.empty() ? Rational(0) : coefficients.back();
}

namespace {

// k-th forward difference of v starting at position s.
Integer forward_difference(const std::vector<Integer>& v, std::size_t s, int k) {
  Integer acc = 0;
  for (int j = 0; j <= k; ++j) {
    const Integer term = binomial(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) * v[s + static_cast<std::size_t>(j)];
    if ((k - j) % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

bool differences_vanish(const std::vector<Integer>& v, std::size_t from, int order) {
  for (std::size_t s = from; s + static_cast<std::size_t>(order) < v.size(); ++s)
    if (forward_difference(v, s, order) != 0) return false;
  return true;
}

}  // namespace

GrowthReport polynomial_growth_check(const GradedRingSpec& ring, const TorTable& table) {
  GrowthReport r;
  r.bound = (ring.nvars - 1) * table.d;
  const int needed = r.bound + 3;
  if (static_cast<int>(table.dims.size()) < needed)
    fail(Errc::BadRange, "growth check needs at least " + std::to_string(needed) + " values of n");
  std::vector<int> ns;
  std::vector<Integer> v;
  for (const auto& [n, dim] : table.dims) {
    if (!ns.empty() && n != ns.back() + 1) fail(Errc::BadRange, "table values of n must be consecutive");
    ns.push_back(n);
    v.emplace_back(static_cast<unsigned long>(dim));
  }
  const int order = r.bound + 1;
  const std::size_t len = v.size();
  // the last window covers positions len-order-1 .. len-1
  std::size_t start = len - static_cast<std::size_t>(order) - 1;
  if (forward_difference(v, start, order) != 0)
    fail(Errc::NoStabilization, "no polynomial of degree <= " + std::to_string(r.bound) + " fits the tail");
  while (start > 0 && forward_difference(v, start - 1, order) == 0) --start;
  r.onset = ns[start];

  std::vector<Integer> tail(v.begin() + static_cast<std::ptrdiff_t>(start), v.end());
  int degree = -1;
  if (std::any_of(tail.begin(), tail.end(), [](const Integer& x) { return x != 0; })) {
    degree = 0;
    while (!differences_vanish(tail, 0, degree + 1)) ++degree;
  }
  r.degree = degree;
  r.bound_ok = degree <= r.bound;

  // Newton form p(n) = sum_k D^k f(n0) C(n - n0, k), expanded in powers of n
  Poly p(1);
  const Poly var = Poly::variable(1, 0);
  Poly basis = Poly::constant(1, 1);
  for (int k = 0; k <= degree; ++k) {
    if (k > 0) basis = basis * (var - Poly::constant(1, Rational(r.onset + k - 1))) * Rational(1, k);
    p += basis * Rational(forward_difference(tail, 0, k));
  }
  r.coefficients.assign(static_cast<std::size_t>(std::max(degree, -1) + 1), 0);
  for (const auto& [e, c] : p.terms()) r.coefficients[static_cast<std::size_t>(e[0])] = c;
  r.polynomial = p.to_string({"n"});
  return r;
}

GrowthReport polynomial_growth_check(const GradedRingSpec& ring, int i, int d, int n_min, int n_max,
                                     std::uint64_t seed) {
  return polynomial_growth_check(ring, tor_table(ring, i, d, n_min, n_max, seed));
}

}  // namespace chowlab
