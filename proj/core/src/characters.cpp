#include "chowlab/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "chowlab/error.hpp"

namespace chowlab {

namespace {

// Guard on the number of monomials of the target degree.
constexpr long kMonomialGuard = 2'000'000;

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

// ---------------------------------------------------------------- SymPoly

SymPoly::SymPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) fail(Errc::BadRange, "negative variable count");
}

Integer SymPoly::coeff(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SymPoly::add_term(const ExponentVector& e, const Integer& c) {
  if (static_cast<int>(e.size()) != nvars_) fail(Errc::BadShape, "exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SymPoly::is_symmetric() const {
  // Every term must carry the coefficient of its sorted representative, and
  // every orbit must be complete.
  std::map<ExponentVector, std::uint64_t> seen;
  for (const auto& [e, c] : terms_) {
    ExponentVector sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (coeff(sorted) != c) return false;
    ++seen[sorted];
  }
  for (const auto& [sorted, count] : seen) {
    std::uint64_t orbit = 1;
    std::size_t run = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      orbit = orbit * (i + 1);
      run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
      orbit /= run;
    }
    if (count != orbit) return false;
  }
  return true;
}

bool SymPoly::is_homogeneous() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    const int s = std::accumulate(e.begin(), e.end(), 0);
    if (deg >= 0 && s != deg) return false;
    deg = s;
  }
  return true;
}

int SymPoly::degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

Integer SymPoly::at_ones() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

QPoly SymPoly::principal_specialization() const {
  QPoly out;
  for (const auto& [e, c] : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i) * e[i];
    out.add_term(w, c);
  }
  return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.nvars_ != nvars_) fail(Errc::BadShape, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (o.nvars_ != nvars_) fail(Errc::BadShape, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.nvars_ != b.nvars_) fail(Errc::BadShape, "variable count mismatch");
  SymPoly r(a.nvars_);
  ExponentVector e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

SymPoly SymPoly::divide_exact(const Integer& c) const {
  SymPoly r(nvars_);
  for (const auto& [e, v] : terms_) {
    if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
      fail(Errc::IntegralityViolated, "character coefficient not divisible by " + c.get_str());
    r.terms_.emplace(e, v / c);
  }
  return r;
}

// ---------------------------------------------------------------- Schur

std::vector<ExponentVector> compositions(int d, int k) {
  std::vector<ExponentVector> out;
  if (k == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  ExponentVector cur(static_cast<std::size_t>(k), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == cur.size()) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

namespace {

// Enumerates semistandard fillings of lambda with entries 1..k, reporting the
// content vector of each.
template <typename Visit>
void for_each_ssyt(const Partition& lambda, int k, Visit&& visit) {
  if (static_cast<int>(lambda.length()) > k) return;
  std::vector<std::vector<int>> t(lambda.length());
  for (std::size_t i = 0; i < lambda.length(); ++i) t[i].assign(static_cast<std::size_t>(lambda[i]), 0);
  std::vector<int> content(static_cast<std::size_t>(k), 0);
  const Partition conj = transpose(lambda);
  std::vector<int> transposed;
  for (std::size_t j = 0; j < conj.length(); ++j) transposed.push_back(conj[j]);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) cells.emplace_back(i, static_cast<std::size_t>(j));
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      visit(content);
      return;
    }
    const auto [i, j] = cells[idx];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    // leave room for the cells below in the same column
    const int hi = k - (transposed[j] - 1 - static_cast<int>(i));
    for (int v = lo; v <= hi; ++v) {
      t[i][j] = v;
      ++content[static_cast<std::size_t>(v - 1)];
      rec(idx + 1);
      --content[static_cast<std::size_t>(v - 1)];
    }
  };
  rec(0);
}

}  // namespace

SymPoly schur_poly(const Partition& lambda, int k) {
  SymPoly p(k);
  for_each_ssyt(lambda, k, [&](const std::vector<int>& content) { p.add_term(content, 1); });
  return p;
}

Integer weyl_dim(const Partition& lambda, int k) {
  if (static_cast<int>(lambda.length()) > k) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      num *= lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i;
      den *= j - i;
    }
  return num / den;
}

QPoly schur_principal(const Partition& lambda, int m) {
  if (m < 0) fail(Errc::BadRange, "negative specialization length");
  QPoly out;
  for_each_ssyt(lambda, m + 1, [&](const std::vector<int>& content) {
    int w = 0;
    for (std::size_t v = 0; v < content.size(); ++v) w += static_cast<int>(v) * content[v];
    out.add_term(w, 1);
  });
  return out;
}

// ---------------------------------------------------------------- plethysm

namespace {

void guard_monomials(int degree, int k) {
  if (k <= 0) return;
  if (binomial(degree + k - 1, k - 1) > kMonomialGuard)
    fail(Errc::TooLarge, "character has more than " + std::to_string(kMonomialGuard) + " monomials");
}

// p_r evaluated at all degree-d monomials: sum_w x^(r*w).
SymPoly power_sum_of_monomials(int r, int d, int k) {
  SymPoly p(k);
  for (auto w : compositions(d, k)) {
    for (int& x : w) x *= r;
    p.add_term(w, 1);
  }
  return p;
}

SymPoly one(int k) {
  SymPoly p(k);
  p.add_term(ExponentVector(static_cast<std::size_t>(k), 0), 1);
  return p;
}

// Newton's identities: j*E_j = sum_{r=1}^{j} sign^(r-1) P_r E_{j-r}, with
// sign = +1 for complete and -1 for elementary plethysm.
SymPoly newton_plethysm(int outer, int inner, int k, bool elementary) {
  if (outer < 0 || inner < 0 || k < 0) fail(Errc::BadRange, "negative plethysm parameter");
  guard_monomials(outer * inner, k);
  std::vector<SymPoly> power;
  power.reserve(static_cast<std::size_t>(outer) + 1);
  power.emplace_back(k);
  for (int r = 1; r <= outer; ++r) power.push_back(power_sum_of_monomials(r, inner, k));
  std::vector<SymPoly> h{one(k)};
  for (int j = 1; j <= outer; ++j) {
    SymPoly acc(k);
    for (int r = 1; r <= j; ++r) {
      SymPoly term = power[static_cast<std::size_t>(r)] * h[static_cast<std::size_t>(j - r)];
      if (elementary && r % 2 == 0)
        acc -= term;
      else
        acc += term;
    }
    h.push_back(acc.divide_exact(j));
  }
  return h.back();
}

}  // namespace

SymPoly sym_of_sym_char(int m, int d, int k) { return newton_plethysm(m, d, k, false); }

SymPoly wedge_of_sym_char(int i, int m, int k) { return newton_plethysm(i, m, k, true); }

// ---------------------------------------------------------------- decomposition

Integer Decomposition::multiplicity(const Partition& lambda) const {
  for (const auto& [l, c] : terms)
    if (l == lambda) return c;
  return 0;
}

std::string Decomposition::to_string() const {
  std::string s;
  for (const auto& [l, c] : terms) s += l.to_string() + " : " + c.get_str() + "\n";
  return s;
}

Decomposition schur_decompose(const SymPoly& p) {
  if (!p.is_homogeneous()) fail(Errc::NotHomogeneous, "schur_decompose needs a homogeneous polynomial");
  if (!p.is_symmetric()) fail(Errc::NotSymmetric, "schur_decompose needs a symmetric polynomial");
  Decomposition out;
  SymPoly rest = p;
  while (!rest.is_zero()) {
    // the lex-greatest exponent of a symmetric polynomial is a partition
    const auto& [lead, c] = *rest.terms().rbegin();
    std::vector<int> parts;
    for (int x : lead)
      if (x > 0) parts.push_back(x);
    Partition lambda(parts);
    const Integer mult = c;
    SymPoly s = schur_poly(lambda, p.nvars());
    s *= mult;
    rest -= s;
    if (mult < 0) out.is_virtual = true;
    out.terms.emplace_back(std::move(lambda), mult);
  }
  return out;
}

FoulkesReport foulkes_check(int m, int d) {
  if (m < 1 || d < m) fail(Errc::BadRange, "foulkes_check needs 1 <= m <= d");
  FoulkesReport r;
  r.m = m;
  r.d = d;
  r.nvars = d;
  const auto inner = schur_decompose(sym_of_sym_char(m, d, d));
  const auto outer = schur_decompose(sym_of_sym_char(d, m, d));
  r.contained = true;
  for (const auto& [lambda, mult] : inner.terms) {
    const Integer other = outer.multiplicity(lambda);
    if (mult > other) r.contained = false;
    r.witnesses.push_back({lambda, mult, other});
  }
  for (const auto& [lambda, mult] : outer.terms)
    if (inner.multiplicity(lambda) == 0) r.witnesses.push_back({lambda, 0, mult});
  std::sort(r.witnesses.begin(), r.witnesses.end(),
            [](const FoulkesWitness& a, const FoulkesWitness& b) { return a.lambda > b.lambda; });
  return r;
}

bool hermite_check(int a, int b) { return sym_of_sym_char(a, b, 2) == sym_of_sym_char(b, a, 2); }

}  // namespace chowlab
