#include "chowlab/foulkes_howe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "chowlab/error.hpp"

namespace chowlab {

namespace {

constexpr double kWorkGuard = 5e8;

Integer binomial(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

// Non-decreasing index sequences of length len into [0, alphabet), i.e.
// multisets, in lexicographic order.
std::vector<std::vector<ExponentVector>> multisets(const std::vector<ExponentVector>& alphabet, int len) {
  std::vector<std::vector<ExponentVector>> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == idx.size()) {
      std::vector<ExponentVector> e;
      e.reserve(idx.size());
      for (auto i : idx) e.push_back(alphabet[i]);
      out.push_back(std::move(e));
      return;
    }
    for (std::size_t i = from; i < alphabet.size(); ++i) {
      idx[pos] = i;
      rec(pos + 1, i);
    }
  };
  rec(0, 0);
  return out;
}

void check_params(int d, int n, int m) {
  if (d < 1 || n < 0 || m < 0) fail(Errc::BadRange, "need d >= 1, n >= 0, m >= 0");
}

// Exponent matrices packed into one word, `bits` per entry.
struct Packing {
  int d = 0, cols = 0, bits = 0;
  std::uint64_t mask = 0;

  Packing(int d_, int n, int m) : d(d_), cols(n + 1) {
    bits = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(m))));
    if (d * cols * bits > 64) fail(Errc::TooLarge, "exponent matrix does not fit the packed key");
    mask = (std::uint64_t{1} << bits) - 1;
  }
  int shift(int row, int col) const { return (row * cols + col) * bits; }
  int get(std::uint64_t key, int row, int col) const {
    return static_cast<int>((key >> shift(row, col)) & mask);
  }
  std::uint64_t encode(const std::vector<ExponentVector>& rows) const {
    std::uint64_t key = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < cols; ++j)
        key |= static_cast<std::uint64_t>(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
               << shift(i, j);
    return key;
  }
  // rows in descending lexicographic order
  bool canonical(std::uint64_t key) const {
    for (int i = 0; i + 1 < d; ++i)
      for (int j = 0; j < cols; ++j) {
        const int a = get(key, i, j), b = get(key, i + 1, j);
        if (a != b) {
          if (a < b) return false;
          break;
        }
      }
    return true;
  }
};

// Packed keys of the words with content alpha.
std::vector<std::uint64_t> generator_keys(const ExponentVector& alpha, const Packing& pk) {
  std::vector<int> word;
  for (std::size_t j = 0; j < alpha.size(); ++j) word.insert(word.end(), static_cast<std::size_t>(alpha[j]), static_cast<int>(j));
  std::vector<std::uint64_t> keys;
  do {
    std::uint64_t key = 0;
    for (int i = 0; i < pk.d; ++i) key |= std::uint64_t{1} << pk.shift(i, word[static_cast<std::size_t>(i)]);
    keys.push_back(key);
  } while (std::next_permutation(word.begin(), word.end()));
  return keys;
}

}  // namespace

std::map<FactorMonomial, Integer> mu_sharp_generator(const ExponentVector& alpha, int d, int n) {
  if (static_cast<int>(alpha.size()) != n + 1) fail(Errc::BadShape, "alpha must have n+1 entries");
  if (std::any_of(alpha.begin(), alpha.end(), [](int a) { return a < 0; }) ||
      std::accumulate(alpha.begin(), alpha.end(), 0) != d)
    fail(Errc::BadDegree, "alpha must be a nonnegative vector summing to d");
  std::vector<int> word;
  for (std::size_t j = 0; j < alpha.size(); ++j) word.insert(word.end(), static_cast<std::size_t>(alpha[j]), static_cast<int>(j));
  std::map<FactorMonomial, Integer> out;
  do {
    FactorMonomial e(static_cast<std::size_t>(d), ExponentVector(static_cast<std::size_t>(n) + 1, 0));
    for (std::size_t i = 0; i < word.size(); ++i) e[i][static_cast<std::size_t>(word[i])] = 1;
    out[e] += 1;
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<DomainBasisElt> fh_domain_basis(int d, int n, int m) {
  check_params(d, n, m);
  return multisets(compositions(d, n + 1), m);
}

std::vector<CodomainBasisElt> fh_codomain_basis(int d, int n, int m) {
  check_params(d, n, m);
  return multisets(compositions(m, n + 1), d);
}

Integer fh_domain_dim(int d, int n, int m) {
  const Integer forms = binomial(Integer(d + n), static_cast<unsigned long>(n));
  return binomial(forms + m - 1, static_cast<unsigned long>(m));
}

Integer fh_codomain_dim(int d, int n, int m) {
  const Integer sym = binomial(Integer(m + n), static_cast<unsigned long>(n));
  return binomial(sym + d - 1, static_cast<unsigned long>(d));
}

Integer orbit_size(const CodomainBasisElt& rows) {
  Integer size;
  mpz_fac_ui(size.get_mpz_t(), rows.size());
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), j - i);
    size /= f;
    i = j;
  }
  return size;
}

FHMatrix fh_matrix(int d, int n, int m) {
  check_params(d, n, m);
  const Integer cols_dim = fh_domain_dim(d, n, m);
  const Integer rows_dim = fh_codomain_dim(d, n, m);
  // worst-case expansion size per column is the largest multinomial to the m
  double per_column = 1;
  {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(d));
    per_column = std::pow(f.get_d(), m);
  }
  if (cols_dim.get_d() * std::min(per_column, rows_dim.get_d() * 10) > kWorkGuard || rows_dim > 5'000'000)
    fail(Errc::TooLarge, "Foulkes-Howe matrix exceeds the work guard");
  const Packing pk(d, n, m);

  FHMatrix out;
  out.d = d;
  out.n = n;
  out.m = m;
  out.domain = fh_domain_basis(d, n, m);
  out.codomain = fh_codomain_basis(d, n, m);

  std::unordered_map<std::uint64_t, std::size_t> row_of;
  row_of.reserve(out.codomain.size() * 2);
  for (std::size_t r = 0; r < out.codomain.size(); ++r) row_of.emplace(pk.encode(out.codomain[r]), r);

  const auto alphas = compositions(d, n + 1);
  std::map<ExponentVector, std::vector<std::uint64_t>> gen;
  for (const auto& a : alphas) gen.emplace(a, generator_keys(a, pk));

  std::vector<MatrixEntry> triplets;
  std::unordered_map<std::uint64_t, std::int64_t> state, next;
  for (std::size_t c = 0; c < out.domain.size(); ++c) {
    state.clear();
    state.emplace(0, 1);
    for (const auto& alpha : out.domain[c]) {
      next.clear();
      const auto& keys = gen.at(alpha);
      for (const auto& [key, coeff] : state)
        for (std::uint64_t g : keys) next[key + g] += coeff;
      std::swap(state, next);
    }
    for (const auto& [key, coeff] : state) {
      if (!pk.canonical(key)) continue;
      auto it = row_of.find(key);
      if (it == row_of.end()) fail(Errc::CheckFailed, "expanded monomial outside the codomain basis");
      triplets.push_back({it->second, c, Integer(static_cast<long>(coeff))});
    }
  }
  out.matrix = IntMatrix(out.codomain.size(), out.domain.size(), std::move(triplets));
  return out;
}

FHReport fh_analysis(const FHMatrix& fh, std::uint64_t seed, std::size_t exact_limit,
                     std::size_t prime_count) {
  FHReport r;
  r.d = fh.d;
  r.n = fh.n;
  r.m = fh.m;
  r.dim_domain = fh.matrix.cols();
  r.dim_codomain = fh.matrix.rows();
  if (std::min(r.dim_domain, r.dim_codomain) <= exact_limit) {
    r.rank = rank_exact(fh.matrix);
    r.full_rank_certified = r.rank == std::min(r.dim_domain, r.dim_codomain);
  } else {
    const auto cert = rank_multi_modular(fh.matrix, std::max<std::size_t>(prime_count, 3), seed);
    r.modular = true;
    r.rank = cert.rank;
    r.primes = cert.primes;
    r.prime_ranks = cert.ranks;
    r.full_rank_certified = cert.full_rank;
  }
  r.dim_J = r.dim_domain - r.rank;
  r.dim_coker = r.dim_codomain - r.rank;
  return r;
}

FHReport fh_analysis(int d, int n, int m, std::uint64_t seed) { return fh_analysis(fh_matrix(d, n, m), seed); }

std::vector<std::vector<Integer>> fh_kernel_mod_p(int d, int n, int m, std::uint64_t p) {
  return kernel_basis(fh_matrix(d, n, m).matrix, PrimeField{p});
}

std::string z_name(const ExponentVector& alpha) {
  const bool short_form = std::all_of(alpha.begin(), alpha.end(), [](int a) { return a < 10; });
  std::string s = "z";
  if (!short_form) s += "(";
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (!short_form && j) s += ",";
    s += std::to_string(alpha[j]);
  }
  if (!short_form) s += ")";
  return s;
}

std::string domain_vector_to_string(const std::vector<DomainBasisElt>& domain, const std::vector<Integer>& v) {
  if (v.size() != domain.size()) fail(Errc::BadShape, "vector length does not match the domain basis");
  std::string s;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    const Integer mag = abs(v[c]);
    if (s.empty())
      s += v[c] < 0 ? "-" : "";
    else
      s += v[c] < 0 ? " - " : " + ";
    if (mag != 1) s += mag.get_str() + "*";
    const auto& mono = domain[c];
    std::size_t i = 0;
    bool first = true;
    while (i < mono.size()) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i]) ++j;
      if (!first) s += "*";
      s += z_name(mono[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      first = false;
      i = j;
    }
    if (mono.empty()) s += "1";
  }
  return s.empty() ? "0" : s;
}

}  // namespace chowlab
