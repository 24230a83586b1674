#include <algorithm>

#include "chowlab/error.hpp"
#include "chowlab/exactla.hpp"
#include "modular_internal.hpp"

namespace chowlab {

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "GMP ui functions must take 64-bit operands");

std::uint64_t reduce_mod(const Integer& x, std::uint64_t p) { return mpz_fdiv_ui(x.get_mpz_t(), p); }

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n with these bases.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits) {
  if (bits < 3 || bits > 62) fail(Errc::BadRange, "prime size must be between 3 and 62 bits");
  const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
  std::uniform_int_distribution<std::uint64_t> dist(lo, (lo << 1) - 1);
  for (;;) {
    const std::uint64_t c = dist(rng) | 1;
    if (is_prime_u64(c)) return c;
  }
}

void check_modulus(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62)) fail(Errc::BadRange, "modulus must be below 2^62");
  if (!is_prime_u64(p)) fail(Errc::NonPrime, std::to_string(p) + " is not prime");
}

namespace {

struct DenseModP {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint64_t> a;
  std::uint64_t* row(std::size_t i) { return a.data() + i * cols; }
};

DenseModP reduce_dense(const IntMatrix& m, std::uint64_t p) {
  DenseModP d{m.rows(), m.cols(), std::vector<std::uint64_t>(m.rows() * m.cols(), 0)};
  for (const auto& e : m.entries()) d.a[e.row * d.cols + e.col] = reduce_mod(e.value, p);
  return d;
}

// Row echelon form in place; returns pivot columns and, if requested, the
// original index of each pivot row.
std::vector<std::size_t> eliminate(DenseModP& d, std::uint64_t p, bool reduced,
                                   std::vector<std::size_t>* pivot_rows) {
  std::vector<std::size_t> order(d.rows);
  for (std::size_t i = 0; i < d.rows; ++i) order[i] = i;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d.cols && rank < d.rows; ++col) {
    std::size_t piv = d.rows;
    for (std::size_t i = rank; i < d.rows; ++i)
      if (d.a[i * d.cols + col] != 0) {
        piv = i;
        break;
      }
    if (piv == d.rows) continue;
    if (piv != rank) {
      std::swap_ranges(d.row(piv), d.row(piv) + d.cols, d.row(rank));
      std::swap(order[piv], order[rank]);
    }
    std::uint64_t* prow = d.row(rank);
    const std::uint64_t inv = inv_mod(prow[col], p);
    for (std::size_t j = col; j < d.cols; ++j) prow[j] = mul_mod(prow[j], inv, p);
    const std::size_t start = reduced ? 0 : rank + 1;
    for (std::size_t i = start; i < d.rows; ++i) {
      if (i == rank) continue;
      std::uint64_t* r = d.row(i);
      const std::uint64_t f = r[col];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j = col; j < d.cols; ++j) {
        if (prow[j] == 0) continue;
        std::uint64_t v = r[j] + mul_mod(nf, prow[j], p);
        if (v >= p) v -= p;
        r[j] = v;
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  if (pivot_rows) pivot_rows->assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(rank));
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  check_modulus(p);
  std::size_t total = 0;
  for (const auto& block : connected_blocks(m).blocks) {
    if (block.rows.size() == 1 || block.cols.size() == 1) {
      // rank 1 unless every entry vanishes mod p
      const auto sub = m.submatrix(block.rows, block.cols);
      const bool nonzero = std::any_of(sub.entries().begin(), sub.entries().end(),
                                       [&](const MatrixEntry& e) { return reduce_mod(e.value, p) != 0; });
      total += nonzero ? 1 : 0;
      continue;
    }
    auto d = reduce_dense(m.submatrix(block.rows, block.cols), p);
    total += eliminate(d, p, false, nullptr).size();
  }
  return total;
}

std::vector<std::size_t> independent_rows_mod_p(const IntMatrix& m, std::uint64_t p) {
  auto d = reduce_dense(m, p);
  std::vector<std::size_t> rows;
  eliminate(d, p, false, &rows);
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<std::pair<std::size_t, std::vector<Integer>>> block_kernel_mod_p(const IntMatrix& m,
                                                                            std::uint64_t p) {
  auto d = reduce_dense(m, p);
  const auto pivots = eliminate(d, p, true, nullptr);
  std::vector<char> is_pivot(d.cols, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::pair<std::size_t, std::vector<Integer>>> out;
  for (std::size_t f = 0; f < d.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(d.cols, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const std::uint64_t x = d.a[k * d.cols + f];
      v[pivots[k]] = x == 0 ? 0 : p - x;
    }
    std::uint64_t lead = 0;
    for (auto x : v)
      if (x != 0) {
        lead = x;
        break;
      }
    const std::uint64_t inv = inv_mod(lead, p);
    std::vector<Integer> iv(d.cols);
    for (std::size_t j = 0; j < d.cols; ++j) iv[j] = static_cast<unsigned long>(mul_mod(v[j], inv, p));
    out.emplace_back(f, std::move(iv));
  }
  return out;
}

}  // namespace chowlab
