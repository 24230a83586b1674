#include "chowlab/exactla.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "chowlab/error.hpp"
#include "modular_internal.hpp"

namespace chowlab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(Errc::BadRange, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) fail(Errc::ParseError, "empty rational");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s, 10));
    return make_rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "not a rational: '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> triplets)
    : rows_(rows), cols_(cols) {
  for (const auto& e : triplets)
    if (e.row >= rows || e.col >= cols) fail(Errc::BadRange, "matrix entry index out of range");
  std::sort(triplets.begin(), triplets.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  entries_.reserve(triplets.size());
  for (auto& e : triplets) {
    if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col) {
      entries_.back().value += e.value;
    } else {
      if (!entries_.empty() && entries_.back().value == 0) entries_.pop_back();
      entries_.push_back(std::move(e));
    }
  }
  if (!entries_.empty() && entries_.back().value == 0) entries_.pop_back();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  std::vector<MatrixEntry> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, Integer(1)});
  return IntMatrix(n, n, std::move(t));
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Integer>>& dense) {
  const std::size_t r = dense.size();
  const std::size_t c = r == 0 ? 0 : dense.front().size();
  std::vector<MatrixEntry> t;
  for (std::size_t i = 0; i < r; ++i) {
    if (dense[i].size() != c) fail(Errc::BadShape, "ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (dense[i][j] != 0) t.push_back({i, j, dense[i][j]});
  }
  return IntMatrix(r, c, std::move(t));
}

Integer IntMatrix::at(std::size_t row, std::size_t col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                             [](const MatrixEntry& e, const std::pair<std::size_t, std::size_t>& k) {
                               return e.row != k.first ? e.row < k.first : e.col < k.second;
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_, 0));
  for (const auto& e : entries_) d[e.row][e.col] = e.value;
  return d;
}

IntMatrix IntMatrix::transposed() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return IntMatrix(cols_, rows_, std::move(t));
}

std::vector<Integer> IntMatrix::apply(std::span<const Integer> v) const {
  if (v.size() != cols_) fail(Errc::BadShape, "vector length does not match column count");
  std::vector<Integer> out(rows_, 0);
  for (const auto& e : entries_) out[e.row] += e.value * v[e.col];
  return out;
}

std::vector<Rational> IntMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) fail(Errc::BadShape, "vector length does not match column count");
  std::vector<Rational> out(rows_, 0);
  for (const auto& e : entries_) out[e.row] += Rational(e.value) * v[e.col];
  return out;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(Errc::BadShape, "incompatible matrix product");
  std::vector<std::vector<std::size_t>> rhs_rows(rhs.rows_);
  for (std::size_t k = 0; k < rhs.entries_.size(); ++k) rhs_rows[rhs.entries_[k].row].push_back(k);
  std::vector<MatrixEntry> t;
  for (const auto& e : entries_)
    for (std::size_t k : rhs_rows[e.col]) {
      const auto& f = rhs.entries_[k];
      t.push_back({e.row, f.col, e.value * f.value});
    }
  return IntMatrix(rows_, rhs.cols_, std::move(t));
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_ids,
                               std::span<const std::size_t> col_ids) const {
  std::unordered_map<std::size_t, std::size_t> rmap, cmap;
  for (std::size_t i = 0; i < row_ids.size(); ++i) rmap.emplace(row_ids[i], i);
  for (std::size_t j = 0; j < col_ids.size(); ++j) cmap.emplace(col_ids[j], j);
  std::vector<MatrixEntry> t;
  for (const auto& e : entries_) {
    auto r = rmap.find(e.row);
    if (r == rmap.end()) continue;
    auto c = cmap.find(e.col);
    if (c == cmap.end()) continue;
    t.push_back({r->second, c->second, e.value});
  }
  return IntMatrix(row_ids.size(), col_ids.size(), std::move(t));
}

void IntMatrix::dump(std::ostream& os) const {
  os << rows_ << ' ' << cols_ << '\n';
  for (const auto& e : entries_) os << e.row << ' ' << e.col << ' ' << e.value.get_str() << '\n';
}

std::string IntMatrix::dump_string() const {
  std::ostringstream os;
  dump(os);
  return os.str();
}

IntMatrix IntMatrix::parse(std::istream& is) {
  std::size_t r = 0, c = 0;
  if (!(is >> r >> c)) fail(Errc::ParseError, "matrix header must be 'ROWS COLS'");
  std::vector<MatrixEntry> t;
  std::size_t i = 0, j = 0;
  std::string value;
  while (is >> i >> j >> value) {
    try {
      t.push_back({i, j, Integer(value, 10)});
    } catch (const std::invalid_argument&) {
      fail(Errc::ParseError, "bad matrix entry value '" + value + "'");
    }
  }
  if (!is.eof()) fail(Errc::ParseError, "trailing garbage in matrix dump");
  return IntMatrix(r, c, std::move(t));
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    const auto& x = a.entries_[k];
    const auto& y = b.entries_[k];
    if (x.row != y.row || x.col != y.col || x.value != y.value) return false;
  }
  return true;
}

// ---------------------------------------------------------------- blocks

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

BlockDecomposition connected_blocks(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  DisjointSets sets(r + c);
  std::vector<char> row_used(r, 0), col_used(c, 0);
  for (const auto& e : m.entries()) {
    sets.unite(e.row, r + e.col);
    row_used[e.row] = col_used[e.col] = 1;
  }
  BlockDecomposition out;
  std::unordered_map<std::size_t, std::size_t> block_of_root;
  auto block_for = [&](std::size_t node) -> MatrixBlock& {
    const std::size_t root = sets.find(node);
    auto [it, inserted] = block_of_root.emplace(root, out.blocks.size());
    if (inserted) out.blocks.emplace_back();
    return out.blocks[it->second];
  };
  for (std::size_t j = 0; j < c; ++j) {
    if (col_used[j])
      block_for(r + j).cols.push_back(j);
    else
      out.empty_cols.push_back(j);
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (row_used[i])
      block_for(i).rows.push_back(i);
    else
      out.empty_rows.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------- exact rank

namespace {

// Fraction-free elimination; returns rank. Pivot: smallest magnitude entry in
// the current column among the remaining rows.
std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  Integer prev = 1;
  std::size_t rank = 0;
  Integer t;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = rank; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      if (piv == rows || mpz_cmpabs(a[i][col].get_mpz_t(), a[piv][col].get_mpz_t()) < 0) piv = i;
    }
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    const Integer& p = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      auto& row = a[i];
      const Integer f = row[col];
      for (std::size_t j = col + 1; j < cols; ++j) {
        // row[j] = (p*row[j] - f*a[rank][j]) / prev, exact
        mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), p.get_mpz_t());
        if (f != 0 && a[rank][j] != 0) {
          mpz_mul(t.get_mpz_t(), f.get_mpz_t(), a[rank][j].get_mpz_t());
          mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), t.get_mpz_t());
        }
        if (prev != 1) mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_exact(const IntMatrix& m) {
  std::size_t total = 0;
  for (const auto& block : connected_blocks(m).blocks) {
    if (block.rows.size() == 1 || block.cols.size() == 1) {
      ++total;  // a connected block with a nonzero entry
      continue;
    }
    total += bareiss_rank(m.submatrix(block.rows, block.cols).to_dense());
  }
  return total;
}

ModularRank rank_multi_modular(const IntMatrix& m, std::size_t prime_count, std::uint64_t seed) {
  ModularRank out;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < prime_count; ++k) {
    std::uint64_t p;
    do {
      p = random_prime(rng, 60);
    } while (std::find(out.primes.begin(), out.primes.end(), p) != out.primes.end());
    out.primes.push_back(p);
    out.ranks.push_back(rank_mod_p(m, p));
  }
  if (!out.ranks.empty()) {
    out.rank = *std::max_element(out.ranks.begin(), out.ranks.end());
    out.agree = std::all_of(out.ranks.begin(), out.ranks.end(),
                            [&](std::size_t r) { return r == out.rank; });
  }
  out.full_rank = out.rank == std::min(m.rows(), m.cols());
  return out;
}

// ---------------------------------------------------------------- kernels

namespace {

struct RationalRref {
  std::vector<std::vector<Rational>> rows;  // reduced rows, one per pivot
  std::vector<std::size_t> pivots;
};

RationalRref rref(std::vector<std::vector<Rational>> a, std::size_t cols) {
  RationalRref out;
  std::size_t rank = 0;
  const std::size_t nrows = a.size();
  for (std::size_t col = 0; col < cols && rank < nrows; ++col) {
    std::size_t piv = nrows;
    for (std::size_t i = rank; i < nrows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == nrows) continue;
    std::swap(a[rank], a[piv]);
    const Rational inv = 1 / a[rank][col];
    for (std::size_t j = col; j < a[rank].size(); ++j) a[rank][j] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < a[i].size(); ++j)
        if (a[rank][j] != 0) a[i][j] -= f * a[rank][j];
    }
    out.pivots.push_back(col);
    ++rank;
  }
  a.resize(rank);
  out.rows = std::move(a);
  return out;
}

std::vector<std::vector<Rational>> dense_rational(const IntMatrix& m) {
  std::vector<std::vector<Rational>> d(m.rows(), std::vector<Rational>(m.cols(), 0));
  for (const auto& e : m.entries()) d[e.row][e.col] = e.value;
  return d;
}

std::vector<Integer> primitive_integer(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) return out;
  bool negate = false;
  for (const auto& x : out)
    if (x != 0) {
      negate = x < 0;
      break;
    }
  if (negate) g = -g;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

// Kernel of one connected block, vectors in block-local coordinates, tagged by
// their free column.
std::vector<std::pair<std::size_t, std::vector<Integer>>> block_kernel_rational(const IntMatrix& b) {
  const std::size_t cols = b.cols();
  std::vector<std::vector<Rational>> rows;
  if (b.rows() > cols) {
    // Tall block: keep a maximal subset of rows independent mod p. These are
    // independent over Q, so the subset kernel contains the true kernel;
    // equality is confirmed against every row below.
    const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
    auto keep = independent_rows_mod_p(b, p);
    auto sub = b.submatrix(keep, [&] {
      std::vector<std::size_t> all(cols);
      std::iota(all.begin(), all.end(), 0);
      return all;
    }());
    rows = dense_rational(sub);
  } else {
    rows = dense_rational(b);
  }
  auto build = [&](const RationalRref& r) {
    std::vector<std::pair<std::size_t, std::vector<Integer>>> out;
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : r.pivots) is_pivot[c] = 1;
    for (std::size_t f = 0; f < cols; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Rational> v(cols, 0);
      v[f] = 1;
      for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.rows[k][f];
      out.emplace_back(f, primitive_integer(v));
    }
    return out;
  };
  auto result = build(rref(std::move(rows), cols));
  if (b.rows() > cols) {
    bool ok = true;
    for (const auto& [f, v] : result) {
      for (const auto& x : b.apply(std::span<const Integer>(v)))
        if (x != 0) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (!ok) result = build(rref(dense_rational(b), cols));
  }
  return result;
}

}  // namespace

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m, const Field& field) {
  const auto* pf = std::get_if<PrimeField>(&field);
  if (pf) check_modulus(pf->p);
  const auto decomposition = connected_blocks(m);
  std::vector<std::pair<std::size_t, std::vector<Integer>>> tagged;
  for (std::size_t c : decomposition.empty_cols) {
    std::vector<Integer> v(m.cols(), 0);
    v[c] = 1;
    tagged.emplace_back(c, std::move(v));
  }
  for (const auto& block : decomposition.blocks) {
    const auto sub = m.submatrix(block.rows, block.cols);
    auto local = pf ? block_kernel_mod_p(sub, pf->p) : block_kernel_rational(sub);
    for (auto& [f, v] : local) {
      std::vector<Integer> global(m.cols(), 0);
      for (std::size_t j = 0; j < v.size(); ++j) global[block.cols[j]] = std::move(v[j]);
      tagged.emplace_back(block.cols[f], std::move(global));
    }
  }
  std::sort(tagged.begin(), tagged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<Integer>> out;
  out.reserve(tagged.size());
  for (auto& t : tagged) out.push_back(std::move(t.second));
  return out;
}

SolveResult solve_linear(const IntMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) fail(Errc::BadShape, "rhs length does not match row count");
  auto aug = dense_rational(m);
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  const auto r = rref(std::move(aug), m.cols() + 1);
  if (!r.pivots.empty() && r.pivots.back() == m.cols())
    fail(Errc::Inconsistent, "linear system has no solution");
  SolveResult out;
  out.solution.assign(m.cols(), 0);
  for (std::size_t k = 0; k < r.pivots.size(); ++k) out.solution[r.pivots[k]] = r.rows[k][m.cols()];
  out.underdetermined = r.pivots.size() < m.cols();
  return out;
}

IntMatrix integer_rows(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t r = dense.size();
  const std::size_t c = r == 0 ? 0 : dense.front().size();
  std::vector<MatrixEntry> t;
  for (std::size_t i = 0; i < r; ++i) {
    if (dense[i].size() != c) fail(Errc::BadShape, "ragged dense matrix");
    Integer l = 1;
    for (const auto& x : dense[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t j = 0; j < c; ++j)
      if (dense[i][j] != 0) t.push_back({i, j, dense[i][j].get_num() * (l / dense[i][j].get_den())});
  }
  return IntMatrix(r, c, std::move(t));
}

}  // namespace chowlab
