#include "chowlab/combinatorics.hpp"

#include <cctype>

#include <json.hpp>

#include "chowlab/error.hpp"

namespace chowlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail(Errc::BadShape, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) fail(Errc::BadShape, "partition parts must be weakly decreasing");
  }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  const bool has_separator = text.find(',') != std::string_view::npos;
  int current = -1;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (has_separator)
        current = (current < 0 ? 0 : current * 10) + (ch - '0');
      else
        parts.push_back(ch - '0');
    } else if (ch == ',') {
      if (current < 0) fail(Errc::ParseError, "empty partition part in '" + std::string(text) + "'");
      parts.push_back(current);
      current = -1;
    } else if (ch != '(' && ch != ')' && ch != ' ') {
      fail(Errc::ParseError, "unexpected character in partition '" + std::string(text) + "'");
    }
  }
  if (current >= 0) parts.push_back(current);
  std::erase(parts, 0);
  return Partition(std::move(parts));
}

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  std::vector<char> seen(values_.size() + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)])
      fail(Errc::BadShape, "not a permutation of 1..d");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> v(static_cast<std::size_t>(d));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows)
    if (!r.empty()) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

bool Tableau::is_standard() const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() > rows[i - 1].size()) return false;
  const int d = size();
  std::vector<char> seen(static_cast<std::size_t>(d) + 1, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const int v = rows[i][j];
      if (v < 1 || v > d || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
      if (j > 0 && rows[i][j - 1] >= v) return false;
      if (i > 0 && rows[i - 1][j] >= v) return false;
    }
  }
  return true;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::uint64_t factorial(int n) {
  if (n > 20) fail(Errc::TooLarge, "factorial overflows 64 bits");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

void syt_rec(int next, int d, std::vector<std::vector<int>>& rows, const Partition& shape,
             std::vector<Tableau>& out) {
  if (next > d) {
    out.push_back(Tableau{rows});
    return;
  }
  for (std::size_t i = 0; i < shape.length(); ++i) {
    const auto len = rows[i].size();
    if (static_cast<int>(len) >= shape[i]) continue;
    if (i > 0 && rows[i - 1].size() <= len) continue;
    rows[i].push_back(next);
    syt_rec(next + 1, d, rows, shape, out);
    rows[i].pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
  if (d < 0) fail(Errc::BadRange, "partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(d, d, current, out);
  return out;
}

Partition transpose(const Partition& lambda) {
  std::vector<int> parts;
  const int first = lambda.length() ? lambda[0] : 0;
  for (int j = 0; j < first; ++j) {
    int count = 0;
    for (int p : lambda.parts())
      if (p > j) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

std::uint64_t syt_count(const Partition& lambda) {
  const Partition conj = transpose(lambda);
  // d! / prod(hooks), accumulated as a quotient of exact integers
  std::uint64_t num = factorial(lambda.size());
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      const int hook = (lambda[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
      den *= static_cast<std::uint64_t>(hook);
      const std::uint64_t g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  return num / den;
}

std::vector<Tableau> enumerate_syt(const Partition& lambda) {
  const int d = lambda.size();
  if (d > 12) fail(Errc::TooLarge, "enumerate_syt is limited to |lambda| <= 12");
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(lambda.length());
  syt_rec(1, d, rows, lambda, out);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

DescentStats descent_stats(const Permutation& sigma) {
  DescentStats s;
  const auto& v = sigma.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] > v[i + 1]) {
      s.descent_set.push_back(static_cast<int>(i) + 1);
      ++s.des;
      s.maj += static_cast<int>(i) + 1;
    }
  return s;
}

DescentStats descent_stats(const Tableau& t) {
  if (!t.is_standard()) fail(Errc::NotStandard, "descent statistics need a standard tableau");
  const int d = t.size();
  std::vector<std::size_t> row_of(static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (int v : t.rows[i]) row_of[static_cast<std::size_t>(v)] = i;
  DescentStats s;
  for (int i = 1; i < d; ++i)
    if (row_of[static_cast<std::size_t>(i) + 1] > row_of[static_cast<std::size_t>(i)]) {
      s.descent_set.push_back(i);
      ++s.des;
      s.maj += i;
    }
  return s;
}

std::pair<Tableau, Tableau> rsk(const Permutation& sigma) {
  Tableau p, q;
  const auto& v = sigma.values();
  for (std::size_t k = 0; k < v.size(); ++k) {
    int x = v[k];
    std::size_t row = 0;
    for (;; ++row) {
      if (row == p.rows.size()) {
        p.rows.push_back({x});
        q.rows.push_back({static_cast<int>(k) + 1});
        break;
      }
      auto& r = p.rows[row];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        q.rows[row].push_back(static_cast<int>(k) + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  return {std::move(p), std::move(q)};
}

std::string tableau_to_json(const Tableau& t) { return nlohmann::json(t.rows).dump(); }

Tableau tableau_from_json(std::string_view json) {
  try {
    auto j = nlohmann::json::parse(json);
    return Tableau{j.get<std::vector<std::vector<int>>>()};
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("tableau JSON: ") + e.what());
  }
}

}  // namespace chowlab
