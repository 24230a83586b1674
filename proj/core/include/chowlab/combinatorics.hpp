#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chowlab {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws BadShape if parts are not weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept;
  std::size_t length() const noexcept { return parts_.size(); }
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// "(5,2,1)"; the empty partition prints as "()".
  std::string to_string() const;
  /// Accepts "5,2,1", "(5,2,1)" or "521" (single digits).
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// One-line notation of a bijection of {1..d}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int d);

  const std::vector<int>& values() const noexcept { return values_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// Ragged rows of a Young diagram filling.
struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  int size() const;
  /// Entries 1..d, rows and columns strictly increasing.
  bool is_standard() const;
  std::vector<int> reading_word() const;  // rows top to bottom, left to right

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

struct DescentStats {
  int des = 0;
  int maj = 0;
  std::vector<int> descent_set;  // 1-based positions
};

/// Reverse-lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> partitions_of(int d);
Partition transpose(const Partition& lambda);

/// Hook-length formula.
std::uint64_t syt_count(const Partition& lambda);
/// All standard tableaux ordered lexicographically by reading word.
/// Throws TooLarge for |lambda| > 12.
std::vector<Tableau> enumerate_syt(const Partition& lambda);

DescentStats descent_stats(const Permutation& sigma);
/// i is a descent when i+1 sits in a strictly lower row. Throws NotStandard.
DescentStats descent_stats(const Tableau& t);

/// Row-insertion RSK; returns (P, Q).
std::pair<Tableau, Tableau> rsk(const Permutation& sigma);

/// Calls visit for every permutation of {1..d} in lexicographic order.
template <typename Visit>
void for_each_permutation(int d, Visit&& visit);

std::string tableau_to_json(const Tableau& t);
/// Throws ParseError on malformed input.
Tableau tableau_from_json(std::string_view json);

std::uint64_t factorial(int n);

}  // namespace chowlab

#include <algorithm>
#include <numeric>

template <typename Visit>
void chowlab::for_each_permutation(int d, Visit&& visit) {
  std::vector<int> v(static_cast<std::size_t>(d));
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}
