#include <doctest.h>

#include <map>
#include <set>

#include "chowlab/combinatorics.hpp"
#include "chowlab/error.hpp"

using namespace chowlab;

namespace {

Tableau tab(std::vector<std::vector<int>> rows) { return Tableau{std::move(rows)}; }

// Counts partitions by the standard recurrence on the largest part.
std::uint64_t partition_count(int n, int max_part) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += partition_count(n - k, k);
  return total;
}

}  // namespace

TEST_CASE("partitions_of") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(0)[0].length() == 0);
  const auto p3 = partitions_of(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({3}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1, 1}));
  CHECK(partitions_of(5).size() == 7);
  for (int d = 0; d <= 12; ++d) CHECK(partitions_of(d).size() == partition_count(d, d));
}

TEST_CASE("partition validation and parsing") {
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK(Partition::parse("5,2,1") == Partition({5, 2, 1}));
  CHECK(Partition::parse("(5,2,1)") == Partition({5, 2, 1}));
  CHECK(Partition::parse("521") == Partition({5, 2, 1}));
  CHECK(Partition({5, 2, 1}).to_string() == "(5,2,1)");
  CHECK(Partition().to_string() == "()");
}

TEST_CASE("transpose") {
  CHECK(transpose(Partition({5, 2, 1})) == Partition({3, 2, 1, 1, 1}));
  CHECK(transpose(Partition({4})) == Partition({1, 1, 1, 1}));
  for (int d = 0; d <= 8; ++d)
    for (const auto& l : partitions_of(d)) CHECK(transpose(transpose(l)) == l);
}

TEST_CASE("syt_count and enumerate_syt") {
  CHECK(syt_count(Partition({6})) == 1);
  CHECK(syt_count(Partition({2, 1})) == 2);
  CHECK(enumerate_syt(Partition({1, 1, 1})).size() == 1);
  CHECK(enumerate_syt(Partition({2, 1})).size() == 2);
  for (int d = 1; d <= 8; ++d)
    for (const auto& l : partitions_of(d)) {
      const auto all = enumerate_syt(l);
      CHECK(all.size() == syt_count(l));
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].is_standard());
        CHECK(all[i].shape() == l);
        if (i) CHECK(all[i - 1].reading_word() < all[i].reading_word());
      }
    }
  CHECK_THROWS_AS(enumerate_syt(Partition({13})), Error);
}

TEST_CASE("sum of squared SYT counts is d factorial") {
  for (int d = 1; d <= 7; ++d) {
    std::uint64_t sum = 0;
    for (const auto& l : partitions_of(d)) sum += syt_count(l) * syt_count(l);
    CHECK(sum == factorial(d));
  }
}

TEST_CASE("descent statistics of permutations") {
  auto s = descent_stats(Permutation({1, 3, 2}));
  CHECK(s.des == 1);
  CHECK(s.maj == 2);
  s = descent_stats(Permutation({3, 2, 1}));
  CHECK(s.des == 2);
  CHECK(s.maj == 3);
  CHECK(s.descent_set == std::vector<int>{1, 2});
  s = descent_stats(Permutation::identity(5));
  CHECK(s.des == 0);
  CHECK(s.maj == 0);
}

TEST_CASE("maximal descent count is d-1") {
  for (int d = 1; d <= 6; ++d) {
    int best = 0;
    for_each_permutation(d, [&](const Permutation& p) { best = std::max(best, descent_stats(p).des); });
    CHECK(best == d - 1);
  }
}

TEST_CASE("descent statistics of tableaux") {
  auto s = descent_stats(tab({{1, 3, 5, 7, 8}, {2, 6}, {4}}));
  CHECK(s.des == 3);
  CHECK(s.maj == 9);
  s = descent_stats(tab({{1, 2, 3, 4}}));
  CHECK(s.des == 0);
  CHECK(s.maj == 0);
  s = descent_stats(tab({{1}, {2}, {3}, {4}, {5}}));
  CHECK(s.des == 4);
  CHECK(s.maj == 10);
  try {
    descent_stats(tab({{2, 1}}));
    FAIL("expected NotStandard");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotStandard);
  }
}

TEST_CASE("rsk examples") {
  auto [p, q] = rsk(Permutation::identity(4));
  CHECK(p == tab({{1, 2, 3, 4}}));
  CHECK(q == tab({{1, 2, 3, 4}}));
  std::tie(p, q) = rsk(Permutation({3, 2, 1}));
  CHECK(p == tab({{1}, {2}, {3}}));
  CHECK(q == tab({{1}, {2}, {3}}));
  std::tie(p, q) = rsk(Permutation({2, 1, 3}));
  CHECK(p == tab({{1, 3}, {2}}));
  CHECK(q == tab({{1, 3}, {2}}));
}

TEST_CASE("property: RSK is injective and preserves descent sets") {
  for (int d = 1; d <= 6; ++d) {
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> seen;
    std::size_t count = 0;
    for_each_permutation(d, [&](const Permutation& sigma) {
      const auto [p, q] = rsk(sigma);
      CHECK(p.is_standard());
      CHECK(q.is_standard());
      CHECK(p.shape() == q.shape());
      CHECK(descent_stats(q).descent_set == descent_stats(sigma).descent_set);
      seen.insert({p.rows, q.rows});
      ++count;
    });
    CHECK(seen.size() == count);
    CHECK(count == factorial(d));
  }
}

TEST_CASE("property: des/maj distribution over S_d equals the SYT-weighted one") {
  for (int d = 1; d <= 7; ++d) {
    std::map<std::pair<int, int>, std::uint64_t> lhs, rhs;
    for_each_permutation(d, [&](const Permutation& s) {
      const auto st = descent_stats(s);
      ++lhs[{st.des, st.maj}];
    });
    for (const auto& l : partitions_of(d))
      for (const auto& t : enumerate_syt(l)) {
        const auto st = descent_stats(t);
        rhs[{st.des, st.maj}] += syt_count(l);
      }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tableau JSON round trip") {
  const Tableau t = tab({{1, 3, 5, 7, 8}, {2, 6}, {4}});
  CHECK(tableau_to_json(t) == "[[1,3,5,7,8],[2,6],[4]]");
  CHECK(tableau_from_json(tableau_to_json(t)) == t);
  CHECK_THROWS_AS(tableau_from_json("[[1,2],"), Error);
  CHECK_THROWS_AS(tableau_from_json("{\"a\":1}"), Error);
}
