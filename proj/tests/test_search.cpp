#include <doctest.h>

#include "naive_oracle.hpp"
#include "sqscope/errors.hpp"
#include "sqscope/search.hpp"

using namespace sqscope;
using namespace std::chrono_literals;

namespace {

std::pair<std::size_t, std::size_t> lens(std::size_t u, std::size_t U) { return {u, U}; }

}  // namespace

TEST_CASE("impossible prefix runs") {
  for (const auto& q : {ExistenceQuery{1, 6, 8, 2, 16}, ExistenceQuery{1, 6, 9, 2, 18},
                        ExistenceQuery{2, 6, 9, 2, 20}}) {
    const auto r = exists_prefix_run(q, 10000ms);
    CHECK(r.status == SearchStatus::not_found);
    CHECK_FALSE(r.witness);
    CHECK(r.searched_alphabet == 2);
    CHECK(r.searched_length == q.scan_length);
    CHECK(r.wall_ms < 10000.0);
  }
}

TEST_CASE("w_1 is the least witness for (1, 3, 5)") {
  const auto r = exists_prefix_run({1, 3, 5, 2, 10}, 10000ms);
  REQUIRE(r.found());
  CHECK(r.witness->size() == 10);
  CHECK(r.witness->str() == "abaababaab");
  const auto pairs = naive::fs_pairs(r.witness->str());
  REQUIRE(pairs.count(1));
  CHECK(pairs.at(1).first.size() == 3);
  CHECK(pairs.at(1).second.size() == 5);
  // Default scan length is 2|U| + m - 1.
  CHECK(exists_prefix_run({1, 3, 5}, 10000ms).searched_length == 10);
}

TEST_CASE("search agrees with the brute-force scan") {
  for (std::size_t m = 1; m <= 2; ++m) {
    for (std::size_t u = 2; u <= 6; ++u) {
      for (std::size_t U = u + 1; U < 2 * u; ++U) {
        const std::size_t n = 2 * U + m - 1;
        if (n > 18) continue;
        const auto r = exists_prefix_run({m, u, U, 2, n}, 10000ms);
        const auto brute = scan_fs_prefix_words(n, 2, m, lens(u, U));
        CHECK(r.found() == !brute.empty());
        if (r.found()) CHECK(*r.witness == brute.front());
      }
    }
  }
}

TEST_CASE("ternary search") {
  const auto r = exists_prefix_run({1, 3, 5, 3, 10}, 10000ms);
  REQUIRE(r.found());
  CHECK(r.witness->str() == "abaababaab");
  CHECK(r.searched_alphabet == 3);
}

TEST_CASE("budget exhaustion is reported, never a silent miss") {
  const auto r = exists_prefix_run({1, 6, 9, 3, 40}, -1ms);
  CHECK(r.status == SearchStatus::inconclusive);
  CHECK_FALSE(r.witness);
  CHECK(to_string(r.status) == "inconclusive");
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(exists_prefix_run({0, 3, 5}), DomainError);
  CHECK_THROWS_AS(exists_prefix_run({1, 3, 6}), DomainError);
  CHECK_THROWS_AS(exists_prefix_run({1, 5, 3}), DomainError);
  CHECK_THROWS_AS(exists_prefix_run({1, 3, 5, 2, 9}), DomainError);
  CHECK_THROWS_AS(exists_prefix_run({1, 3, 5, 1}), DomainError);
}

TEST_CASE("w_m is unique up to renaming") {
  for (std::size_t m = 1; m <= 2; ++m) {
    const std::size_t n = 7 * m + 3;
    const auto words = scan_fs_prefix_words(n, 2, m, lens(2 * m + 1, 3 * m + 2));
    REQUIRE(words.size() == 2);
    for (const auto& w : words) {
      const std::string want = m == 1 ? "babbababba" : "abaababaabaababaa";
      std::string renamed = want;
      for (char& ch : renamed) ch = ch == 'a' ? 'b' : 'a';
      CHECK((w.str() == want || w.str() == renamed));
    }
    CHECK(words[0] != words[1]);
  }
}

TEST_CASE("no shorter binary word starts with an equal-length FS run") {
  for (std::size_t m = 1; m <= 2; ++m) {
    for (std::size_t n = 1; n < 7 * m + 3; ++n) {
      CHECK(scan_fs_prefix_words(n, 2, m).empty());
    }
  }
  // Without the length constraint a length-10 binary word already works.
  CHECK_FALSE(scan_fs_prefix_words(10, 2, 1).empty());
}

TEST_CASE("prefix-run predicate") {
  CHECK(has_fs_prefix_run(Word::parse("abaababaabaababaa"), 2));
  CHECK(has_fs_prefix_run(Word::parse("abaababaabaababaa"), 2, lens(5, 8)));
  CHECK_FALSE(has_fs_prefix_run(Word::parse("abaababaabaababaa"), 2, lens(3, 5)));
  CHECK_FALSE(has_fs_prefix_run(Word::parse("abaababaabaababaa"), 3));
  CHECK_FALSE(has_fs_prefix_run(Word::parse("abaababaabaababa"), 2));
  CHECK_THROWS_AS(scan_fs_prefix_words(30, 2, 1), DomainError);
}
