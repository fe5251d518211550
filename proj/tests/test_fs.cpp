#include <doctest.h>

#include "naive_oracle.hpp"
#include "sqscope/errors.hpp"
#include "sqscope/fs.hpp"
#include "sqscope/squares.hpp"

using namespace sqscope;

namespace {

FsFactorization fac(const char* base, const char* partial, std::size_t lead, std::size_t trail) {
  return {Word::parse(base), Word::parse(partial), lead, trail};
}

// Every primitive binary word of length n, in counting order.
std::vector<Word> primitive_binary(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
    std::vector<Letter> s(n);
    for (std::size_t t = 0; t < n; ++t) s[t] = static_cast<Letter>((code >> t) & 1u);
    Word w(std::move(s), 2);
    if (is_primitive(w)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

TEST_CASE("expand_fs examples") {
  CHECK(expand_fs(fac("ba", "b", 2, 1)).str() == "bababbabababba");
  CHECK(expand_fs(fac("abaaaba", "a", 1, 1)).str() == "abaaabaaabaaabaabaaabaaabaaaba");
  CHECK((expand_fs(fac("aba", "ab", 1, 1)) + Word::parse("a")).str() == "abaababaabaababaa");
}

TEST_CASE("expand_fs rejects invalid factorizations by clause") {
  auto message = [](const FsFactorization& f) {
    try {
      expand_fs(f);
    } catch (const PreconditionError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(fac("abab", "a", 1, 1)).find("not primitive") != std::string::npos);
  CHECK(message(fac("ab", "b", 1, 1)).find("proper prefix") != std::string::npos);
  CHECK(message(fac("ab", "ab", 1, 1)).find("proper prefix") != std::string::npos);
  CHECK(message(fac("ab", "a", 1, 2)).find("exceeds") != std::string::npos);
  CHECK(message(fac("ab", "a", 1, 0)).find(">= 1") != std::string::npos);
  CHECK_THROWS_AS(expand_fs({Word::parse("ab"), Word{}, 1, 1}), PreconditionError);
}

TEST_CASE("fs_factorize examples") {
  CHECK(fs_factorize(Word::parse("abaab"), Word::parse("abaababa")) == fac("aba", "ab", 1, 1));
  CHECK(fs_factorize(Word::parse("bab"), Word::parse("babba")) == fac("ba", "b", 1, 1));
  CHECK(fs_factorize(Word::parse("baaba"), Word::parse("baababaa")) == fac("baa", "ba", 1, 1));
}

TEST_CASE("fs_factorize agrees with brute force over all tuples") {
  // Independent route: try every (base, partial, lead, trail) that could
  // rebuild (baaba, baababaa) and keep the valid ones.
  const std::string u = "baaba", U = "baababaa";
  std::vector<std::string> found;
  for (std::size_t p = 1; p <= U.size(); ++p) {
    const std::string base = U.substr(0, p);
    if (!naive::primitive(base)) continue;
    for (std::size_t q = 1; q < p; ++q) {
      const std::string partial = base.substr(0, q);
      for (std::size_t lead = 1; lead * p <= u.size(); ++lead) {
        for (std::size_t trail = 1; trail <= lead; ++trail) {
          if (naive::repeat(base, lead) + partial == u &&
              u + naive::repeat(base, trail) == U) {
            found.push_back(base + "," + partial + "," + std::to_string(lead) + "," +
                            std::to_string(trail));
          }
        }
      }
    }
  }
  REQUIRE(found.size() == 1);
  CHECK(found[0] == "baa,ba,1,1");
  CHECK(to_string(fs_factorize(Word::parse(u), Word::parse(U))) == "(baa, ba, 1, 1)");
}

TEST_CASE("fs_factorize preconditions") {
  CHECK_THROWS_AS(fs_factorize(Word::parse("ab"), Word::parse("ba")), DomainError);
  CHECK_THROWS_AS(fs_factorize(Word::parse("ab"), Word::parse("abab")), DomainError);
  CHECK_THROWS_AS(fs_factorize(Word::parse("aba"), Word::parse("aba")), DomainError);
  // u^2 = aaaa reoccurs inside U^2 = (aaaaa)^2.
  CHECK_THROWS_AS(fs_factorize(Word::parse("aaa"), Word::parse("aaaaa")), DomainError);
}

TEST_CASE("round trip over every factorization with |base| <= 8, lead <= 3") {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const Word& base : primitive_binary(n)) {
      for (std::size_t q = 1; q < n; ++q) {
        for (std::size_t lead = 1; lead <= 3; ++lead) {
          for (std::size_t trail = 1; trail <= lead; ++trail) {
            const FsFactorization f{base, base.slice(0, q), lead, trail};
            const Word u = fs_short_root(f);
            const Word U = fs_long_root(f);
            if (fs_factorize(u, U) != f) FAIL("round trip failed for " << to_string(f));
            // u^2 occurs only at the start of the expansion.
            const auto occ = find_occurrences(expand_fs(f), u.power(2));
            if (occ != std::vector<std::size_t>{1}) FAIL("u^2 repeats in " << to_string(f));
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("expansions start with an FS-double-square of the expected roots") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Word& base : primitive_binary(n)) {
      for (std::size_t q = 1; q < n; ++q) {
        for (std::size_t lead = 1; lead <= 2; ++lead) {
          const FsFactorization f{base, base.slice(0, q), lead, 1};
          const auto fs = fs_positions(expand_fs(f));
          REQUIRE_FALSE(fs.empty());
          CHECK(fs[0].position == 1);
          CHECK(fs[0].short_root == fs_short_root(f));
          CHECK(fs[0].long_root == fs_long_root(f));
          CHECK(is_primitive(fs_long_root(f)));
        }
      }
    }
  }
}
