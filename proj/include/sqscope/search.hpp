#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sqscope/word.hpp"

namespace sqscope {

/// Is there a word whose positions 1..m are all FS-double-square positions
/// with roots of lengths len_u < len_U at each of them?
struct ExistenceQuery {
  std::size_t m = 1;
  std::size_t len_u = 1;
  std::size_t len_U = 2;
  std::size_t alphabet_size = 2;
  /// 0 selects the shortest length that can hold the run: 2*len_U + m - 1.
  std::size_t scan_length = 0;
};

enum class SearchStatus { found, not_found, inconclusive };
std::string_view to_string(SearchStatus status);

struct SearchResult {
  ExistenceQuery query;
  SearchStatus status = SearchStatus::inconclusive;
  /// Lexicographically least witness when found.
  std::optional<Word> witness;
  std::size_t searched_alphabet = 0;
  std::size_t searched_length = 0;
  /// Letter classes left free once both prefix squares are imposed.
  std::size_t free_classes = 0;
  std::uint64_t candidates_checked = 0;
  double wall_ms = 0.0;

  bool found() const noexcept { return status == SearchStatus::found; }
};

/// SQSCOPE_BUDGET_MS when set, otherwise 10 s.
std::chrono::milliseconds default_search_budget();

/// Exhaustive search over all words of the query's length and alphabet.
/// Positions tied together by the prefix squares share a letter, and
/// letters are assigned in first-use order (renaming a witness keeps it a
/// witness). Any witness is re-checked with the square engine before it is
/// returned. Running past `budget` yields SearchStatus::inconclusive.
SearchResult exists_prefix_run(const ExistenceQuery& query,
                               std::chrono::milliseconds budget = default_search_budget());

/// Whether positions 1..m of w are FS positions whose (u, U) lengths are the
/// same at every position; with `lengths` set those must also match.
bool has_fs_prefix_run(const Word& w, std::size_t m,
                       std::optional<std::pair<std::size_t, std::size_t>> lengths = {});

/// Brute force over every word of `length` letters: each is run through the
/// square engine. Independent of exists_prefix_run. Capped at 2^26 words.
std::vector<Word> scan_fs_prefix_words(
    std::size_t length, std::size_t alphabet_size, std::size_t m,
    std::optional<std::pair<std::size_t, std::size_t>> lengths = {});

}  // namespace sqscope
