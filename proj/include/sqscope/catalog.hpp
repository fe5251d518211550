#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqscope/squares.hpp"
#include "sqscope/word.hpp"

namespace sqscope {

/// A published example word together with the values printed for it.
struct CatalogEntry {
  std::string label;
  Word word;
  std::string printed_sequence;
  /// Printed density in thousandths (.5 -> 500); absent when none printed.
  std::optional<std::int64_t> printed_thousandths;
  /// Whether the published classification says every run of 2's is
  /// immediately followed by at least twice as many 0's.
  bool printed_strong_rule_holds = false;
};

/// The examples built by altering w_2, w_3 and by raising the exponents of
/// (aba, ab, ., .) and (aaba, aab, ., .), in publication order.
std::vector<CatalogEntry> altered_word_catalog();

/// The 39-letter word starting with two FS-double-squares of different
/// lengths, (bab, babba) then (abbababbaa, abbababbaaabbababba).
CatalogEntry mixed_length_fixture();

struct CatalogCheck {
  CatalogEntry entry;
  SquareSequence computed_sequence;
  std::int64_t computed_thousandths = 0;
  bool computed_strong_rule_holds = false;
  bool sequence_matches = false;
  bool density_matches = true;  // vacuous when nothing was printed
  /// Human-readable explanation when a printed value is not reproducible.
  std::vector<std::string> discrepancies;
};

CatalogCheck check_entry(const CatalogEntry& entry, Engine engine = Engine::fast);
std::vector<CatalogCheck> check_catalog(Engine engine = Engine::fast);

}  // namespace sqscope
