#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sqscope/rational.hpp"
#include "sqscope/word.hpp"

namespace sqscope {

/// Which enumeration route to run. Both are exact and observably identical.
///  - oracle: every (root length, start) pair checked by letter comparison,
///    contents grouped in an ordered map. Cubic; ground truth.
///  - fast: one quadratic sweep over offset diagonals computing longest
///    common extensions. No hashing.
enum class Engine { oracle, fast };

std::string_view to_string(Engine engine);
/// Accepts "oracle" or "fast"; ParseError otherwise.
Engine parse_engine(std::string_view name);

/// x^2 at a 1-based position with |x| = root_length.
struct SquareOccurrence {
  std::size_t position = 1;
  std::size_t root_length = 1;
  friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// One distinct square, keyed by its root content, with the 1-based start
/// of its rightmost occurrence.
struct DistinctSquareRecord {
  Word root;
  std::size_t last_position = 1;

  friend bool operator==(const DistinctSquareRecord& a,
                         const DistinctSquareRecord& b) noexcept {
    return a.root == b.root && a.last_position == b.last_position;
  }
};

/// Canonical record order: root length, then root content.
bool canonical_less(const DistinctSquareRecord& a, const DistinctSquareRecord& b);

/// s_1..s_n: how many distinct squares last-occur at each position.
class SquareSequence {
 public:
  SquareSequence() = default;
  explicit SquareSequence(std::vector<std::uint8_t> digits);

  /// Bare digit string; only '0', '1', '2' accepted.
  static SquareSequence parse(std::string_view digits);

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  /// 1-based.
  std::uint8_t at(std::size_t position) const;
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  std::size_t digit_sum() const noexcept;
  std::string str() const;

  SquareSequence operator+(const SquareSequence& rhs) const;
  friend bool operator==(const SquareSequence&, const SquareSequence&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

/// Two squares u^2, U^2 starting at the same position, |u| < |U|.
struct DoubleSquare {
  Word short_root;
  Word long_root;
  std::size_t position = 1;
};

struct DensityReport {
  std::size_t distinct_count = 0;
  std::size_t length = 0;
  Rational exact;
  std::int64_t thousandths = 0;  // half-up

  std::string density_3dp() const { return format_3dp(thousandths); }
};

DensityReport make_density_report(std::size_t distinct_count, std::size_t length);

/// Every square occurrence in w, ordered by (position, root length).
/// Quadratic output in the worst case; intended for small words and tests.
std::vector<SquareOccurrence> square_occurrences(const Word& w);

/// One record per distinct square content, in canonical order.
std::vector<DistinctSquareRecord> enumerate_distinct_squares(
    const Word& w, Engine engine = Engine::fast);

SquareSequence sequence_from_records(std::size_t length,
                                     const std::vector<DistinctSquareRecord>& records);

SquareSequence distinct_square_sequence(const Word& w, Engine engine = Engine::fast);

/// FS-double-square positions in ascending order.
std::vector<DoubleSquare> fs_positions(const Word& w, Engine engine = Engine::fast);
std::vector<DoubleSquare> fs_positions_from_records(
    const std::vector<DistinctSquareRecord>& records);

DensityReport density(const Word& w, Engine engine = Engine::fast);

/// Records whose last occurrence starts at `position`, shortest root first.
std::vector<DistinctSquareRecord> records_at(
    const std::vector<DistinctSquareRecord>& records, std::size_t position);

/// Everything the engine knows about one word, computed once.
struct SquareProfile {
  std::vector<DistinctSquareRecord> records;
  SquareSequence sequence;
  std::vector<DoubleSquare> fs;
  DensityReport density;
};

SquareProfile profile(const Word& w, Engine engine = Engine::fast);

/// Starts of every occurrence of `pattern` in `text`, 1-based, ascending.
std::vector<std::size_t> find_occurrences(const Word& text, const Word& pattern);

}  // namespace sqscope
