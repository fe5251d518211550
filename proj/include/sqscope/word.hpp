#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqscope {

using Letter = std::uint8_t;

/// Letter ids are 0..255, so at most 256 letters.
inline constexpr std::size_t kMaxAlphabet = 256;

/// Inclusive, 1-based factor bounds: w[start..end].
struct FactorRef {
  std::size_t start = 1;
  std::size_t end = 1;

  std::size_t length() const noexcept { return end - start + 1; }
  friend bool operator==(const FactorRef&, const FactorRef&) = default;
};

/// An immutable finite word over letter ids [0, alphabet_size).
///
/// Indexing through operator[] is 0-based; `at()` and every FactorRef use
/// 1-based positions. Id 0 displays as 'a', id 1 as 'b', and so on.
/// Equality and ordering look at the symbols only.
class Word {
 public:
  Word() = default;
  Word(std::vector<Letter> symbols, std::size_t alphabet_size);

  /// Fixed map a->0, b->1, ...; alphabet size is max(2, largest id + 1).
  static Word parse(std::string_view text);
  static Word parse(std::string_view text, std::size_t alphabet_size);

  /// `count` copies of `letter`.
  static Word repeat(Letter letter, std::size_t count,
                     std::size_t alphabet_size = 2);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::span<const Letter> symbols() const noexcept { return symbols_; }

  Letter operator[](std::size_t index) const noexcept { return symbols_[index]; }
  Letter at(std::size_t position) const;

  Word factor(FactorRef ref) const;
  /// 0-based slice.
  Word slice(std::size_t offset, std::size_t length) const;
  Word power(std::size_t exponent) const;
  /// Cyclic rotation moving the first `k` letters to the end.
  Word rotate_left(std::size_t k) const;
  bool starts_with(const Word& prefix) const noexcept;

  std::string str() const;

  friend Word operator+(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word& lhs, const Word& rhs) noexcept {
    return lhs.symbols_ == rhs.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& lhs,
                                          const Word& rhs) noexcept {
    return lhs.symbols_ <=> rhs.symbols_;
  }

 private:
  std::vector<Letter> symbols_;
  std::size_t alphabet_size_ = 2;
};

char letter_char(Letter letter);

/// w is not v^e for any e >= 2. Throws DomainError on the empty word.
bool is_primitive(const Word& w);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;
};

/// The unique primitive v with w = v^e.
PrimitiveRoot primitive_root(const Word& w);

/// Whether the occurrence `f` can be cyclically shifted right `k` times:
/// each single step needs w[start] == w[end + 1].
bool can_cyclic_shift_right(const Word& w, FactorRef f, std::size_t k);

}  // namespace sqscope
