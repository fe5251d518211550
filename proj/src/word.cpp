#include "sqscope/word.hpp"

#include <algorithm>
#include <string>

#include "sqscope/errors.hpp"

namespace sqscope {

namespace {

// Smallest period of w via the prefix function.
std::size_t smallest_period(std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && w[i] != w[k]) k = border[k - 1];
    if (w[i] == w[k]) ++k;
    border[i] = k;
  }
  return n - border[n - 1];
}

}  // namespace

Word::Word(std::vector<Letter> symbols, std::size_t alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 1 || alphabet_size_ > kMaxAlphabet) {
    throw DomainError("alphabet size must be in [1, 256], got " +
                      std::to_string(alphabet_size_));
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= alphabet_size_) {
      throw DomainError("letter id " + std::to_string(symbols_[i]) +
                        " at position " + std::to_string(i + 1) +
                        " is outside an alphabet of size " +
                        std::to_string(alphabet_size_));
    }
  }
}

Word Word::parse(std::string_view text) {
  std::size_t largest = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < 'a' || c > 'z') {
      throw ParseError("unexpected character '" + std::string(1, c) +
                           "' at position " + std::to_string(i + 1) +
                           " (only lowercase ASCII letters are accepted)",
                       i + 1);
    }
    largest = std::max<std::size_t>(largest, static_cast<std::size_t>(c - 'a'));
  }
  return parse(text, std::max<std::size_t>(2, largest + 1));
}

Word Word::parse(std::string_view text, std::size_t alphabet_size) {
  std::vector<Letter> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < 'a' || c > 'z') {
      throw ParseError("unexpected character '" + std::string(1, c) +
                           "' at position " + std::to_string(i + 1) +
                           " (only lowercase ASCII letters are accepted)",
                       i + 1);
    }
    const auto id = static_cast<std::size_t>(c - 'a');
    if (id >= alphabet_size) {
      throw ParseError("letter '" + std::string(1, c) + "' at position " +
                           std::to_string(i + 1) +
                           " is outside an alphabet of size " +
                           std::to_string(alphabet_size),
                       i + 1);
    }
    symbols.push_back(static_cast<Letter>(id));
  }
  return Word(std::move(symbols), alphabet_size);
}

Word Word::repeat(Letter letter, std::size_t count, std::size_t alphabet_size) {
  return Word(std::vector<Letter>(count, letter),
              std::max<std::size_t>(alphabet_size, std::size_t{letter} + 1));
}

Letter Word::at(std::size_t position) const {
  if (position < 1 || position > symbols_.size()) {
    throw OutOfRangeError("position " + std::to_string(position) +
                          " outside [1.." + std::to_string(symbols_.size()) +
                          "]");
  }
  return symbols_[position - 1];
}

Word Word::factor(FactorRef ref) const {
  if (ref.start < 1 || ref.start > ref.end || ref.end > symbols_.size()) {
    throw OutOfRangeError("factor [" + std::to_string(ref.start) + ".." +
                          std::to_string(ref.end) + "] invalid for length " +
                          std::to_string(symbols_.size()));
  }
  return slice(ref.start - 1, ref.length());
}

Word Word::slice(std::size_t offset, std::size_t length) const {
  if (offset + length > symbols_.size()) {
    throw OutOfRangeError("slice past end of word");
  }
  const auto first = symbols_.begin() + static_cast<std::ptrdiff_t>(offset);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(length)),
              alphabet_size_);
}

Word Word::power(std::size_t exponent) const {
  std::vector<Letter> out;
  out.reserve(symbols_.size() * exponent);
  for (std::size_t e = 0; e < exponent; ++e) {
    out.insert(out.end(), symbols_.begin(), symbols_.end());
  }
  return Word(std::move(out), alphabet_size_);
}

Word Word::rotate_left(std::size_t k) const {
  if (symbols_.empty()) return *this;
  std::vector<Letter> out = symbols_;
  std::rotate(out.begin(),
              out.begin() + static_cast<std::ptrdiff_t>(k % out.size()),
              out.end());
  return Word(std::move(out), alphabet_size_);
}

bool Word::starts_with(const Word& prefix) const noexcept {
  return prefix.size() <= size() &&
         std::equal(prefix.symbols_.begin(), prefix.symbols_.end(),
                    symbols_.begin());
}

std::string Word::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Letter l : symbols_) out.push_back(letter_char(l));
  return out;
}

Word operator+(const Word& lhs, const Word& rhs) {
  std::vector<Letter> out = lhs.symbols_;
  out.insert(out.end(), rhs.symbols_.begin(), rhs.symbols_.end());
  return Word(std::move(out), std::max(lhs.alphabet_size_, rhs.alphabet_size_));
}

char letter_char(Letter letter) {
  // Ids past 'z' have no letter; '?' keeps the output printable.
  return letter < 26 ? static_cast<char>('a' + letter) : '?';
}

bool is_primitive(const Word& w) {
  return primitive_root(w).exponent == 1;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw DomainError("primitive_root: empty word");
  const std::size_t n = w.size();
  const std::size_t p = smallest_period(w.symbols());
  if (n % p != 0) return {w, 1};
  return {w.slice(0, p), n / p};
}

bool can_cyclic_shift_right(const Word& w, FactorRef f, std::size_t k) {
  if (f.start < 1 || f.start > f.end || f.end > w.size()) {
    throw OutOfRangeError("can_cyclic_shift_right: invalid factor");
  }
  if (f.end + k > w.size()) {
    throw OutOfRangeError("can_cyclic_shift_right: end + k = " +
                          std::to_string(f.end + k) + " exceeds |w| = " +
                          std::to_string(w.size()));
  }
  for (std::size_t step = 0; step < k; ++step) {
    if (w.at(f.start + step) != w.at(f.end + step + 1)) return false;
  }
  return true;
}

}  // namespace sqscope
