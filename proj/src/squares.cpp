#include "sqscope/squares.hpp"

#include <algorithm>
#include <map>

#include "sqscope/errors.hpp"

namespace sqscope {

namespace {

void require_non_empty(const Word& w, const char* op) {
  if (w.empty()) throw DomainError(std::string(op) + ": empty word");
}

bool halves_equal(std::span<const Letter> s, std::size_t start, std::size_t half) {
  for (std::size_t t = 0; t < half; ++t) {
    if (s[start + t] != s[start + half + t]) return false;
  }
  return true;
}

std::vector<DistinctSquareRecord> oracle_records(const Word& w) {
  const auto s = w.symbols();
  const std::size_t n = s.size();
  std::vector<DistinctSquareRecord> out;
  for (std::size_t half = 1; 2 * half <= n; ++half) {
    // Equal contents share a key; ascending starts leave the rightmost.
    std::map<Word, std::size_t> last;
    for (std::size_t i = 0; i + 2 * half <= n; ++i) {
      if (halves_equal(s, i, half)) last[w.slice(i, half)] = i + 1;
    }
    for (auto& [root, pos] : last) out.push_back({root, pos});
  }
  return out;
}

// rightmost_repeat[i] = max over j > i of LCE(i, j): the longest factor
// starting at i that occurs again further right. A square x^2 at i is a
// last occurrence iff 2|x| > rightmost_repeat[i]. The square test itself is
// LCE(i, i + |x|) >= |x|, read off the same diagonal sweep.
std::vector<DistinctSquareRecord> fast_records(const Word& w) {
  const auto s = w.symbols();
  const std::size_t n = s.size();
  std::vector<std::size_t> rightmost_repeat(n, 0);
  for (std::size_t d = 1; d < n; ++d) {
    std::size_t run = 0;
    for (std::size_t i = n - d; i-- > 0;) {
      run = (s[i] == s[i + d]) ? run + 1 : 0;
      if (run > rightmost_repeat[i]) rightmost_repeat[i] = run;
    }
  }
  std::vector<DistinctSquareRecord> out;
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    std::size_t run = 0;
    for (std::size_t i = n - d; i-- > 0;) {
      run = (s[i] == s[i + d]) ? run + 1 : 0;
      if (run >= d && 2 * d > rightmost_repeat[i]) {
        out.push_back({w.slice(i, d), i + 1});
      }
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Engine engine) {
  return engine == Engine::oracle ? "oracle" : "fast";
}

Engine parse_engine(std::string_view name) {
  if (name == "oracle") return Engine::oracle;
  if (name == "fast") return Engine::fast;
  throw ParseError("unknown engine '" + std::string(name) +
                   "' (expected oracle or fast)");
}

bool canonical_less(const DistinctSquareRecord& a, const DistinctSquareRecord& b) {
  if (a.root.size() != b.root.size()) return a.root.size() < b.root.size();
  return a.root < b.root;
}

SquareSequence::SquareSequence(std::vector<std::uint8_t> digits)
    : digits_(std::move(digits)) {
  for (auto d : digits_) {
    if (d > 2) throw DomainError("square sequence digit above 2");
  }
}

SquareSequence SquareSequence::parse(std::string_view digits) {
  std::vector<std::uint8_t> out;
  out.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '2') {
      throw ParseError("bad digit '" + std::string(1, c) + "' at position " +
                           std::to_string(i + 1),
                       i + 1);
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return SquareSequence(std::move(out));
}

std::uint8_t SquareSequence::at(std::size_t position) const {
  if (position < 1 || position > digits_.size()) {
    throw OutOfRangeError("sequence position out of range");
  }
  return digits_[position - 1];
}

std::size_t SquareSequence::digit_sum() const noexcept {
  std::size_t sum = 0;
  for (auto d : digits_) sum += d;
  return sum;
}

std::string SquareSequence::str() const {
  std::string out;
  out.reserve(digits_.size());
  for (auto d : digits_) out.push_back(static_cast<char>('0' + d));
  return out;
}

SquareSequence SquareSequence::operator+(const SquareSequence& rhs) const {
  std::vector<std::uint8_t> out = digits_;
  out.insert(out.end(), rhs.digits_.begin(), rhs.digits_.end());
  return SquareSequence(std::move(out));
}

DensityReport make_density_report(std::size_t distinct_count, std::size_t length) {
  if (length == 0) throw DomainError("density: empty word");
  DensityReport r;
  r.distinct_count = distinct_count;
  r.length = length;
  r.exact = Rational(distinct_count) / Rational(length);
  r.thousandths = round_thousandths(r.exact);
  return r;
}

std::vector<SquareOccurrence> square_occurrences(const Word& w) {
  const auto s = w.symbols();
  std::vector<SquareOccurrence> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t half = 1; i + 2 * half <= s.size(); ++half) {
      if (halves_equal(s, i, half)) out.push_back({i + 1, half});
    }
  }
  return out;
}

std::vector<DistinctSquareRecord> enumerate_distinct_squares(const Word& w,
                                                             Engine engine) {
  require_non_empty(w, "enumerate_distinct_squares");
  auto records = engine == Engine::oracle ? oracle_records(w) : fast_records(w);
  std::sort(records.begin(), records.end(), canonical_less);
  return records;
}

SquareSequence sequence_from_records(
    std::size_t length, const std::vector<DistinctSquareRecord>& records) {
  std::vector<std::uint8_t> digits(length, 0);
  for (const auto& r : records) {
    if (r.last_position < 1 || r.last_position > length) {
      throw EngineInvariantError("record position outside the word");
    }
    auto& d = digits[r.last_position - 1];
    if (d == 2) {
      throw EngineInvariantError(
          "three distinct squares last-occur at position " +
          std::to_string(r.last_position));
    }
    ++d;
  }
  return SquareSequence(std::move(digits));
}

SquareSequence distinct_square_sequence(const Word& w, Engine engine) {
  return sequence_from_records(w.size(), enumerate_distinct_squares(w, engine));
}

std::vector<DoubleSquare> fs_positions_from_records(
    const std::vector<DistinctSquareRecord>& records) {
  std::map<std::size_t, std::vector<const DistinctSquareRecord*>> by_position;
  for (const auto& r : records) by_position[r.last_position].push_back(&r);
  std::vector<DoubleSquare> out;
  for (auto& [pos, group] : by_position) {
    if (group.size() > 2) {
      throw EngineInvariantError("more than two last occurrences at position " +
                                 std::to_string(pos));
    }
    if (group.size() < 2) continue;
    const auto* a = group[0];
    const auto* b = group[1];
    if (b->root.size() < a->root.size()) std::swap(a, b);
    out.push_back({a->root, b->root, pos});
  }
  return out;
}

std::vector<DoubleSquare> fs_positions(const Word& w, Engine engine) {
  return fs_positions_from_records(enumerate_distinct_squares(w, engine));
}

DensityReport density(const Word& w, Engine engine) {
  return make_density_report(enumerate_distinct_squares(w, engine).size(), w.size());
}

std::vector<DistinctSquareRecord> records_at(
    const std::vector<DistinctSquareRecord>& records, std::size_t position) {
  std::vector<DistinctSquareRecord> out;
  for (const auto& r : records) {
    if (r.last_position == position) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

SquareProfile profile(const Word& w, Engine engine) {
  SquareProfile p;
  p.records = enumerate_distinct_squares(w, engine);
  p.sequence = sequence_from_records(w.size(), p.records);
  p.fs = fs_positions_from_records(p.records);
  p.density = make_density_report(p.records.size(), w.size());
  return p;
}

std::vector<std::size_t> find_occurrences(const Word& text, const Word& pattern) {
  std::vector<std::size_t> out;
  if (pattern.empty() || pattern.size() > text.size()) return out;
  const auto t = text.symbols();
  const auto p = pattern.symbols();
  for (std::size_t i = 0; i + p.size() <= t.size(); ++i) {
    if (std::equal(p.begin(), p.end(), t.begin() + static_cast<std::ptrdiff_t>(i))) {
      out.push_back(i + 1);
    }
  }
  return out;
}

}  // namespace sqscope
