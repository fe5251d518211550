#include "sqscope/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "sqscope/errors.hpp"

namespace sqscope {

namespace {

constexpr Letter kA = 0;
constexpr Letter kB = 1;

Word a_pow(std::size_t n) { return Word::repeat(kA, n); }
Word letter(Letter l) { return Word::repeat(l, 1); }

void append_digits(std::vector<std::uint8_t>& out, std::uint8_t digit, std::size_t n) {
  out.insert(out.end(), n, digit);
}

void require_at_least(std::size_t value, std::size_t bound, const char* what) {
  if (value < bound) {
    throw DomainError(std::string(what) + " must be >= " + std::to_string(bound) +
                      ", got " + std::to_string(value));
  }
}

Prediction finish(Prediction p) {
  if (p.word.size() != p.expected_length) {
    throw EngineInvariantError("construction produced length " +
                               std::to_string(p.word.size()) + ", expected " +
                               std::to_string(p.expected_length));
  }
  return p;
}

}  // namespace

Prediction build_wm(std::size_t m) {
  require_at_least(m, 1, "m");
  const Word run = a_pow(m - 1);
  const Word b = letter(kB);
  const Word a = letter(kA);
  const Word root = run + b + a + run + b + run + b + a;
  Prediction p;
  p.word = root.power(2) + run;
  p.expected_length = 7 * m + 3;
  p.expected_sequence = expected_sequence_wm(m);
  p.expected_count = 4 * m + m / 2 + 1;
  p.expected_density = density_wm_formula(m);
  p.fs_prefix = FsPrefixClaim{m, 2 * m + 1, 3 * m + 2};
  return finish(std::move(p));
}

SquareSequence expected_sequence_wm(std::size_t m) {
  require_at_least(m, 1, "m");
  std::vector<std::uint8_t> d;
  d.reserve(7 * m + 3);
  append_digits(d, 2, m);
  append_digits(d, 0, 2 * m);
  append_digits(d, 1, m + 1);
  append_digits(d, 0, 2);
  append_digits(d, 1, m);
  append_digits(d, 0, 2 * ((m + 1) / 2));
  for (std::size_t t = 0; t < m / 2; ++t) {
    d.push_back(1);
    d.push_back(0);
  }
  return SquareSequence(std::move(d));
}

Rational density_wm_formula(std::size_t m) {
  require_at_least(m, 1, "m");
  // Doubled numerator keeps the half-integers exact.
  const std::size_t twice_count = m % 2 == 0 ? 9 * m + 2 : 9 * m + 1;
  return Rational(twice_count) / Rational(2 * (7 * m + 3));
}

Rational prefix_run_probability(std::size_t m, std::size_t alphabet_size) {
  require_at_least(m, 1, "m");
  require_at_least(alphabet_size, 2, "alphabet size");
  const BigInt a = alphabet_size;
  const BigInt den = boost::multiprecision::pow(a, static_cast<unsigned>(7 * m + 3));
  return Rational(a * a - a) / Rational(den);
}

Prediction build_wm_ell(std::size_t m, std::size_t ell, std::vector<Letter> letters) {
  require_at_least(m, 1, "m");
  if (ell < m) {
    throw DomainError("ell must be >= m (ell = " + std::to_string(ell) +
                      ", m = " + std::to_string(m) + ")");
  }
  const std::size_t slots = ell - m + 1;
  if (letters.empty()) letters.assign(slots, kB);
  if (letters.size() != slots) {
    throw PreconditionError("letter choices: expected " + std::to_string(slots) +
                            " letters, got " + std::to_string(letters.size()));
  }
  std::size_t alphabet = 2;
  for (std::size_t t = 0; t < letters.size(); ++t) {
    if (letters[t] == kA) {
      throw PreconditionError("letter choice " + std::to_string(t + 2) +
                              " equals 'a'; every choice must differ from 'a'");
    }
    alphabet = std::max<std::size_t>(alphabet, std::size_t{letters[t]} + 1);
  }
  const Word alphas(letters, alphabet);
  const Word run = a_pow(m - 1);
  const Word a = letter(kA);
  const Word u1 = run + alphas + a + run + alphas;
  const Word big = u1 + run + alphas + a;

  Prediction p;
  p.word = big.power(2) + run;
  p.expected_length = 6 * ell + m + 3;
  p.fs_prefix = FsPrefixClaim{m, 2 * ell + 1, 3 * ell + 2};
  return finish(std::move(p));
}

Prediction build_zword(std::size_t m, const Word& z, std::size_t lead,
                       std::size_t trail) {
  require_at_least(m, 1, "m");
  if (z.empty()) throw PreconditionError("Z must be non-empty");
  if (trail < 1 || trail > lead) {
    throw PreconditionError("need 1 <= e2 <= e1 (e1 = " + std::to_string(lead) +
                            ", e2 = " + std::to_string(trail) + ")");
  }
  const Word run = a_pow(m - 1);
  const Word base = run + z + letter(kA);
  if (!is_primitive(base)) {
    throw PreconditionError("a^{m-1}Za = '" + base.str() + "' is not primitive");
  }
  const Word partial = run + z;
  const FsFactorization f{base, partial, lead, trail};

  Prediction p;
  p.word = expand_fs(f) + run;
  p.expected_length = 2 * fs_long_root(f).size() + m - 1;
  p.fs_prefix = FsPrefixClaim{m, fs_short_root(f).size(), fs_long_root(f).size()};
  return finish(std::move(p));
}

std::pair<Word, Word> zword_roots_at(std::size_t m, const Word& z, std::size_t lead,
                                     std::size_t trail, std::size_t i) {
  if (i < 1 || i > m) throw DomainError("zword_roots_at: i outside [1..m]");
  const Word shifted_base = a_pow(m - i) + z + a_pow(i);
  const Word shifted_partial = a_pow(m - i) + z + a_pow(i - 1);
  const Word u = shifted_base.power(lead) + shifted_partial;
  return {u, u + shifted_base.power(trail)};
}

Word build_xk(std::size_t k) {
  require_at_least(k, 1, "k");
  const Word run = a_pow(k - 1);
  const Word ba = letter(kB) + letter(kA);
  const Word b = letter(kB);
  return run + ba + run + b + run + ba + run + ba + run + b + run + b;
}

std::size_t yij_length(std::size_t i, std::size_t j) {
  if (i < 1 || i >= j) throw DomainError("need 1 <= i < j");
  return 7 * j + 3 + 3 * j * j - 3 * i * i;
}

std::size_t yij_count_formula(std::size_t i, std::size_t j) {
  if (i < 1 || i >= j) throw DomainError("need 1 <= i < j");
  // 5j^2 - 3j - 5i^2 + 3i = 5(j^2 - i^2) - 3(j - i) >= 0 and even.
  const std::size_t twice_blocks = 5 * (j * j - i * i) - 3 * (j - i);
  return 4 * j + j / 2 + 1 + twice_blocks / 2;
}

Rational yij_density_formula(std::size_t i, std::size_t j) {
  return Rational(yij_count_formula(i, j)) / Rational(yij_length(i, j));
}

Prediction build_yij(std::size_t i, std::size_t j) {
  if (i < 1 || i >= j) {
    throw DomainError("build_yij: need 1 <= i < j (i = " + std::to_string(i) +
                      ", j = " + std::to_string(j) + ")");
  }
  std::vector<Letter> symbols;
  symbols.reserve(yij_length(i, j));
  for (std::size_t k = i; k <= j; ++k) {
    const Word x = build_xk(k);
    symbols.insert(symbols.end(), x.symbols().begin(), x.symbols().end());
  }
  symbols.insert(symbols.end(), j, kA);

  Prediction p;
  p.word = Word(std::move(symbols), 2);
  p.expected_length = yij_length(i, j);
  p.expected_count = yij_count_formula(i, j);
  p.expected_sequence = expected_sequence_yij(i, j);
  p.expected_density = yij_density_formula(i, j);
  return finish(std::move(p));
}

SquareSequence expected_sequence_xk_block(std::size_t k) {
  require_at_least(k, 1, "k");
  std::vector<std::uint8_t> d;
  d.reserve(6 * k + 3);
  append_digits(d, 1, 2 * k + 1);
  append_digits(d, 0, k + 1);
  append_digits(d, 1, k);
  append_digits(d, 0, 1);
  append_digits(d, 1, 2 * k);
  return SquareSequence(std::move(d));
}

SquareSequence expected_sequence_yij(std::size_t i, std::size_t j) {
  if (i < 1 || i >= j) throw DomainError("need 1 <= i < j");
  SquareSequence out;
  for (std::size_t k = i; k < j; ++k) out = out + expected_sequence_xk_block(k);
  return out + expected_sequence_wm(j);
}

std::vector<XkTableRow> xk_square_table(std::size_t k) {
  require_at_least(k, 1, "k");
  const Word run = a_pow(k - 1);
  const Word a = letter(kA);
  const Word b = letter(kB);
  auto row = [](std::size_t first, std::size_t last, std::size_t count,
                std::optional<Word> root) {
    const std::size_t len = root ? root->size() : 0;
    return XkTableRow{first, last, count, std::move(root), len};
  };
  return {
      row(1, 2 * k + 1, 2 * k + 1, run + b + a + run + b + run + b + a),
      row(2 * k + 2, 3 * k + 2, k + 1, std::nullopt),
      // k = 1 leaves this row empty (first > last, count 0).
      row(3 * k + 3, 4 * k + 1, k - 1, run + b + a),
      row(4 * k + 2, 4 * k + 2, 1, b + a + run + b + run),
      row(4 * k + 3, 4 * k + 3, 1, std::nullopt),
      row(4 * k + 4, 5 * k + 3, k, run + b),
      row(5 * k + 4, 6 * k + 3, k, run + b + a_pow(k) + b + a + a),
  };
}

Prediction build_raw_fs(const FsFactorization& f, std::size_t tail) {
  Prediction p;
  p.word = expand_fs(f) + a_pow(tail);
  p.expected_length = 2 * fs_long_root(f).size() + tail;
  if (tail == 0) {
    p.fs_prefix = FsPrefixClaim{1, fs_short_root(f).size(), fs_long_root(f).size()};
  }
  return finish(std::move(p));
}

// -- grammar -----------------------------------------------------------------

namespace {

using Fields = std::map<std::string, std::string, std::less<>>;

Fields split_fields(std::string_view body, std::string_view kind) {
  Fields out;
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string_view item = body.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw ParseError(std::string(kind) + ": expected key=value, got '" +
                       std::string(item) + "'");
    }
    std::string key(item.substr(0, eq));
    if (out.count(key)) throw ParseError(std::string(kind) + ": duplicate key '" + key + "'");
    out.emplace(std::move(key), std::string(item.substr(eq + 1)));
    pos = comma + 1;
  }
  return out;
}

void allow_only(const Fields& f, std::string_view kind,
                std::initializer_list<std::string_view> keys) {
  for (const auto& [k, v] : f) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw ParseError(std::string(kind) + ": unknown key '" + k + "'");
    }
  }
}

const std::string& need(const Fields& f, std::string_view kind, std::string_view key) {
  auto it = f.find(key);
  if (it == f.end()) {
    throw ParseError(std::string(kind) + ": missing key '" + std::string(key) + "'");
  }
  return it->second;
}

std::size_t to_count(const std::string& value, std::string_view key) {
  std::size_t out = 0;
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (value.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("key '" + std::string(key) + "': expected a non-negative integer, got '" +
                     value + "'");
  }
  return out;
}

std::size_t count_field(const Fields& f, std::string_view kind, std::string_view key) {
  return to_count(need(f, kind, key), key);
}

Word word_field(const Fields& f, std::string_view kind, std::string_view key) {
  const std::string& value = need(f, kind, key);
  try {
    return Word::parse(value);
  } catch (const ParseError& e) {
    throw ParseError("key '" + std::string(key) + "': " + e.what());
  }
}

}  // namespace

ConstructionSpec parse_construction(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const Fields f = split_fields(body, kind);

  if (kind == "wm") {
    allow_only(f, kind, {"m"});
    return WmSpec{count_field(f, kind, "m")};
  }
  if (kind == "wml") {
    allow_only(f, kind, {"m", "l", "letters"});
    WmEllSpec s{count_field(f, kind, "m"), count_field(f, kind, "l"), {}};
    if (f.count("letters")) {
      const Word letters = word_field(f, kind, "letters");
      s.letters.assign(letters.symbols().begin(), letters.symbols().end());
    }
    return s;
  }
  if (kind == "zword") {
    allow_only(f, kind, {"m", "Z", "e1", "e2"});
    return ZWordSpec{count_field(f, kind, "m"), word_field(f, kind, "Z"),
                     count_field(f, kind, "e1"), count_field(f, kind, "e2")};
  }
  if (kind == "xk") {
    allow_only(f, kind, {"k"});
    return XkSpec{count_field(f, kind, "k")};
  }
  if (kind == "yij") {
    allow_only(f, kind, {"i", "j"});
    return YijSpec{count_field(f, kind, "i"), count_field(f, kind, "j")};
  }
  if (kind == "fs") {
    allow_only(f, kind, {"v1", "v2", "e1", "e2", "tail"});
    RawFsSpec s;
    s.factorization = FsFactorization{word_field(f, kind, "v1"), word_field(f, kind, "v2"),
                                      count_field(f, kind, "e1"), count_field(f, kind, "e2")};
    s.tail = f.count("tail") ? count_field(f, kind, "tail") : 0;
    return s;
  }
  throw ParseError("unknown construction '" + std::string(kind) +
                   "' (expected wm, wml, zword, xk, yij or fs)");
}

std::string to_string(const ConstructionSpec& spec) {
  struct Printer {
    std::string operator()(const WmSpec& s) const { return "wm:m=" + std::to_string(s.m); }
    std::string operator()(const WmEllSpec& s) const {
      std::string out = "wml:m=" + std::to_string(s.m) + ",l=" + std::to_string(s.ell);
      if (!s.letters.empty()) {
        out += ",letters=";
        for (Letter l : s.letters) out.push_back(letter_char(l));
      }
      return out;
    }
    std::string operator()(const ZWordSpec& s) const {
      return "zword:m=" + std::to_string(s.m) + ",Z=" + s.z.str() +
             ",e1=" + std::to_string(s.lead) + ",e2=" + std::to_string(s.trail);
    }
    std::string operator()(const XkSpec& s) const { return "xk:k=" + std::to_string(s.k); }
    std::string operator()(const YijSpec& s) const {
      return "yij:i=" + std::to_string(s.i) + ",j=" + std::to_string(s.j);
    }
    std::string operator()(const RawFsSpec& s) const {
      const auto& f = s.factorization;
      return "fs:v1=" + f.base.str() + ",v2=" + f.partial.str() +
             ",e1=" + std::to_string(f.lead) + ",e2=" + std::to_string(f.trail) +
             ",tail=" + std::to_string(s.tail);
    }
  };
  return std::visit(Printer{}, spec);
}

Prediction build(const ConstructionSpec& spec) {
  struct Builder {
    Prediction operator()(const WmSpec& s) const { return build_wm(s.m); }
    Prediction operator()(const WmEllSpec& s) const {
      return build_wm_ell(s.m, s.ell, s.letters);
    }
    Prediction operator()(const ZWordSpec& s) const {
      return build_zword(s.m, s.z, s.lead, s.trail);
    }
    Prediction operator()(const XkSpec& s) const {
      Prediction p;
      p.word = build_xk(s.k);
      p.expected_length = 6 * s.k + 3;
      return finish(std::move(p));
    }
    Prediction operator()(const YijSpec& s) const { return build_yij(s.i, s.j); }
    Prediction operator()(const RawFsSpec& s) const {
      return build_raw_fs(s.factorization, s.tail);
    }
  };
  return std::visit(Builder{}, spec);
}

}  // namespace sqscope
