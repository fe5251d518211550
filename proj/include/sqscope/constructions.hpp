#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sqscope/fs.hpp"
#include "sqscope/rational.hpp"
#include "sqscope/squares.hpp"
#include "sqscope/word.hpp"

namespace sqscope {

/// A run of FS-double-squares at positions 1..count whose roots keep the
/// same lengths throughout.
struct FsPrefixClaim {
  std::size_t count = 0;
  std::size_t short_length = 0;
  std::size_t long_length = 0;
};

/// A constructed word together with what theory says about it.
struct Prediction {
  Word word;
  std::optional<SquareSequence> expected_sequence;
  std::optional<std::size_t> expected_count;
  std::size_t expected_length = 0;
  std::optional<Rational> expected_density;
  std::optional<FsPrefixClaim> fs_prefix;
};

// -- Shortest words with m equal-length FS-double-squares -------------------

/// (a^{m-1} b a a^{m-1} b a^{m-1} b a)^2 a^{m-1}, length 7m + 3.
Prediction build_wm(std::size_t m);

/// 2^m 0^{2m} 1^{m+1} 00 1^m 0^{2 floor((m+1)/2)} (10)^{floor(m/2)}.
SquareSequence expected_sequence_wm(std::size_t m);

/// (4.5m + 1)/(7m + 3) for even m, (4.5m + 0.5)/(7m + 3) for odd m.
Rational density_wm_formula(std::size_t m);

/// (|A|^2 - |A|) / |A|^{7m+3}.
Rational prefix_run_probability(std::size_t m, std::size_t alphabet_size);

/// Generalization to root lengths 2*ell + 1 and 3*ell + 2. `letters` fills
/// the ell - m + 1 slots after each a^{m-1} block; empty means all 'b'.
/// Every slot must differ from 'a'.
Prediction build_wm_ell(std::size_t m, std::size_t ell,
                        std::vector<Letter> letters = {});

/// (v^lead · p · v^trail)^2 a^{m-1} with v = a^{m-1} z a and p = a^{m-1} z.
/// Requires z non-empty and v primitive.
Prediction build_zword(std::size_t m, const Word& z, std::size_t lead,
                       std::size_t trail);

/// The FS pair expected at 1-based position i of build_zword(m, z, ...).
std::pair<Word, Word> zword_roots_at(std::size_t m, const Word& z,
                                     std::size_t lead, std::size_t trail,
                                     std::size_t i);

// -- Dense family ------------------------------------------------------------

/// a^{k-1}ba a^{k-1}b a^{k-1}ba a^{k-1}ba a^{k-1}b a^{k-1}b, length 6k + 3.
Word build_xk(std::size_t k);

/// X_i X_{i+1} ... X_j a a^{j-1}.
Prediction build_yij(std::size_t i, std::size_t j);

std::size_t yij_length(std::size_t i, std::size_t j);
/// 4j + floor(j/2) + 1 + (5j^2 - 3j - 5i^2 + 3i)/2.
std::size_t yij_count_formula(std::size_t i, std::size_t j);
Rational yij_density_formula(std::size_t i, std::size_t j);

/// Product over k = i..j-1 of 1^{2k+1} 0^{k+1} 1^k 0 1^{2k}, then s(w_j).
SquareSequence expected_sequence_yij(std::size_t i, std::size_t j);

/// Per-block sequence of X_k inside Y_{i,j}, k < j.
SquareSequence expected_sequence_xk_block(std::size_t k);

/// One row of the table of squares that last-occur inside X_k in
/// Y_{k,k+1}: positions first..last (1-based within X_k), each starting one
/// square whose root is the listed root rotated left by (position - first).
/// A row without a root marks positions with no square.
struct XkTableRow {
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t count = 0;
  std::optional<Word> root;
  std::size_t root_length = 0;
};

/// The seven rows for block k exactly as published, templated in k.
std::vector<XkTableRow> xk_square_table(std::size_t k);

// -- Spec grammar -------------------------------------------------------------

struct WmSpec { std::size_t m = 1; };
struct WmEllSpec { std::size_t m = 1; std::size_t ell = 1; std::vector<Letter> letters; };
struct ZWordSpec { std::size_t m = 1; Word z; std::size_t lead = 1; std::size_t trail = 1; };
struct XkSpec { std::size_t k = 1; };
struct YijSpec { std::size_t i = 1; std::size_t j = 2; };
struct RawFsSpec { FsFactorization factorization; std::size_t tail = 0; };

using ConstructionSpec =
    std::variant<WmSpec, WmEllSpec, ZWordSpec, XkSpec, YijSpec, RawFsSpec>;

/// Parses one of
///   wm:m=3
///   wml:m=1,l=2,letters=bb        (letters optional)
///   zword:m=2,Z=ab,e1=2,e2=1
///   xk:k=4
///   yij:i=5,j=15
///   fs:v1=aba,v2=ab,e1=2,e2=1,tail=1   (tail optional, counts trailing a's)
/// ParseError messages name the offending key.
ConstructionSpec parse_construction(std::string_view text);
std::string to_string(const ConstructionSpec& spec);

/// Builds the word and its predictions; expected_length is checked against
/// the built word.
Prediction build(const ConstructionSpec& spec);

/// (base, partial, lead, trail) followed by `tail` letters 'a'.
Prediction build_raw_fs(const FsFactorization& f, std::size_t tail);

}  // namespace sqscope
