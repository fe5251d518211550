#pragma once

#include <cstddef>
#include <string>

#include "sqscope/word.hpp"

namespace sqscope {

/// Canonical form of an FS-double-square (u, U):
///   u = base^lead · partial,  U = u · base^trail,
/// with base primitive, partial a proper non-empty prefix of base and
/// 1 <= trail <= lead.
struct FsFactorization {
  Word base;
  Word partial;
  std::size_t lead = 1;
  std::size_t trail = 1;

  friend bool operator==(const FsFactorization&, const FsFactorization&) = default;
};

/// Throws PreconditionError naming the first violated clause.
void validate(const FsFactorization& f);

Word fs_short_root(const FsFactorization& f);
Word fs_long_root(const FsFactorization& f);

/// (base^lead · partial · base^trail)^2.
Word expand_fs(const FsFactorization& f);

/// Recovers the unique factorization of (u, U). Requires u a proper prefix
/// of U, |u| < |U| < 2|u|, and u^2 occurring in U^2 only at position 1.
/// Candidate base lengths are (|U| - |u|) / trail for trail = 1, 2, ...;
/// more or fewer than one match is an EngineInvariantError.
FsFactorization fs_factorize(const Word& u, const Word& U);

/// "(aba, ab, 2, 1)".
std::string to_string(const FsFactorization& f);

}  // namespace sqscope
