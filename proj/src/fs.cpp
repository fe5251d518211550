#include "sqscope/fs.hpp"

#include <optional>

#include "sqscope/errors.hpp"
#include "sqscope/squares.hpp"

namespace sqscope {

void validate(const FsFactorization& f) {
  if (f.base.empty()) throw PreconditionError("base must be non-empty");
  if (!is_primitive(f.base)) {
    throw PreconditionError("base '" + f.base.str() + "' is not primitive");
  }
  if (f.partial.empty()) throw PreconditionError("partial must be non-empty");
  if (f.partial.size() >= f.base.size() || !f.base.starts_with(f.partial)) {
    throw PreconditionError("partial '" + f.partial.str() +
                            "' is not a proper prefix of base '" +
                            f.base.str() + "'");
  }
  if (f.trail < 1) throw PreconditionError("trail exponent must be >= 1");
  if (f.trail > f.lead) {
    throw PreconditionError("trail exponent " + std::to_string(f.trail) +
                            " exceeds lead exponent " + std::to_string(f.lead));
  }
}

Word fs_short_root(const FsFactorization& f) {
  return f.base.power(f.lead) + f.partial;
}

Word fs_long_root(const FsFactorization& f) {
  return fs_short_root(f) + f.base.power(f.trail);
}

Word expand_fs(const FsFactorization& f) {
  validate(f);
  return fs_long_root(f).power(2);
}

FsFactorization fs_factorize(const Word& u, const Word& U) {
  if (u.empty() || !U.starts_with(u) || U.size() <= u.size()) {
    throw DomainError("fs_factorize: u must be a proper non-empty prefix of U");
  }
  if (U.size() >= 2 * u.size()) {
    throw DomainError("fs_factorize: need |U| < 2|u|");
  }
  const Word big = U.power(2);
  if (find_occurrences(big, u.power(2)).size() != 1) {
    throw DomainError("fs_factorize: u^2 occurs in U^2 beyond position 1");
  }

  const std::size_t gap = U.size() - u.size();
  std::optional<FsFactorization> found;
  std::size_t matches = 0;
  for (std::size_t trail = 1; trail <= gap; ++trail) {
    if (gap % trail != 0) continue;
    const std::size_t period = gap / trail;
    if (period > u.size()) continue;
    const std::size_t lead = u.size() / period;
    const std::size_t rest = u.size() % period;
    if (rest == 0 || trail > lead) continue;
    FsFactorization f{u.slice(0, period), u.slice(lead * period, rest), lead, trail};
    if (!is_primitive(f.base) || !f.base.starts_with(f.partial)) continue;
    if (fs_short_root(f) != u || fs_long_root(f) != U) continue;
    ++matches;
    if (!found) found = f;
  }
  if (matches != 1) {
    throw EngineInvariantError("fs_factorize: " + std::to_string(matches) +
                               " factorizations of (" + u.str() + ", " +
                               U.str() + ")");
  }
  return *found;
}

std::string to_string(const FsFactorization& f) {
  return "(" + f.base.str() + ", " + f.partial.str() + ", " +
         std::to_string(f.lead) + ", " + std::to_string(f.trail) + ")";
}

}  // namespace sqscope
