#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sqscope/squares.hpp"

namespace sqscope {

/// PASS/FAIL compare computed values against theory. NOTE records a
/// published literal (a printed digit string, density or table root) that
/// does not reproduce. INCONCLUSIVE means a search ran out of budget.
enum class CheckStatus { pass, fail, note, inconclusive };
std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string expected;
  std::string computed;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus status) const;
  /// fail beats inconclusive beats pass.
  CheckStatus overall() const;
};

struct VerifyBounds {
  std::size_t m_max = 50;
  /// w_m up to this m is checked with the oracle, beyond with the fast engine.
  std::size_t oracle_m_max = 20;
  std::size_t j_max = 25;
  std::size_t k_max = 12;
  std::size_t z_max_length = 4;
  std::size_t z_max_m = 4;
  std::size_t z_max_lead = 3;
  std::size_t random_words = 2000;
  std::size_t random_max_length = 200;
  std::uint64_t seed = 20240611;
  std::chrono::milliseconds budget{10000};
};

/// Suites: wm, yij, xk, zword, section5, selfish, impossibility, random.
const std::vector<std::string>& suite_names();

/// Runs one suite; "all" is not accepted here (see suite_names()).
SuiteReport run_suite(std::string_view suite, const VerifyBounds& bounds);

}  // namespace sqscope

#include <random>

namespace sqscope {

/// Uniform length in [1, max_length], uniform alphabet size in
/// [min_alphabet, max_alphabet], uniform letters.
Word random_word(std::mt19937_64& rng, std::size_t max_length,
                 std::size_t min_alphabet = 2, std::size_t max_alphabet = 4);

}  // namespace sqscope
