#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sqscope/squares.hpp"
#include "sqscope/word.hpp"

namespace sqscope {

/// A maximal block of equal digits; start is 1-based.
struct Run {
  std::uint8_t digit = 0;
  std::size_t start = 1;
  std::size_t length = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Strong selfish-rule verdict for one run of 2's. "Following" means the
/// run that starts right after it; if that run is not 0's the length is 0.
struct SelfishVerdict {
  std::size_t run_start = 1;
  std::size_t two_run_length = 0;
  std::size_t following_zero_run_length = 0;
  bool strong_ok = false;
};

struct RunAnalysis {
  std::vector<Run> runs;
  std::vector<SelfishVerdict> selfish_verdicts;
  /// Every 2 has some 0 further right.
  bool weak_ok = true;

  bool strong_ok() const noexcept;
};

RunAnalysis analyze_runs(const SquareSequence& s);

/// Length conditions forced on m equal-length FS-double-squares (u, U)
/// at positions 1..m:
///   |U| + m <= 2|u|,  |U| >= |u| + m + 1,  |U| >= 3m + 2 and |u| >= 2m + 1.
bool check_length_conditions(std::size_t m, std::size_t len_u, std::size_t len_U);

/// A square last-occurring right after an FS position whose root length is
/// neither |u| nor |U| and shorter than 2|u|.
struct NeighborViolation {
  std::size_t fs_position = 0;
  std::size_t short_length = 0;
  std::size_t long_length = 0;
  std::size_t neighbor_root_length = 0;
};

std::vector<NeighborViolation> check_neighbor_lemma(const Word& w,
                                                    Engine engine = Engine::fast);
std::vector<NeighborViolation> check_neighbor_lemma(
    const std::vector<DistinctSquareRecord>& records);

/// argmax over i in [1..j-1] of the closed-form Y_{i,j} density, compared
/// exactly; ties go to the smaller i.
std::size_t best_i_for_j(std::size_t j);

}  // namespace sqscope
