#include "sqscope/analysis.hpp"

#include "sqscope/constructions.hpp"
#include "sqscope/errors.hpp"

namespace sqscope {

bool RunAnalysis::strong_ok() const noexcept {
  for (const auto& v : selfish_verdicts) {
    if (!v.strong_ok) return false;
  }
  return true;
}

RunAnalysis analyze_runs(const SquareSequence& s) {
  if (s.empty()) throw DomainError("analyze_runs: empty sequence");
  RunAnalysis out;
  const auto& d = s.digits();
  for (std::size_t i = 0; i < d.size();) {
    std::size_t j = i;
    while (j < d.size() && d[j] == d[i]) ++j;
    out.runs.push_back({d[i], i + 1, j - i});
    i = j;
  }
  for (std::size_t r = 0; r < out.runs.size(); ++r) {
    if (out.runs[r].digit != 2) continue;
    SelfishVerdict v;
    v.run_start = out.runs[r].start;
    v.two_run_length = out.runs[r].length;
    if (r + 1 < out.runs.size() && out.runs[r + 1].digit == 0) {
      v.following_zero_run_length = out.runs[r + 1].length;
    }
    v.strong_ok = v.following_zero_run_length >= 2 * v.two_run_length;
    out.selfish_verdicts.push_back(v);
  }
  bool zero_to_right = false;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) zero_to_right = true;
    if (d[i] == 2 && !zero_to_right) {
      out.weak_ok = false;
      break;
    }
  }
  return out;
}

bool check_length_conditions(std::size_t m, std::size_t len_u, std::size_t len_U) {
  return len_U + m <= 2 * len_u && len_U >= len_u + m + 1 &&
         len_U >= 3 * m + 2 && len_u >= 2 * m + 1;
}

std::vector<NeighborViolation> check_neighbor_lemma(
    const std::vector<DistinctSquareRecord>& records) {
  std::vector<NeighborViolation> out;
  for (const auto& ds : fs_positions_from_records(records)) {
    const std::size_t su = ds.short_root.size();
    const std::size_t lu = ds.long_root.size();
    for (const auto& r : records_at(records, ds.position + 1)) {
      const std::size_t len = r.root.size();
      if (len == su || len == lu || len >= 2 * su) continue;
      out.push_back({ds.position, su, lu, len});
    }
  }
  return out;
}

std::vector<NeighborViolation> check_neighbor_lemma(const Word& w, Engine engine) {
  return check_neighbor_lemma(enumerate_distinct_squares(w, engine));
}

std::size_t best_i_for_j(std::size_t j) {
  if (j < 2) throw DomainError("best_i_for_j: need j >= 2");
  std::size_t best = 1;
  Rational best_density = yij_density_formula(1, j);
  for (std::size_t i = 2; i < j; ++i) {
    const Rational d = yij_density_formula(i, j);
    if (d > best_density) {
      best = i;
      best_density = d;
    }
  }
  return best;
}

}  // namespace sqscope
