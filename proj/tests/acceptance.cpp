// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sqscope/analysis.hpp"
#include "sqscope/catalog.hpp"
#include "sqscope/constructions.hpp"
#include "sqscope/fs.hpp"
#include "sqscope/search.hpp"
#include "sqscope/squares.hpp"
#include "sqscope/verify.hpp"

using namespace sqscope;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure only; later ones add nothing useful.
void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(SQSCOPE_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

// The random corpus shared by criteria 9 and 10.
std::vector<Word> random_corpus() {
  std::mt19937_64 rng(20240611);
  std::vector<Word> out;
  out.reserve(10000);
  for (int t = 0; t < 10000; ++t) out.push_back(random_word(rng, 200, 2, 4));
  return out;
}

Outcome w2_example() {
  Outcome o;
  const Word w = Word::parse("abaababaabaababaa");
  const auto t0 = Clock::now();
  const auto p = profile(w);
  const double ms = ms_since(t0);
  expect(o, p.sequence.str() == "22000011100110010", "sequence " + p.sequence.str());
  expect(o, p.records.size() == 10, "count " + std::to_string(p.records.size()));
  expect(o, p.fs.size() == 2, "fs positions");
  if (p.fs.size() == 2) {
    expect(o, p.fs[0].position == 1 && p.fs[0].short_root.str() == "abaab" &&
                  p.fs[0].long_root.str() == "abaababa",
           "fs at 1");
    expect(o, p.fs[1].position == 2 && p.fs[1].short_root.str() == "baaba" &&
                  p.fs[1].long_root.str() == "baababaa",
           "fs at 2");
  }
  expect(o, ms < 10.0, "took " + std::to_string(ms) + " ms");
  if (o.ok) o.detail = std::to_string(ms) + " ms";
  return o;
}

Outcome fixture2() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto s = distinct_square_sequence(Word::parse("abaaabaaabaaabaabaaabaaabaaaba"));
  const double ms = ms_since(t0);
  expect(o, s.str() == "200111011101111000011110001000", "sequence " + s.str());
  expect(o, ms < 10.0, "took " + std::to_string(ms) + " ms");
  if (o.ok) o.detail = std::to_string(ms) + " ms";
  return o;
}

Outcome wm_sweep() {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::size_t m = 1; m <= 50; ++m) {
    const auto s = distinct_square_sequence(build_wm(m).word, Engine::fast);
    expect(o, s == expected_sequence_wm(m), "m = " + std::to_string(m));
  }
  const double ms = ms_since(t0);
  expect(o, ms < 30000.0, "took " + std::to_string(ms) + " ms");
  if (o.ok) o.detail = "m = 1..50 in " + std::to_string(ms) + " ms";
  return o;
}

Outcome yij_table() {
  Outcome o;
  struct Row { std::size_t i, j, squares, length; const char* density; };
  const Row rows[] = {{1, 2, 16, 26, ".615"},      {1, 3, 31, 48, ".646"},
                      {2, 4, 46, 67, ".687"},      {2, 5, 71, 101, ".703"},
                      {5, 15, 553, 708, ".781"},   {6, 19, 879, 1111, ".791"},
                      {8, 25, 1490, 1861, ".801"}, {11, 36, 3063, 3780, ".810"},
                      {19, 64, 9559, 11656, ".820"}};
  double largest = 0;
  for (const auto& r : rows) {
    const auto t0 = Clock::now();
    const Word w = build_yij(r.i, r.j).word;
    const auto d = density(w, Engine::fast);
    const double ms = ms_since(t0);
    largest = std::max(largest, ms);
    const std::string tag = "(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
    expect(o, d.distinct_count == r.squares, tag + " squares " + std::to_string(d.distinct_count));
    expect(o, d.length == r.length, tag + " length " + std::to_string(d.length));
    expect(o, d.density_3dp() == r.density, tag + " density " + d.density_3dp());
    expect(o, best_i_for_j(r.j) == r.i, tag + " best i");
    expect(o, ms < 60000.0, tag + " took " + std::to_string(ms) + " ms");
  }
  if (o.ok) o.detail = "9 rows, slowest " + std::to_string(largest) + " ms";
  return o;
}

Outcome y515() {
  Outcome o;
  const std::string want = read_golden("y_5_15.seq");
  const auto p = profile(build_yij(5, 15).word);
  expect(o, want.size() == 708, "golden file length " + std::to_string(want.size()));
  expect(o, p.sequence.str() == want, "sequence differs from golden file");
  expect(o, p.records.size() == 553, "count " + std::to_string(p.records.size()));
  expect(o, p.density.density_3dp() == ".781", "density " + p.density.density_3dp());
  return o;
}

Outcome xk_table() {
  Outcome o;
  for (std::size_t k = 1; k <= 12; ++k) {
    const auto pred = build_yij(k, k + 1);
    const auto records = enumerate_distinct_squares(pred.word);
    const auto seq = sequence_from_records(pred.word.size(), records);
    const std::string block = seq.str().substr(0, 6 * k + 3);
    expect(o, block == expected_sequence_xk_block(k).str(), "k = " + std::to_string(k) + " block sequence");
    std::size_t total = 0;
    const auto rows = xk_square_table(k);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& row = rows[r];
      for (std::size_t pos = row.first; pos <= row.last; ++pos) {
        const auto here = records_at(records, pos);
        if (!row.root) {
          expect(o, here.empty(), "k = " + std::to_string(k) + " position " + std::to_string(pos) +
                                      " should start no square");
          continue;
        }
        const Word want = row.root->rotate_left(pos - row.first);
        const bool match = here.size() == 1 && here.front().root == want;
        expect(o, match,
               "k = " + std::to_string(k) + " row " + std::to_string(r + 1) + " position " +
                   std::to_string(pos) + ": table root " + want.str() + ", engine root " +
                   (here.empty() ? std::string("none") : here.front().root.str()));
        total += here.size();
      }
    }
    expect(o, total == 5 * k + 1, "k = " + std::to_string(k) + " total " + std::to_string(total));
  }
  return o;
}

Outcome impossibility() {
  Outcome o;
  using namespace std::chrono_literals;
  const ExistenceQuery none[] = {{1, 6, 8, 2, 16}, {1, 6, 9, 2, 18}, {2, 6, 9, 2, 20}};
  for (const auto& q : none) {
    const auto r = exists_prefix_run(q, 10000ms);
    const std::string tag = "(" + std::to_string(q.m) + "," + std::to_string(q.len_u) + "," +
                            std::to_string(q.len_U) + ")";
    expect(o, r.status == SearchStatus::not_found, tag + " " + std::string(to_string(r.status)));
    expect(o, r.wall_ms < 10000.0, tag + " took " + std::to_string(r.wall_ms) + " ms");
  }
  const auto r = exists_prefix_run({1, 3, 5, 2, 10}, 10000ms);
  expect(o, r.found() && r.witness->size() == 10, "(1,3,5) not found");
  expect(o, r.wall_ms < 10000.0, "(1,3,5) took " + std::to_string(r.wall_ms) + " ms");
  if (o.ok) o.detail = "witness " + r.witness->str();
  return o;
}

Outcome catalog() {
  Outcome o;
  std::size_t densities = 0;
  for (const auto& c : check_catalog()) {
    if (c.entry.printed_thousandths) {
      ++densities;
      expect(o, c.density_matches,
             c.entry.label + ": printed " + format_3dp(*c.entry.printed_thousandths) +
                 ", computed " + format_3dp(c.computed_thousandths));
    }
    // A printed sequence that does not reproduce must come with the computed truth.
    if (!c.sequence_matches) {
      expect(o, !c.discrepancies.empty() && !c.computed_sequence.empty(),
             c.entry.label + ": sequence mismatch not flagged");
    }
  }
  expect(o, densities >= 12, "only " + std::to_string(densities) + " printed densities");
  return o;
}

Outcome equivalence(const std::vector<Word>& corpus) {
  Outcome o;
  std::size_t mismatches = 0;
  for (const auto& w : corpus) {
    if (enumerate_distinct_squares(w, Engine::oracle) != enumerate_distinct_squares(w, Engine::fast)) {
      if (mismatches++ == 0) o.detail = "first mismatch on " + w.str();
    }
  }
  expect(o, mismatches == 0, std::to_string(mismatches) + " mismatches; " + o.detail);
  if (o.ok) o.detail = std::to_string(corpus.size()) + " words, 0 mismatches";
  return o;
}

Outcome structural_properties(const std::vector<Word>& corpus) {
  Outcome o;
  std::vector<Word> words = corpus;
  for (std::size_t m = 1; m <= 50; ++m) words.push_back(build_wm(m).word);
  for (std::size_t j = 2; j <= 25; ++j) {
    for (std::size_t i = 1; i < j; ++i) words.push_back(build_yij(i, j).word);
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t ell = m; ell <= m + 2; ++ell) words.push_back(build_wm_ell(m, ell).word);
  }
  for (const char* z : {"b", "ab", "bb", "abb", "bab"}) {
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t lead = 1; lead <= 3; ++lead) {
        for (std::size_t trail = 1; trail <= lead; ++trail) {
          try {
            words.push_back(build_zword(m, Word::parse(z), lead, trail).word);
          } catch (const std::invalid_argument&) {
          }
        }
      }
    }
  }
  for (const auto& c : altered_word_catalog()) words.push_back(c.word);

  for (const auto& w : words) {
    // sequence_from_records throws if any position would carry three squares.
    try {
      const auto records = enumerate_distinct_squares(w);
      (void)sequence_from_records(w.size(), records);
      expect(o, check_neighbor_lemma(records).empty(), "neighbor violation on " + w.str());
    } catch (const std::exception& e) {
      expect(o, false, std::string(e.what()));
    }
  }

  std::size_t round_trips = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
      std::vector<Letter> letters(n);
      for (std::size_t t = 0; t < n; ++t) letters[t] = static_cast<Letter>((code >> t) & 1u);
      const Word base(letters, 2);
      if (!is_primitive(base)) continue;
      for (std::size_t q = 1; q < n; ++q) {
        for (std::size_t lead = 1; lead <= 3; ++lead) {
          for (std::size_t trail = 1; trail <= lead; ++trail) {
            const FsFactorization f{base, base.slice(0, q), lead, trail};
            expect(o, fs_factorize(fs_short_root(f), fs_long_root(f)) == f,
                   "round trip " + to_string(f));
            ++round_trips;
          }
        }
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(words.size()) + " words, " + std::to_string(round_trips) +
               " factorizations";
  }
  return o;
}

Outcome uniqueness() {
  Outcome o;
  for (std::size_t m = 1; m <= 2; ++m) {
    auto t0 = Clock::now();
    const auto words = scan_fs_prefix_words(7 * m + 3, 2, m, std::pair{2 * m + 1, 3 * m + 2});
    expect(o, words.size() == 2, "m = " + std::to_string(m) + ": " + std::to_string(words.size()) + " words");
    if (words.size() == 2) {
      const Word wm = build_wm(m).word;
      std::vector<Letter> swapped(wm.symbols().begin(), wm.symbols().end());
      for (auto& x : swapped) x = static_cast<Letter>(1 - x);
      const Word other(swapped, 2);
      const bool both = (words[0] == wm && words[1] == other) || (words[0] == other && words[1] == wm);
      expect(o, both, "m = " + std::to_string(m) + ": words are not w_m and its renaming");
    }
    double ms = ms_since(t0);
    expect(o, ms < 60000.0, "uniqueness scan took " + std::to_string(ms) + " ms");

    t0 = Clock::now();
    for (std::size_t n = 1; n < 7 * m + 3; ++n) {
      expect(o, scan_fs_prefix_words(n, 2, m).empty(),
             "m = " + std::to_string(m) + ": length " + std::to_string(n) + " admits a prefix run");
    }
    ms = ms_since(t0);
    expect(o, ms < 60000.0, "minimality scan took " + std::to_string(ms) + " ms");
  }
  return o;
}

}  // namespace

int main() {
  const auto corpus = random_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"w_2 squares and FS positions", w2_example},
      {"mixed-run fixture", fixture2},
      {"closed-form s(w_m), m = 1..50", wm_sweep},
      {"Y_{i,j} density table", yij_table},
      {"Y_{5,15} full sequence", y515},
      {"X_k square table, k = 1..12", xk_table},
      {"prefix-run existence searches", impossibility},
      {"altered-word catalog densities", catalog},
      {"oracle/fast equivalence", [&] { return equivalence(corpus); }},
      {"neighbor lengths, digit bound, factorization round trip",
       [&] { return structural_properties(corpus); }},
      {"w_m uniqueness and minimality", uniqueness},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (c + 1) << " " << criteria[c].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
