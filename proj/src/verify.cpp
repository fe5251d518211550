#include "sqscope/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sqscope/analysis.hpp"
#include "sqscope/catalog.hpp"
#include "sqscope/constructions.hpp"
#include "sqscope/errors.hpp"
#include "sqscope/search.hpp"

namespace sqscope {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

CheckResult compare(std::string name, const std::string& expected,
                    const std::string& computed) {
  return {std::move(name), expected == computed ? CheckStatus::pass : CheckStatus::fail,
          expected, computed};
}

std::string fs_summary(const std::vector<DoubleSquare>& fs) {
  std::string out;
  for (const auto& d : fs) {
    if (!out.empty()) out += ' ';
    out += str(d.position) + ":" + str(d.short_root.size()) + "/" + str(d.long_root.size());
  }
  return out.empty() ? "-" : out;
}

std::string expected_fs_summary(const FsPrefixClaim& c) {
  std::string out;
  for (std::size_t i = 1; i <= c.count; ++i) {
    if (!out.empty()) out += ' ';
    out += str(i) + ":" + str(c.short_length) + "/" + str(c.long_length);
  }
  return out;
}

std::vector<DoubleSquare> leading(const std::vector<DoubleSquare>& fs, std::size_t m) {
  return {fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(std::min(m, fs.size()))};
}

SuiteReport suite_wm(const VerifyBounds& b) {
  SuiteReport r{"wm", {}};
  for (std::size_t m = 1; m <= b.m_max; ++m) {
    const auto pred = build_wm(m);
    const Engine engine = m <= b.oracle_m_max ? Engine::oracle : Engine::fast;
    const auto p = profile(pred.word, engine);
    const std::string expected = pred.expected_sequence->str() + " count=" +
                                 str(*pred.expected_count) + " density=" +
                                 to_string(*pred.expected_density) + " fs=" +
                                 expected_fs_summary(*pred.fs_prefix);
    const std::string computed = p.sequence.str() + " count=" + str(p.records.size()) +
                                 " density=" + to_string(p.density.exact) +
                                 " fs=" + fs_summary(p.fs);
    r.checks.push_back(compare("w_" + str(m) + " [" + std::string(to_string(engine)) + "]",
                               expected, computed));
  }
  return r;
}

SuiteReport suite_yij(const VerifyBounds& b) {
  SuiteReport r{"yij", {}};
  for (std::size_t j = 2; j <= b.j_max; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      const auto pred = build_yij(i, j);
      const auto p = profile(pred.word);
      r.checks.push_back(compare(
          "Y_{" + str(i) + "," + str(j) + "} count/length/sequence",
          str(*pred.expected_count) + "/" + str(pred.expected_length) + "/" +
              (p.sequence == *pred.expected_sequence ? "closed-form" : pred.expected_sequence->str()),
          str(p.records.size()) + "/" + str(pred.word.size()) + "/" +
              (p.sequence == *pred.expected_sequence ? "closed-form" : p.sequence.str())));
    }
  }
  return r;
}

SuiteReport suite_xk(const VerifyBounds& b) {
  SuiteReport r{"xk", {}};
  for (std::size_t k = 1; k <= b.k_max; ++k) {
    const auto pred = build_yij(k, k + 1);
    const auto records = enumerate_distinct_squares(pred.word);
    const auto seq = sequence_from_records(pred.word.size(), records);
    const SquareSequence block(std::vector<std::uint8_t>(
        seq.digits().begin(), seq.digits().begin() + static_cast<std::ptrdiff_t>(6 * k + 3)));
    r.checks.push_back(compare("X_" + str(k) + " block sequence",
                               expected_sequence_xk_block(k).str(), block.str()));
    r.checks.push_back(compare("X_" + str(k) + " squares", str(5 * k + 1),
                               str(block.digit_sum())));
    const auto rows = xk_square_table(k);
    for (std::size_t row = 0; row < rows.size(); ++row) {
      const auto& t = rows[row];
      const std::string name = "X_" + str(k) + " row " + str(row + 1);
      // Positions and counts are structural; printed roots are literals.
      std::size_t occupied = 0;
      std::string got_roots, want_roots;
      for (std::size_t pos = t.first; pos <= t.last; ++pos) {
        const auto here = records_at(records, pos);
        occupied += here.empty() ? 0 : 1;
        if (!got_roots.empty()) got_roots += ',';
        got_roots += here.empty() ? "NONE" : here.front().root.str();
        if (here.size() > 1) got_roots += "+";
        if (!want_roots.empty()) want_roots += ',';
        want_roots += t.root ? t.root->rotate_left(pos - t.first).str() : "NONE";
      }
      const std::size_t want_occupied = t.root ? t.count : 0;
      r.checks.push_back(compare(name + " occupied positions", str(want_occupied), str(occupied)));
      if (t.count > 0 && want_roots != got_roots) {
        r.checks.push_back({name + " roots vs published table", CheckStatus::note,
                            want_roots, got_roots});
      }
    }
  }
  return r;
}

SuiteReport suite_zword(const VerifyBounds& b) {
  SuiteReport r{"zword", {}};
  for (std::size_t m = 1; m <= b.z_max_m; ++m) {
    for (std::size_t len = 1; len <= b.z_max_length; ++len) {
      for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
        std::vector<Letter> z(len);
        for (std::size_t t = 0; t < len; ++t) z[t] = static_cast<Letter>((code >> (len - 1 - t)) & 1u);
        const Word zw(z, 2);
        const Word base = Word::repeat(0, m - 1) + zw + Word::parse("a");
        if (!is_primitive(base)) continue;
        for (std::size_t lead = 1; lead <= b.z_max_lead; ++lead) {
          for (std::size_t trail = 1; trail <= lead; ++trail) {
            const auto pred = build_zword(m, zw, lead, trail);
            const auto fs = fs_positions(pred.word);
            std::string expected, computed;
            for (std::size_t i = 1; i <= m; ++i) {
              const auto [u, U] = zword_roots_at(m, zw, lead, trail, i);
              expected += str(i) + ":" + u.str() + "/" + U.str() + " ";
            }
            for (const auto& d : leading(fs, m)) {
              computed += str(d.position) + ":" + d.short_root.str() + "/" + d.long_root.str() + " ";
            }
            r.checks.push_back(compare("zword:m=" + str(m) + ",Z=" + zw.str() + ",e1=" +
                                           str(lead) + ",e2=" + str(trail),
                                       expected, computed));
          }
        }
      }
    }
  }
  return r;
}

SuiteReport suite_catalog(const VerifyBounds&) {
  SuiteReport r{"section5", {}};
  for (const auto& c : check_catalog()) {
    const auto& e = c.entry;
    r.checks.push_back({e.label + " sequence",
                        c.sequence_matches ? CheckStatus::pass : CheckStatus::note,
                        e.printed_sequence, c.computed_sequence.str()});
    if (e.printed_thousandths) {
      r.checks.push_back({e.label + " density",
                          c.density_matches ? CheckStatus::pass : CheckStatus::note,
                          format_3dp(*e.printed_thousandths),
                          format_3dp(c.computed_thousandths)});
    }
    r.checks.push_back(compare(e.label + " strong selfish rule",
                               e.printed_strong_rule_holds ? "holds" : "broken",
                               c.computed_strong_rule_holds ? "holds" : "broken"));
  }
  const auto fx = check_entry(mixed_length_fixture());
  r.checks.push_back(compare("mixed-length fixture sequence", fx.entry.printed_sequence,
                             fx.computed_sequence.str()));
  r.checks.push_back(compare("mixed-length fixture leading pairs",
                             "1:bab/babba 2:abbababbaa/abbababbaaabbababba",
                             [&] {
                               std::string s;
                               for (const auto& d : leading(fs_positions(fx.entry.word), 2)) {
                                 if (!s.empty()) s += ' ';
                                 s += str(d.position) + ":" + d.short_root.str() + "/" +
                                      d.long_root.str();
                               }
                               return s;
                             }()));
  return r;
}

SuiteReport suite_selfish(const VerifyBounds& b) {
  SuiteReport r{"selfish", {}};
  auto check_word = [&](const std::string& name, const Word& w, bool want_strong) {
    const auto runs = analyze_runs(distinct_square_sequence(w));
    if (want_strong) {
      r.checks.push_back(compare(name + " strong rule", "holds",
                                 runs.strong_ok() ? "holds" : "broken"));
    }
    r.checks.push_back(compare(name + " weak rule", "holds", runs.weak_ok ? "holds" : "REFUTED"));
  };
  for (std::size_t m = 1; m <= std::min<std::size_t>(b.m_max, 20); ++m) {
    check_word("w_" + str(m), build_wm(m).word, true);
  }
  for (std::size_t j = 2; j <= std::min<std::size_t>(b.j_max, 12); ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      check_word("Y_{" + str(i) + "," + str(j) + "}", build_yij(i, j).word, true);
    }
  }
  for (const auto& e : altered_word_catalog()) check_word(e.label, e.word, false);
  std::mt19937_64 rng(b.seed);
  std::size_t weak_failures = 0;
  for (std::size_t t = 0; t < b.random_words; ++t) {
    const Word w = random_word(rng, b.random_max_length);
    if (!analyze_runs(distinct_square_sequence(w)).weak_ok) ++weak_failures;
  }
  r.checks.push_back(compare(str(b.random_words) + " random words weak rule", "0 violations",
                             str(weak_failures) + " violations"));
  return r;
}

SuiteReport suite_impossibility(const VerifyBounds& b) {
  SuiteReport r{"impossibility", {}};
  struct Case {
    ExistenceQuery q;
    bool want_found;
  };
  const std::vector<Case> cases = {
      {{1, 6, 8, 2, 16}, false},
      {{1, 6, 9, 2, 18}, false},
      {{2, 6, 9, 2, 20}, false},
      {{1, 3, 5, 2, 10}, true},
  };
  for (const auto& c : cases) {
    const auto res = exists_prefix_run(c.q, b.budget);
    const std::string name = "m=" + str(c.q.m) + " |u|=" + str(c.q.len_u) + " |U|=" +
                             str(c.q.len_U) + " alphabet=" + str(res.searched_alphabet) +
                             " length=" + str(res.searched_length);
    if (res.status == SearchStatus::inconclusive) {
      r.checks.push_back({name, CheckStatus::inconclusive, c.want_found ? "found" : "not_found",
                          "inconclusive within budget"});
      continue;
    }
    std::string computed(to_string(res.status));
    if (res.witness) computed += " " + res.witness->str();
    r.checks.push_back({name,
                        res.found() == c.want_found ? CheckStatus::pass : CheckStatus::fail,
                        c.want_found ? "found" : "not_found", computed});
  }
  return r;
}

SuiteReport suite_random(const VerifyBounds& b) {
  SuiteReport r{"random", {}};
  std::mt19937_64 rng(b.seed);
  std::size_t mismatches = 0, neighbor = 0;
  for (std::size_t t = 0; t < b.random_words; ++t) {
    const Word w = random_word(rng, b.random_max_length);
    const auto fast = enumerate_distinct_squares(w, Engine::fast);
    if (fast != enumerate_distinct_squares(w, Engine::oracle)) ++mismatches;
    neighbor += check_neighbor_lemma(fast).size();
    sequence_from_records(w.size(), fast);  // throws past two per position
  }
  r.checks.push_back(compare("oracle/fast record sets over " + str(b.random_words) + " words",
                             "0 mismatches", str(mismatches) + " mismatches"));
  r.checks.push_back(compare("neighbor-length property", "0 violations",
                             str(neighbor) + " violations"));
  return r;
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::note: return "NOTE";
    case CheckStatus::inconclusive: return "INCONCLUSIVE";
  }
  return "FAIL";
}

std::size_t SuiteReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == status; }));
}

CheckStatus SuiteReport::overall() const {
  if (count(CheckStatus::fail)) return CheckStatus::fail;
  if (count(CheckStatus::inconclusive)) return CheckStatus::inconclusive;
  return CheckStatus::pass;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "wm", "yij", "xk", "zword", "section5", "selfish", "impossibility", "random"};
  return names;
}

SuiteReport run_suite(std::string_view suite, const VerifyBounds& bounds) {
  static const std::map<std::string, std::function<SuiteReport(const VerifyBounds&)>,
                        std::less<>>
      suites = {
          {"wm", suite_wm},
          {"yij", suite_yij},
          {"xk", suite_xk},
          {"zword", suite_zword},
          {"section5", suite_catalog},
          {"selfish", suite_selfish},
          {"impossibility", suite_impossibility},
          {"random", suite_random},
      };
  auto it = suites.find(suite);
  if (it == suites.end()) throw ParseError("unknown suite '" + std::string(suite) + "'");
  return it->second(bounds);
}

Word random_word(std::mt19937_64& rng, std::size_t max_length, std::size_t min_alphabet,
                 std::size_t max_alphabet) {
  std::uniform_int_distribution<std::size_t> length(1, max_length);
  std::uniform_int_distribution<std::size_t> alphabet(min_alphabet, max_alphabet);
  const std::size_t n = length(rng);
  const std::size_t a = alphabet(rng);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(a) - 1);
  std::vector<Letter> s(n);
  for (auto& c : s) c = static_cast<Letter>(letter(rng));
  return Word(std::move(s), a);
}

}  // namespace sqscope
