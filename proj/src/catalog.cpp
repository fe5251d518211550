#include "sqscope/catalog.hpp"

#include "sqscope/analysis.hpp"
#include "sqscope/constructions.hpp"

namespace sqscope {

namespace {

Word raw(const char* base, const char* partial, std::size_t lead, std::size_t trail,
         std::size_t tail) {
  return build_raw_fs({Word::parse(base), Word::parse(partial), lead, trail}, tail).word;
}

Word drop_last(const Word& w) { return w.slice(0, w.size() - 1); }
Word last_to_b(const Word& w) { return drop_last(w) + Word::parse("b"); }

}  // namespace

std::vector<CatalogEntry> altered_word_catalog() {
  const Word w2 = build_wm(2).word;
  const Word w3 = build_wm(3).word;
  std::vector<CatalogEntry> c;
  // The printed string for this word has 15 digits for 16 letters.
  c.push_back({"w2 without its last letter", drop_last(w2), "210000111011100", std::nullopt, false});
  c.push_back({"w2 with last letter b", last_to_b(w2), "21000011101011000", std::nullopt, false});
  c.push_back({"w3 without its last letter", drop_last(w3), "22100000011110011100010", 565, false});
  c.push_back({"w3 with last letter b", last_to_b(w3), "221000000111100011100100", 542, false});
  c.push_back({"(aba, ab, 2, 1)a", raw("aba", "ab", 2, 1, 1),
               "22011000100011100110010", 565, false});
  c.push_back({"(aba, ab, 3, 1)a", raw("aba", "ab", 3, 1, 1),
               "22011011000011100011100110010", 586, false});
  c.push_back({"(aba, ab, 3, 2)a", raw("aba", "ab", 3, 2, 1),
               "22011000000100011100001110111100010", 514, false});
  c.push_back({"(aaba, aab, 2, 1)aa", raw("aaba", "aab", 2, 1, 2),
               "22201110000110000111100111000010", 594, false});
  c.push_back({"(aaba, aab, 2, 2)", raw("aaba", "aab", 2, 2, 0),
               "21100010000001111000011120011110001000", 500, false});
  c.push_back({"(aaba, aab, 2, 2)aa", raw("aaba", "aab", 2, 2, 2),
               "2220000000000111100000111101111110000010", 525, true});
  c.push_back({"(aaba, aab, 3, 1)", raw("aaba", "aab", 3, 1, 0),
               "21101110111000100111100001111001101000", 579, false});
  c.push_back({"(aaba, aab, 3, 1)a", raw("aaba", "aab", 3, 1, 1),
               "221011101110000001111000011110011100010", 590, false});
  c.push_back({"(aaba, aab, 3, 1)aa", raw("aaba", "aab", 3, 1, 2),
               "2220111011100000011110000111100111000010", 600, false});
  c.push_back({"(aaba, aab, 3, 2)", raw("aaba", "aab", 3, 2, 0),
               "2110111000100001100001111000011120011110001000", 523, false});
  c.push_back({"(aaba, aab, 3, 2)a", raw("aaba", "aab", 3, 2, 1),
               "22101110000000011000011110000111110111110000010", 532, false});
  c.push_back({"(aaba, aab, 3, 2)aa", raw("aaba", "aab", 3, 2, 2),
               "222011100000000110000111100000111101111110000010", 542, false});
  return c;
}

CatalogEntry mixed_length_fixture() {
  return {"two leading FS-double-squares of different lengths",
          Word::parse("babbababbaaabbababbaabbababbaaabbababba"),
          "220000000011100010010000000001001100100", std::nullopt, true};
}

CatalogCheck check_entry(const CatalogEntry& entry, Engine engine) {
  CatalogCheck out;
  out.entry = entry;
  const auto p = profile(entry.word, engine);
  out.computed_sequence = p.sequence;
  out.computed_thousandths = p.density.thousandths;
  out.computed_strong_rule_holds = analyze_runs(p.sequence).strong_ok();
  out.sequence_matches = p.sequence.str() == entry.printed_sequence;
  if (!out.sequence_matches) {
    std::string note = "printed sequence " + entry.printed_sequence + " (" +
                       std::to_string(entry.printed_sequence.size()) +
                       " digits) differs from computed " + p.sequence.str() + " (" +
                       std::to_string(p.sequence.size()) + " digits)";
    out.discrepancies.push_back(std::move(note));
  }
  if (entry.printed_thousandths) {
    out.density_matches = *entry.printed_thousandths == p.density.thousandths;
    if (!out.density_matches) {
      out.discrepancies.push_back(
          "printed density " + format_3dp(*entry.printed_thousandths) +
          " differs from computed " + std::to_string(p.density.distinct_count) + "/" +
          std::to_string(p.density.length) + " = " + p.density.density_3dp());
    }
  }
  return out;
}

std::vector<CatalogCheck> check_catalog(Engine engine) {
  std::vector<CatalogCheck> out;
  for (const auto& e : altered_word_catalog()) out.push_back(check_entry(e, engine));
  return out;
}

}  // namespace sqscope
