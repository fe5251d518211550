// sqscope: distinct-square sequences, extremal constructions and checks.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sqscope/analysis.hpp"
#include "sqscope/constructions.hpp"
#include "sqscope/errors.hpp"
#include "sqscope/fs.hpp"
#include "sqscope/search.hpp"
#include "sqscope/serialize.hpp"
#include "sqscope/squares.hpp"
#include "sqscope/verify.hpp"

namespace {

using namespace sqscope;

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitEngine = 3;
constexpr int kExitInconclusive = 4;

struct Resolved {
  Word word;
  std::optional<Prediction> prediction;
};

// Anything containing ':' is a construction spec, otherwise a literal word.
Resolved resolve(const std::string& input, bool force_spec) {
  if (force_spec || input.find(':') != std::string::npos) {
    auto pred = build(parse_construction(input));
    Word w = pred.word;
    return {std::move(w), std::move(pred)};
  }
  return {Word::parse(input), std::nullopt};
}

void print_aligned(std::ostream& out, const Word& w, const SquareSequence& s,
                   bool positions) {
  std::size_t width = 1;
  if (positions) width = std::to_string(w.size()).size();
  auto cell = [&](const std::string& v) {
    out << ' ' << std::string(width - std::min(width, v.size()), ' ') << v;
  };
  if (positions) {
    out << "i   |";
    for (std::size_t i = 1; i <= w.size(); ++i) cell(std::to_string(i));
    out << '\n';
  }
  out << "w[i]|";
  for (std::size_t i = 0; i < w.size(); ++i) cell(std::string(1, letter_char(w[i])));
  out << "\ns_i |";
  for (auto d : s.digits()) cell(std::to_string(d));
  out << '\n';
}

int cmd_seq(const std::vector<std::string>& args, const std::string& engine_name,
            const std::string& format, bool positions) {
  bool force_spec = false;
  std::string input;
  if (args.size() == 2 && args[0] == "spec") {
    force_spec = true;
    input = args[1];
  } else if (args.size() == 1) {
    input = args[0];
  } else {
    throw ParseError("seq expects one word or 'spec <construction>'");
  }
  const Engine engine = parse_engine(engine_name);
  const auto r = resolve(input, force_spec);
  const auto p = profile(r.word, engine);
  if (format == "digits") {
    std::cout << p.sequence.str() << '\n';
  } else if (format == "json") {
    nlohmann::json j = {
        {"length", p.density.length},
        {"count", p.density.distinct_count},
        {"density", format_3dp_padded(p.density.thousandths)},
        {"sequence", p.sequence.str()},
    };
    auto fs = nlohmann::json::array();
    for (const auto& d : p.fs) fs.push_back(to_json(d));
    j["fs"] = fs;
    std::cout << j.dump() << '\n';
  } else if (format == "csv") {
    std::cout << "length,squares,density,sequence\n"
              << p.density.length << ',' << p.density.distinct_count << ','
              << p.density.density_3dp() << ',' << p.sequence.str() << '\n';
  } else {
    print_aligned(std::cout, r.word, p.sequence, positions);
    std::cout << "squares " << p.density.distinct_count << "  length " << p.density.length
              << "  density " << p.density.density_3dp() << " ("
              << p.density.distinct_count << '/' << p.density.length << ")\n";
    for (const auto& d : p.fs) {
      std::cout << "fs " << d.position << ": (" << d.short_root.str() << ", "
                << d.long_root.str() << ")\n";
    }
  }
  if (r.prediction && r.prediction->expected_sequence &&
      *r.prediction->expected_sequence != p.sequence) {
    std::cerr << "warning: sequence differs from the closed form "
              << r.prediction->expected_sequence->str() << '\n';
  }
  return 0;
}

int cmd_squares(const std::string& input, const std::string& engine_name) {
  const auto r = resolve(input, false);
  std::cout << to_json(enumerate_distinct_squares(r.word, parse_engine(engine_name))).dump()
            << '\n';
  return 0;
}

int cmd_fs(const std::string& input, const std::string& engine_name) {
  const auto r = resolve(input, false);
  for (const auto& d : fs_positions(r.word, parse_engine(engine_name))) {
    std::cout << d.position << ' ' << d.short_root.str() << ' ' << d.long_root.str() << ' '
              << to_string(fs_factorize(d.short_root, d.long_root)) << '\n';
  }
  return 0;
}

int cmd_factorize(const std::string& u, const std::string& U) {
  std::cout << to_string(fs_factorize(Word::parse(u), Word::parse(U))) << '\n';
  return 0;
}

int cmd_build(const std::string& spec) {
  const auto pred = build(parse_construction(spec));
  std::cout << pred.word.str() << '\n';
  return 0;
}

int cmd_table(const std::vector<std::size_t>& js, const std::string& preset, bool formula) {
  std::vector<std::size_t> list = js;
  if (list.empty() || preset == "paper") {
    if (!js.empty() && preset == "paper") throw ParseError("use either --preset or --j");
    list = {2, 3, 4, 5, 15, 19, 25, 36, 64};
  }
  std::cout << "i,j,squares,length,density\n";
  for (std::size_t j : list) {
    if (j < 2) throw DomainError("table: j must be >= 2");
    const std::size_t i = best_i_for_j(j);
    std::size_t squares = 0, length = 0;
    if (formula) {
      squares = yij_count_formula(i, j);
      length = yij_length(i, j);
    } else {
      const auto pred = build_yij(i, j);
      squares = enumerate_distinct_squares(pred.word).size();
      length = pred.word.size();
    }
    std::cout << i << ',' << j << ',' << squares << ',' << length << ','
              << make_density_report(squares, length).density_3dp() << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& suite, const VerifyBounds& bounds, bool quiet) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites = {suite};
  }
  int code = 0;
  for (const auto& name : suites) {
    const auto report = run_suite(name, bounds);
    for (const auto& c : report.checks) {
      if (quiet && c.status == CheckStatus::pass) continue;
      std::cout << to_string(c.status) << "  " << c.name << "\n      expected: " << c.expected
                << "\n      computed: " << c.computed << '\n';
    }
    const auto overall = report.overall();
    std::cout << "verify " << name << ": " << to_string(overall) << " (" << report.checks.size()
              << " checks";
    if (auto notes = report.count(CheckStatus::note)) {
      std::cout << ", " << notes << " published-value discrepancy note"
                << (notes == 1 ? "" : "s");
    }
    if (auto fails = report.count(CheckStatus::fail)) std::cout << ", " << fails << " failed";
    std::cout << ")\n";
    if (overall == CheckStatus::fail) {
      code = kExitMismatch;
    } else if (overall == CheckStatus::inconclusive && code == 0) {
      code = kExitInconclusive;
    }
  }
  return code;
}

int cmd_search(const ExistenceQuery& q, std::chrono::milliseconds budget) {
  const auto res = exists_prefix_run(q, budget);
  std::cout << to_json(res).dump() << '\n';
  return res.status == SearchStatus::inconclusive ? kExitInconclusive : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sqscope: distinct squares, FS-double-squares and square-dense words"};
  app.require_subcommand(1);

  std::string engine = "fast";
  std::string format = "aligned";
  std::uint64_t seed = VerifyBounds{}.seed;
  long long budget_ms = sqscope::default_search_budget().count();

  auto* seq = app.add_subcommand("seq", "Distinct-square sequence and density of a word or spec");
  std::vector<std::string> seq_args;
  bool positions = false;
  seq->add_option("input", seq_args, "WORD, SPEC, or 'spec SPEC'")->required()->expected(1, 2);
  seq->add_option("--engine", engine)->check(CLI::IsMember({"oracle", "fast"}));
  seq->add_option("--format", format)->check(CLI::IsMember({"aligned", "digits", "json", "csv"}));
  seq->add_flag("--positions", positions, "Add a position row to aligned output");

  auto* squares = app.add_subcommand("squares", "Distinct squares with last positions, as JSON");
  std::string squares_input;
  squares->add_option("input", squares_input)->required();
  squares->add_option("--engine", engine)->check(CLI::IsMember({"oracle", "fast"}));

  auto* fs = app.add_subcommand("fs", "FS-double-square positions with factorizations");
  std::string fs_input;
  fs->add_option("input", fs_input)->required();
  fs->add_option("--engine", engine)->check(CLI::IsMember({"oracle", "fast"}));

  auto* factorize = app.add_subcommand("factorize", "Factorize an FS-double-square (u, U)");
  std::string fu, fU;
  factorize->add_option("u", fu)->required();
  factorize->add_option("U", fU)->required();

  auto* buildc = app.add_subcommand("build", "Print the word a construction spec denotes");
  std::string build_spec;
  buildc->add_option("spec", build_spec)->required();

  auto* table = app.add_subcommand("table", "CSV rows i,j,squares,length,density for Y_{i,j}");
  std::vector<std::size_t> js;
  std::string preset;
  bool formula = false;
  table->add_option("--j", js, "j values; i is chosen to maximize density");
  table->add_option("--preset", preset)->check(CLI::IsMember({"paper"}));
  table->add_flag("--formula", formula, "Use the closed forms instead of enumeration");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  VerifyBounds bounds;
  bool quiet = false;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_choices));
  verify->add_option("--m-max", bounds.m_max);
  verify->add_option("--j-max", bounds.j_max);
  verify->add_option("--k-max", bounds.k_max);
  verify->add_option("--random-words", bounds.random_words);
  verify->add_option("--seed", seed);
  verify->add_option("--budget-ms", budget_ms);
  verify->add_flag("--quiet", quiet, "Only print non-passing checks");

  auto* search = app.add_subcommand("search", "Exhaustive search for a prefix run of FS-double-squares");
  ExistenceQuery query;
  search->add_option("--m", query.m)->required();
  search->add_option("--len-u", query.len_u)->required();
  search->add_option("--len-U", query.len_U)->required();
  search->add_option("--alphabet", query.alphabet_size);
  search->add_option("--length", query.scan_length, "0 = shortest possible");
  search->add_option("--budget-ms", budget_ms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*seq) return cmd_seq(seq_args, engine, format, positions);
    if (*squares) return cmd_squares(squares_input, engine);
    if (*fs) return cmd_fs(fs_input, engine);
    if (*factorize) return cmd_factorize(fu, fU);
    if (*buildc) return cmd_build(build_spec);
    if (*table) return cmd_table(js, preset, formula);
    if (*verify) {
      bounds.seed = seed;
      bounds.budget = std::chrono::milliseconds(budget_ms);
      return cmd_verify(suite, bounds, quiet);
    }
    if (*search) return cmd_search(query, std::chrono::milliseconds(budget_ms));
  } catch (const EngineInvariantError& e) {
    std::cerr << "engine invariant violated: " << e.what() << '\n';
    return kExitEngine;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}
