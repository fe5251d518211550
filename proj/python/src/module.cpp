#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sqscope/analysis.hpp"
#include "sqscope/constructions.hpp"
#include "sqscope/fs.hpp"
#include "sqscope/search.hpp"
#include "sqscope/squares.hpp"

namespace py = pybind11;
using namespace sqscope;

namespace {

using FsTuple = std::tuple<std::string, std::string, std::size_t, std::size_t>;

FsTuple as_tuple(const FsFactorization& f) {
  return {f.base.str(), f.partial.str(), f.lead, f.trail};
}

FsFactorization from_tuple(const std::string& base, const std::string& partial,
                           std::size_t lead, std::size_t trail) {
  // Shared alphabet so the prefix check compares like with like.
  const Word b = Word::parse(base);
  return {b, Word::parse(partial, b.alphabet_size()), lead, trail};
}

py::dict search(std::size_t m, std::size_t len_u, std::size_t len_U, std::size_t alphabet,
                std::size_t length, std::optional<long long> budget_ms) {
  const auto budget = budget_ms ? std::chrono::milliseconds(*budget_ms) : default_search_budget();
  SearchResult r;
  {
    py::gil_scoped_release release;
    r = exists_prefix_run({m, len_u, len_U, alphabet, length}, budget);
  }
  py::dict out;
  out["status"] = std::string(to_string(r.status));
  out["found"] = r.found();
  out["witness"] = r.witness ? py::cast(r.witness->str()) : py::none();
  out["alphabet"] = r.searched_alphabet;
  out["length"] = r.searched_length;
  out["candidates"] = r.candidates_checked;
  out["wall_ms"] = r.wall_ms;
  return out;
}

}  // namespace

PYBIND11_MODULE(_sqscope, m) {
  m.doc() = "Distinct squares, FS-double-squares and dense word constructions";

  m.def("sequence",
        [](const std::string& w, const std::string& engine) {
          return distinct_square_sequence(Word::parse(w), parse_engine(engine)).str();
        },
        py::arg("word"), py::arg("engine") = "fast",
        "Digit string whose i-th entry counts distinct squares last occurring at i.");

  m.def("distinct_squares",
        [](const std::string& w, const std::string& engine) {
          std::vector<std::pair<std::string, std::size_t>> out;
          for (const auto& r : enumerate_distinct_squares(Word::parse(w), parse_engine(engine))) {
            out.emplace_back(r.root.str(), r.last_position);
          }
          return out;
        },
        py::arg("word"), py::arg("engine") = "fast",
        "(root, 1-based start of last occurrence) per distinct square.");

  m.def("fs_positions",
        [](const std::string& w) {
          std::vector<std::tuple<std::size_t, std::string, std::string>> out;
          for (const auto& d : fs_positions(Word::parse(w))) {
            out.emplace_back(d.position, d.short_root.str(), d.long_root.str());
          }
          return out;
        },
        py::arg("word"), "(position, u, U) for each FS-double-square position.");

  m.def("count_and_length",
        [](const std::string& w) {
          const auto d = density(Word::parse(w));
          return std::pair{d.distinct_count, d.length};
        },
        py::arg("word"));

  m.def("density_3dp", [](const std::string& w) { return density(Word::parse(w)).density_3dp(); },
        py::arg("word"));

  m.def("is_primitive", [](const std::string& w) { return is_primitive(Word::parse(w)); },
        py::arg("word"));

  m.def("build", [](const std::string& spec) { return build(parse_construction(spec)).word.str(); },
        py::arg("spec"), "Word for a construction spec such as 'wm:m=3' or 'yij:i=5,j=15'.");

  m.def("expected_sequence",
        [](const std::string& spec) -> std::optional<std::string> {
          const auto p = build(parse_construction(spec));
          if (!p.expected_sequence) return std::nullopt;
          return p.expected_sequence->str();
        },
        py::arg("spec"));

  m.def("factorize",
        [](const std::string& u, const std::string& U) {
          const Word wu = Word::parse(u);
          const Word wU = Word::parse(U);
          const std::size_t k = std::max(wu.alphabet_size(), wU.alphabet_size());
          return as_tuple(fs_factorize(Word::parse(u, k), Word::parse(U, k)));
        },
        py::arg("u"), py::arg("U"), "(v1, v2, e1, e2) with u = v1^e1 v2, U = v1^e1 v2 v1^e2.");

  m.def("expand",
        [](const std::string& v1, const std::string& v2, std::size_t e1, std::size_t e2) {
          return expand_fs(from_tuple(v1, v2, e1, e2)).str();
        },
        py::arg("v1"), py::arg("v2"), py::arg("e1"), py::arg("e2"));

  m.def("best_i_for_j", &best_i_for_j, py::arg("j"));

  m.def("analyze_runs",
        [](const std::string& digits) {
          const auto r = analyze_runs(SquareSequence::parse(digits));
          py::list runs;
          for (const auto& run : r.runs) runs.append(py::make_tuple(run.digit, run.start, run.length));
          py::dict out;
          out["runs"] = runs;
          out["weak_ok"] = r.weak_ok;
          out["strong_ok"] = r.strong_ok();
          return out;
        },
        py::arg("sequence"));

  m.def("search", &search, py::arg("m"), py::arg("len_u"), py::arg("len_U"),
        py::arg("alphabet") = 2, py::arg("length") = 0, py::arg("budget_ms") = py::none(),
        "Exhaustive search for a word starting with m FS-double-squares of the given lengths.");
}
