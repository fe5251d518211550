#include "sqscope/search.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "sqscope/errors.hpp"
#include "sqscope/squares.hpp"

namespace sqscope {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    // The smaller index stays root so roots are first positions.
    if (a == b) return;
    if (a < b) parent_[b] = a; else parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool occurs_after(std::span<const Letter> w, std::size_t start, std::size_t len) {
  for (std::size_t j = start + 1; j + len <= w.size(); ++j) {
    bool same = true;
    for (std::size_t t = 0; t < len && same; ++t) same = w[j + t] == w[start + t];
    if (same) return true;
  }
  return false;
}

void validate(const ExistenceQuery& q) {
  if (q.m < 1) throw DomainError("query: m must be >= 1");
  if (!(q.len_u < q.len_U && q.len_U < 2 * q.len_u)) {
    throw DomainError("query: need len_u < len_U < 2 len_u");
  }
  if (q.alphabet_size < 2 || q.alphabet_size > kMaxAlphabet) {
    throw DomainError("query: alphabet size must be in [2, 256]");
  }
  if (q.scan_length != 0 && q.scan_length < 2 * q.len_U + q.m - 1) {
    throw DomainError("query: scan_length must be >= 2 len_U + m - 1");
  }
}

}  // namespace

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::not_found: return "not_found";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::chrono::milliseconds default_search_budget() {
  if (const char* env = std::getenv("SQSCOPE_BUDGET_MS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::chrono::milliseconds(v);
  }
  return std::chrono::milliseconds(10000);
}

bool has_fs_prefix_run(const Word& w, std::size_t m,
                       std::optional<std::pair<std::size_t, std::size_t>> lengths) {
  if (w.empty() || m == 0) return false;
  const auto fs = fs_positions(w);
  if (fs.size() < m) return false;
  const std::size_t su = lengths ? lengths->first : fs[0].short_root.size();
  const std::size_t lu = lengths ? lengths->second : fs[0].long_root.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (fs[i].position != i + 1 || fs[i].short_root.size() != su ||
        fs[i].long_root.size() != lu) {
      return false;
    }
  }
  return true;
}

SearchResult exists_prefix_run(const ExistenceQuery& query,
                               std::chrono::milliseconds budget) {
  validate(query);
  const auto started = std::chrono::steady_clock::now();
  SearchResult result;
  result.query = query;
  const std::size_t n =
      query.scan_length ? query.scan_length : 2 * query.len_U + query.m - 1;
  result.searched_alphabet = query.alphabet_size;
  result.searched_length = n;

  DisjointSets sets(n);
  for (std::size_t i = 0; i < query.m; ++i) {
    for (std::size_t len : {query.len_u, query.len_U}) {
      for (std::size_t t = 0; t < len; ++t) sets.unite(i + t, i + len + t);
    }
  }
  std::vector<std::size_t> class_of(n);
  std::vector<std::size_t> class_index(n, n);
  std::size_t classes = 0;
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t root = sets.find(p);
    if (class_index[root] == n) class_index[root] = classes++;
    class_of[p] = class_index[root];
  }
  result.free_classes = classes;

  // Classes are numbered by first position, so counting through assignments
  // in restricted-growth order visits candidate words in lexicographic order.
  std::vector<Letter> assignment(classes, 0);
  std::vector<Letter> word(n, 0);
  std::vector<std::size_t> prefix_max(classes + 1, 0);  // max letter + 1 used before class c

  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  };
  auto finish = [&](SearchStatus status) {
    result.status = status;
    result.wall_ms = elapsed().count();
    return result;
  };

  auto is_witness = [&]() {
    for (std::size_t p = 0; p < n; ++p) word[p] = assignment[class_of[p]];
    const std::span<const Letter> w(word);
    for (std::size_t i = 0; i < query.m; ++i) {
      if (occurs_after(w, i, 2 * query.len_u)) return false;
      if (occurs_after(w, i, 2 * query.len_U)) return false;
    }
    return true;
  };

  // Iterative odometer over restricted-growth strings.
  std::size_t c = 0;
  prefix_max[0] = 0;
  bool fresh = true;
  while (true) {
    if (c == classes) {
      ++result.candidates_checked;
      if ((result.candidates_checked & 0x3ff) == 0 && elapsed() > budget) {
        return finish(SearchStatus::inconclusive);
      }
      if (is_witness()) {
        Word witness(word, query.alphabet_size);
        if (!has_fs_prefix_run(witness, query.m, std::pair{query.len_u, query.len_U})) {
          throw EngineInvariantError("search witness '" + witness.str() +
                                     "' failed re-verification");
        }
        result.witness = std::move(witness);
        return finish(SearchStatus::found);
      }
      // Backtrack.
      if (c == 0) break;
      --c;
      fresh = false;
      continue;
    }
    const std::size_t limit = std::min(prefix_max[c] + 1, query.alphabet_size);
    if (fresh) {
      assignment[c] = 0;
    } else if (std::size_t{assignment[c]} + 1 < limit) {
      ++assignment[c];
    } else {
      if (c == 0) break;
      --c;
      continue;
    }
    prefix_max[c + 1] = std::max(prefix_max[c], std::size_t{assignment[c]} + 1);
    ++c;
    fresh = true;
  }
  return finish(SearchStatus::not_found);
}

std::vector<Word> scan_fs_prefix_words(
    std::size_t length, std::size_t alphabet_size, std::size_t m,
    std::optional<std::pair<std::size_t, std::size_t>> lengths) {
  if (length == 0 || alphabet_size < 2) throw DomainError("scan: bad arguments");
  double total = 1;
  for (std::size_t t = 0; t < length; ++t) total *= static_cast<double>(alphabet_size);
  if (total > static_cast<double>(1u << 26)) {
    throw DomainError("scan: " + std::to_string(alphabet_size) + "^" +
                      std::to_string(length) + " words exceeds the 2^26 cap");
  }
  std::vector<Word> out;
  std::vector<Letter> digits(length, 0);
  while (true) {
    const Word w(digits, alphabet_size);
    if (has_fs_prefix_run(w, m, lengths)) out.push_back(w);
    std::size_t p = length;
    while (p > 0 && std::size_t{digits[p - 1]} + 1 == alphabet_size) digits[--p] = 0;
    if (p == 0) break;
    ++digits[p - 1];
  }
  return out;
}

}  // namespace sqscope
