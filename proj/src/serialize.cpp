#include "sqscope/serialize.hpp"

namespace sqscope {

nlohmann::json to_json(const DistinctSquareRecord& record) {
  return {{"root", record.root.str()}, {"lastPosition", record.last_position}};
}

nlohmann::json to_json(const std::vector<DistinctSquareRecord>& records) {
  auto out = nlohmann::json::array();
  for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

nlohmann::json to_json(const SearchResult& result) {
  const auto& q = result.query;
  nlohmann::json out = {
      {"query",
       {{"m", q.m},
        {"len_u", q.len_u},
        {"len_U", q.len_U},
        {"alphabet_size", q.alphabet_size},
        {"scan_length", result.searched_length}}},
      {"searched_alphabet", result.searched_alphabet},
      {"searched_length", result.searched_length},
      {"found", result.found()},
      {"status", std::string(to_string(result.status))},
  };
  if (result.witness) out["witness"] = result.witness->str();
  out["wallTimeMs"] = result.wall_ms;
  return out;
}

nlohmann::json to_json(const DoubleSquare& ds) {
  return {{"position", ds.position}, {"u", ds.short_root.str()}, {"U", ds.long_root.str()}};
}

}  // namespace sqscope
