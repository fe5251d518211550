#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sqscope/search.hpp"
#include "sqscope/squares.hpp"

namespace sqscope {

/// {"root": "aab", "lastPosition": 8}
nlohmann::json to_json(const DistinctSquareRecord& record);
nlohmann::json to_json(const std::vector<DistinctSquareRecord>& records);

/// {"query": {...}, "searched_alphabet", "searched_length", "found",
///  "status", "witness"?, "wallTimeMs"}
nlohmann::json to_json(const SearchResult& result);

/// {"position", "u", "U"}
nlohmann::json to_json(const DoubleSquare& ds);

}  // namespace sqscope
