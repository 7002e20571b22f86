#include "scfgrid/io.hpp"

#include <charconv>

#include "scfgrid/error.hpp"

namespace scfgrid {

namespace {

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing JSON field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad JSON field \"") + key + "\": " + e.what());
  }
}

}  // namespace

nlohmann::json to_json(const GridFunction& f) { return {{"n", f.n()}, {"cells", f.cells()}}; }

GridFunction function_from_json(const nlohmann::json& j) {
  return GridFunction::from_cells(field<int>(j, "n"), field<std::string>(j, "cells"));
}

nlohmann::json to_json(const ABList& q) { return {{"n", q.n()}, {"q", q.terms()}}; }

ABList ablist_from_json(const nlohmann::json& j) {
  return ABList(field<int>(j, "n"), field<std::vector<int>>(j, "q"));
}

nlohmann::json to_json(const QuotaSequence& ks) { return {{"n", ks.n}, {"k", ks.quotas}}; }

QuotaSequence quotas_from_json(const nlohmann::json& j) {
  return {field<int>(j, "n"), field<std::vector<int>>(j, "k")};
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) throw DomainError("empty integer list");
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw DomainError("malformed integer \"" + std::string(item) + "\" in list \"" + std::string(text) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace scfgrid
