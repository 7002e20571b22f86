#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scfgrid/ablist.hpp"
#include "scfgrid/grid.hpp"
#include "scfgrid/quota.hpp"

namespace scfgrid {

// {"n": int, "cells": "ab..."}
nlohmann::json to_json(const GridFunction& f);
GridFunction function_from_json(const nlohmann::json& j);

// {"n": int, "q": [...]}
nlohmann::json to_json(const ABList& q);
ABList ablist_from_json(const nlohmann::json& j);

// {"n": int, "k": [...]}
nlohmann::json to_json(const QuotaSequence& ks);
QuotaSequence quotas_from_json(const nlohmann::json& j);

// "5,3,2,6,1,4" -> {5, 3, 2, 6, 1, 4}. Throws DomainError on malformed input.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace scfgrid
