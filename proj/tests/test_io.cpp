#include <doctest.h>

#include <random>

#include "scfgrid/error.hpp"
#include "scfgrid/io.hpp"

using namespace scfgrid;

TEST_CASE("function table JSON") {
  const GridFunction f = GridFunction::constant(Grid(0), Alternative::A);
  CHECK(to_json(f).dump() == R"({"cells":"a","n":0})");
  CHECK(function_from_json(nlohmann::json::parse(R"({"n":1,"cells":"bab"})")) == GridFunction::from_cells(1, "bab"));
  CHECK_THROWS_AS(function_from_json(nlohmann::json::parse(R"({"n":1,"cells":"ba"})")), DomainError);
  CHECK_THROWS_AS(function_from_json(nlohmann::json::parse(R"({"cells":"a"})")), DomainError);
  CHECK_THROWS_AS(function_from_json(nlohmann::json::parse(R"({"n":"x","cells":"a"})")), DomainError);

  std::mt19937_64 rng(5);
  for (int n = 0; n <= 9; ++n) {
    std::vector<Alternative> table(Grid(n).size());
    for (auto& x : table) x = rng() & 1U ? Alternative::A : Alternative::B;
    const GridFunction g(Grid(n), std::move(table));
    CHECK(function_from_json(nlohmann::json::parse(to_json(g).dump())) == g);
  }
}

TEST_CASE("list and quota JSON") {
  const ABList q(20, {5, 3, 2, 6, 1, 4});
  CHECK(to_json(q).dump() == R"({"n":20,"q":[5,3,2,6,1,4]})");
  CHECK(ablist_from_json(to_json(q)) == q);
  CHECK_THROWS_AS(ablist_from_json(nlohmann::json::parse(R"({"n":20,"q":[5,3]})")), DomainError);

  const QuotaSequence k{20, {8, 14, 7, 19, 3, 21}};
  CHECK(to_json(k).dump() == R"({"k":[8,14,7,19,3,21],"n":20})");
  CHECK(quotas_from_json(to_json(k)) == k);
}

TEST_CASE("parse_int_list") {
  CHECK(parse_int_list("5,3,2,6,1,4") == std::vector<int>{5, 3, 2, 6, 1, 4});
  CHECK(parse_int_list("0") == std::vector<int>{0});
  CHECK(parse_int_list("-1,2") == std::vector<int>{-1, 2});
  CHECK_THROWS_AS(parse_int_list(""), DomainError);
  CHECK_THROWS_AS(parse_int_list("5,,3"), DomainError);
  CHECK_THROWS_AS(parse_int_list("5,3,"), DomainError);
  CHECK_THROWS_AS(parse_int_list("5;3"), DomainError);
  CHECK_THROWS_AS(parse_int_list(" 5"), DomainError);
}
