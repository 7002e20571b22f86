#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "scfgrid/ablist.hpp"
#include "scfgrid/error.hpp"
#include "scfgrid/render.hpp"

using namespace scfgrid;

namespace {

std::size_t count_substr(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(SCFGRID_GOLDEN_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("render_ascii layout") {
  CHECK(render_ascii(GridFunction::constant(Grid(1), Alternative::A)) == "a\naa\n");
  CHECK(render_ascii(GridFunction::from_cells(1, "bab")) == "b\nba\n");
  CHECK_THROWS_AS(render_ascii(GridFunction::constant(Grid(61), Alternative::A)), ResourceError);
  CHECK_NOTHROW(render_ascii(GridFunction::constant(Grid(61), Alternative::A), 61));
}

TEST_CASE("render_ascii reproduces both n = 20 figures") {
  const std::string fig0 = render_ascii(build_f_from_q(ABList(20, {5, 3, 2, 6, 1, 4})));
  CHECK(fig0 == read_golden("figure0.txt"));
  std::istringstream rows(fig0);
  std::vector<std::string> lines;
  for (std::string line; std::getline(rows, line);) lines.push_back(line);
  REQUIRE(lines.size() == 21);
  for (int m = 0; m < 5; ++m) CHECK(lines[static_cast<std::size_t>(20 - m)] == std::string(21 - m, 'a'));
  for (int m = 5; m <= 20; ++m) CHECK(lines[static_cast<std::size_t>(20 - m)][0] == 'b');

  const std::string fig1 = render_ascii(build_f_from_q(ABList(20, {0, 3, 2, 4, 5, 1, 6})));
  CHECK(fig1 == read_golden("figure0_bis.txt"));
  std::istringstream rows1(fig1);
  for (std::string line; std::getline(rows1, line);)
    CHECK(line.substr(0, 3) == std::string(std::min<std::size_t>(3, line.size()), 'b'));
}

TEST_CASE("parse_ascii inverts render_ascii") {
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 8; ++n) {
    const Grid g(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Alternative> table(g.size());
      for (auto& x : table) x = rng() & 1U ? Alternative::A : Alternative::B;
      const GridFunction f(g, std::move(table));
      CHECK(parse_ascii(render_ascii(f)) == f);
    }
  }
  CHECK_THROWS_AS(parse_ascii("a\na\n"), DomainError);
  CHECK_THROWS_AS(parse_ascii("a\nax\n"), DomainError);
  CHECK_THROWS_AS(parse_ascii(""), DomainError);
}

TEST_CASE("runs partition the grid") {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 7; ++n) {
    const Grid g(n);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Alternative> table(g.size());
      for (auto& x : table) x = rng() & 1U ? Alternative::A : Alternative::B;
      const GridFunction f(g, std::move(table));
      std::vector<int> hits(g.size(), 0);
      for (const Run& r : runs(f)) {
        for (int k = r.from.k; k <= r.to.k; ++k)
          for (int m = r.from.m; m <= r.to.m; ++m) {
            CHECK(f(k, m) == r.value);
            ++hits[g.index({k, m})];
          }
      }
      for (int h : hits) CHECK(h == 1);
    }
  }
}

TEST_CASE("run structure of built rules") {
  const auto b_runs = runs(GridFunction::constant(Grid(2), Alternative::B));
  REQUIRE(b_runs.size() == 3);
  for (const Run& r : b_runs) CHECK(r.value == Alternative::B);

  const auto fig0 = runs(build_f_from_q(ABList(20, {5, 3, 2, 6, 1, 4})));
  for (int m = 0; m < 5; ++m) {
    CHECK(fig0[static_cast<std::size_t>(m)].value == Alternative::A);
    CHECK(fig0[static_cast<std::size_t>(m)].length() == 21 - m);
  }

  // One a-run per a-row: the odd-indexed terms count the rows.
  for (int n = 0; n <= 7; ++n) {
    for (const ABList& q : enumerate_ablists(Grid(n))) {
      int odd_sum = 0;
      int even_sum = 0;
      for (std::size_t i = 0; i < q.size(); ++i) (i % 2 == 0 ? odd_sum : even_sum) += q[i];
      const auto rs = runs(build_f_from_q(q));
      const auto a_runs = std::count_if(rs.begin(), rs.end(), [](const Run& r) { return r.value == Alternative::A; });
      CHECK(a_runs == odd_sum);
      CHECK(static_cast<int>(rs.size()) - a_runs == even_sum);
    }
  }
}

TEST_CASE("render_svg") {
  const std::string svg = render_svg(GridFunction::constant(Grid(2), Alternative::B));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count_substr(svg, "class=\"run-b\"") == 3);
  CHECK(count_substr(svg, "class=\"run-a\"") == 0);
  CHECK(count_substr(svg, "class=\"diagonal\"") == 1);
  CHECK(render_svg(GridFunction::constant(Grid(2), Alternative::B)) == svg);

  const std::string fig0 = render_svg(build_f_from_q(ABList(20, {5, 3, 2, 6, 1, 4})));
  CHECK(count_substr(fig0, "class=\"run-a\"") == 8);   // 5 + 2 + 1 rows
  CHECK(count_substr(fig0, "class=\"run-b\"") == 13);  // 3 + 6 + 4 columns
  // Bottom row from (0,0) to (20,0): y is flipped, 20px pitch, 20px margin.
  CHECK(fig0.find("<line class=\"run-a\" x1=\"20\" y1=\"420\" x2=\"420\" y2=\"420\"") != std::string::npos);
  CHECK(fig0.find("stroke=\"magenta\"") != std::string::npos);
  CHECK(fig0.find("stroke=\"blue\"") != std::string::npos);
}
