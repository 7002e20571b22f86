// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "scfgrid/ablist.hpp"
#include "scfgrid/profiles.hpp"
#include "scfgrid/quota.hpp"
#include "scfgrid/render.hpp"

using namespace scfgrid;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > budget_s) v.require(false, "over time budget");
  if (!v.ok) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (v.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << secs << " s)";
  if (!v.ok) line << ": " << v.detail;
  std::cout << line.str() << std::endl;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::uint64_t table_count(int n) { return std::uint64_t{1} << Grid(n).size(); }

}  // namespace

int main() {
  criterion(1, "dually monotone counts and list enumeration", 60, [] {
    Verdict v;
    for (int n = 2; n <= 4; ++n) {
      std::uint64_t count = 0;
      for (std::uint64_t bits = 0; bits < table_count(n); ++bits)
        count += is_dually_monotone(GridFunction::from_bits(Grid(n), bits)) ? 1 : 0;
      v.require(count == (std::uint64_t{1} << (n + 1)), "count mismatch at n=" + std::to_string(n));
    }
    for (int n = 0; n <= 14; ++n)
      v.require(enumerate_ablists(Grid(n)).size() == (std::size_t{1} << (n + 1)),
                "enumeration size at n=" + std::to_string(n));
    return v;
  });

  criterion(2, "strategy-proof iff dually monotone, every table n <= 4", 120, [] {
    Verdict v;
    for (int n = 0; n <= 4; ++n)
      for (std::uint64_t bits = 0; bits < table_count(n); ++bits) {
        const GridFunction f = GridFunction::from_bits(Grid(n), bits);
        const bool sp = !find_manipulation(ScfOracle::from_function(f)).has_value();
        v.require(sp == is_dually_monotone(f), "disagreement at n=" + std::to_string(n));
        v.require(grid_manipulation_check(f) == sp, "grid check disagrees at n=" + std::to_string(n));
      }
    return v;
  });

  criterion(3, "lists and dually monotone functions are in bijection", 120, [] {
    Verdict v;
    for (int n = 0; n <= 8; ++n) {
      std::set<std::string> images;
      for (const ABList& q : enumerate_ablists(Grid(n))) {
        const GridFunction f = build_f_from_q(q);
        v.require(is_dually_monotone(f), "built function not dually monotone");
        v.require(decompose(f) == q, "decompose(build(q)) != q");
        images.insert(f.cells());
      }
      v.require(images.size() == (std::size_t{1} << (n + 1)), "build not injective");
    }
    for (int n = 0; n <= 4; ++n)
      for (std::uint64_t bits = 0; bits < table_count(n); ++bits) {
        const GridFunction f = GridFunction::from_bits(Grid(n), bits);
        if (is_dually_monotone(f)) v.require(build_f_from_q(decompose(f)) == f, "build(decompose(f)) != f");
      }
    return v;
  });

  criterion(4, "worked conversion example, both directions", 5, [] {
    Verdict v;
    const QuotaSequence k{20, {8, 14, 7, 19, 3, 21}};
    const ABList q = q_from_quotas(k);
    v.require(format_terms(q.terms()) == "0,3,2,4,5,1,6", "q = " + format_terms(q.terms()));
    const QuotaSequence back = quotas_from_q(ABList(20, {0, 3, 2, 4, 5, 1, 6}));
    v.require(format_terms(back.quotas) == "8,14,7,19,3,21", "k = " + format_terms(back.quotas));
    return v;
  });

  criterion(5, "quota regions agree with the converted list rule", 60, [] {
    Verdict v;
    const QuotaSequence k{20, {8, 14, 7, 19, 3, 21}};
    const GridFunction f = build_f_from_q(q_from_quotas(k));
    for (const auto& p : grid_points(Grid(20))) v.require(eval_quota_regions(k, p) == f(p), "n=20 example");
    for (int n = 0; n <= 8; ++n)
      for (const QuotaSequence& s : enumerate_quota_sequences(Grid(n)))
        v.require(build_f_from_quotas(s) == build_f_from_q(q_from_quotas(s)),
                  "mismatch for k = " + format_terms(s.quotas));
    return v;
  });

  criterion(6, "rendered figures match the goldens", 5, [] {
    Verdict v;
    const std::string dir = SCFGRID_GOLDEN_DIR;
    const GridFunction f0 = build_f_from_q(ABList(20, {5, 3, 2, 6, 1, 4}));
    const GridFunction f1 = build_f_from_quotas(QuotaSequence{20, {8, 14, 7, 19, 3, 21}});
    v.require(render_ascii(f0) == read_file(dir + "/figure0.txt"), "figure0 differs");
    v.require(render_ascii(f1) == read_file(dir + "/figure0_bis.txt"), "figure0_bis differs");
    v.require(f0(0, 0) == Alternative::A && f0(12, 8) == Alternative::B, "figure0 spot cells");
    v.require(f1(0, 0) == Alternative::B && f1(8, 12) == Alternative::A, "figure0_bis spot cells");
    return v;
  });

  criterion(7, "conversion matrices invert and match the formula path", 30, [] {
    Verdict v;
    for (int r = 1; r <= 20; ++r) {
      const auto t = build_T(r);
      v.require((t.forward * t.inverse).isIdentity() && (t.inverse * t.forward).isIdentity(),
                "T T^-1 != I at r=" + std::to_string(r));
    }
    for (int n = 0; n <= 8; ++n) {
      for (const ABList& q : enumerate_ablists(Grid(n)))
        v.require(quotas_from_q_matrix(q) == quotas_from_q(q), "q -> k paths differ");
      for (const QuotaSequence& s : enumerate_quota_sequences(Grid(n)))
        v.require(q_from_quotas_matrix(s) == q_from_quotas(s), "k -> q paths differ");
    }
    return v;
  });

  criterion(8, "TFAE conditions agree on random tables, 5 <= n <= 12", 60, [] {
    Verdict v;
    std::mt19937_64 rng(20240601);
    std::bernoulli_distribution coin(0.5);
    for (int n = 5; n <= 12; ++n) {
      const Grid g(n);
      for (int trial = 0; trial < 10000; ++trial) {
        std::vector<Alternative> table(g.size());
        for (auto& x : table) x = coin(rng) ? Alternative::B : Alternative::A;
        v.require(tfae_check(GridFunction(g, std::move(table))).consistent(),
                  "inconsistent at n=" + std::to_string(n));
      }
    }
    return v;
  });

  return failures;
}
