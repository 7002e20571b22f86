#include "scfgrid/profiles.hpp"

#include <array>
#include <random>

#include "scfgrid/error.hpp"

namespace scfgrid {

Profile parse_profile(std::string_view text) {
  Profile p;
  p.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'a': p.push_back(Ballot::A); break;
      case 'b': p.push_back(Ballot::B); break;
      case '-': p.push_back(Ballot::Indifferent); break;
      default:
        throw DomainError(std::string("invalid ballot character '") + ch + "', expected one of \"ab-\"");
    }
  }
  return p;
}

std::string format_profile(std::span<const Ballot> p) {
  std::string s;
  s.reserve(p.size());
  for (auto b : p) s.push_back(b == Ballot::A ? 'a' : b == Ballot::B ? 'b' : '-');
  return s;
}

GridPoint tally(std::span<const Ballot> p) {
  GridPoint t;
  for (auto b : p) {
    if (b == Ballot::A) ++t.k;
    else if (b == Ballot::B) ++t.m;
  }
  return t;
}

Profile canonical_profile(GridPoint pt, const Grid& g) {
  g.require(pt);
  Profile p;
  p.reserve(static_cast<std::size_t>(g.n()));
  p.insert(p.end(), static_cast<std::size_t>(g.indifferent(pt)), Ballot::Indifferent);
  p.insert(p.end(), static_cast<std::size_t>(pt.k), Ballot::A);
  p.insert(p.end(), static_cast<std::size_t>(pt.m), Ballot::B);
  return p;
}

Alternative eval_scf(const GridFunction& f, std::span<const Ballot> p) {
  if (static_cast<int>(p.size()) != f.n()) {
    throw DomainError("profile has " + std::to_string(p.size()) + " voters, rule expects " +
                      std::to_string(f.n()));
  }
  return f.at_unchecked(tally(p));
}

ScfOracle ScfOracle::from_function(GridFunction f) {
  const int n = f.n();
  return {n, [f = std::move(f)](std::span<const Ballot> p) { return eval_scf(f, p); }};
}

namespace {

// Base-3 counter over ballots; stops when visit returns false.
void walk_profiles(int n, const std::function<bool(const Profile&)>& visit) {
  Profile p(static_cast<std::size_t>(n), Ballot::A);
  while (visit(p)) {
    std::size_t i = 0;
    for (; i < p.size(); ++i) {
      if (p[i] != Ballot::Indifferent) {
        p[i] = static_cast<Ballot>(static_cast<int>(p[i]) + 1);
        break;
      }
      p[i] = Ballot::A;
    }
    if (i == p.size()) return;
  }
}

}  // namespace

void for_each_profile(int n, const std::function<void(const Profile&)>& visit) {
  walk_profiles(n, [&](const Profile& p) {
    visit(p);
    return true;
  });
}

namespace {

// Visits either every profile or `samples` uniformly random ones. The visitor
// returns false to stop early.
void sweep(int n, const SweepOptions& opts, const std::function<bool(const Profile&)>& visit) {
  bool exhaustive = false;
  switch (opts.mode) {
    case SweepMode::Exhaustive:
      if (n > opts.exhaustive_max_n) {
        throw ResourceError("exhaustive profile sweep limited to n <= " +
                            std::to_string(opts.exhaustive_max_n) + ", got n = " + std::to_string(n));
      }
      exhaustive = true;
      break;
    case SweepMode::Auto: exhaustive = n <= opts.exhaustive_max_n; break;
    case SweepMode::Sampled: exhaustive = false; break;
  }

  if (exhaustive) {
    walk_profiles(n, visit);
    return;
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> ballot(0, 2);
  Profile p(static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < opts.samples; ++s) {
    for (auto& b : p) b = static_cast<Ballot>(ballot(rng));
    if (!visit(p)) return;
  }
}

// Abstaining is tried before switching sides.
constexpr std::array<Ballot, 3> kDeviations{Ballot::Indifferent, Ballot::A, Ballot::B};

}  // namespace

bool is_anonymous(const ScfOracle& o, const SweepOptions& opts) {
  bool ok = true;
  Profile swapped;
  sweep(o.n, opts, [&](const Profile& p) {
    const Alternative base = o.choose(p);
    swapped = p;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] == p[i + 1]) continue;
      std::swap(swapped[i], swapped[i + 1]);
      const bool same = o.choose(swapped) == base;
      std::swap(swapped[i], swapped[i + 1]);
      if (!same) {
        ok = false;
        return false;
      }
    }
    return true;
  });
  return ok;
}

std::optional<Manipulation> find_manipulation(const ScfOracle& o, const SweepOptions& opts) {
  std::optional<Manipulation> found;
  Profile q;
  sweep(o.n, opts, [&](const Profile& p) {
    const Alternative truthful = o.choose(p);
    q = p;
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (p[v] == Ballot::Indifferent) continue;
      const Alternative wanted = p[v] == Ballot::A ? Alternative::A : Alternative::B;
      if (truthful == wanted) continue;
      for (Ballot lie : kDeviations) {
        if (lie == p[v]) continue;
        q[v] = lie;
        const Alternative outcome = o.choose(q);
        q[v] = p[v];
        if (outcome == wanted) {
          found = Manipulation{p, static_cast<int>(v), lie};
          return false;
        }
      }
    }
    return true;
  });
  return found;
}

bool grid_manipulation_check(const GridFunction& f) {
  const Grid& g = f.grid();
  for (const auto& p : grid_points(g)) {
    const Alternative truthful = f.at_unchecked(p);
    // An a-voter exists and the outcome is b: try abstaining or switching to b.
    if (p.k > 0 && truthful == Alternative::B) {
      for (GridPoint to : {GridPoint{p.k - 1, p.m}, GridPoint{p.k - 1, p.m + 1}})
        if (f.at_unchecked(to) == Alternative::A) return false;
    }
    if (p.m > 0 && truthful == Alternative::A) {
      for (GridPoint to : {GridPoint{p.k, p.m - 1}, GridPoint{p.k + 1, p.m - 1}})
        if (f.at_unchecked(to) == Alternative::B) return false;
    }
  }
  return true;
}

}  // namespace scfgrid
