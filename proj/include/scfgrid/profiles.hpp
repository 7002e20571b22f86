#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scfgrid/grid.hpp"

namespace scfgrid {

enum class Ballot : std::uint8_t { A, B, Indifferent };

using Profile = std::vector<Ballot>;

// Text form: one character per voter over "ab-", '-' meaning indifferent.
Profile parse_profile(std::string_view text);
std::string format_profile(std::span<const Ballot> p);

GridPoint tally(std::span<const Ballot> p);

// The first l voters indifferent, then k for a, then m for b.
Profile canonical_profile(GridPoint pt, const Grid& g);

Alternative eval_scf(const GridFunction& f, std::span<const Ballot> p);

// An arbitrary (not necessarily anonymous) rule on profiles of length n.
struct ScfOracle {
  int n = 0;
  std::function<Alternative(std::span<const Ballot>)> choose;

  static ScfOracle from_function(GridFunction f);
};

enum class SweepMode : std::uint8_t {
  Auto,        // exhaustive up to the cap, sampled above it
  Exhaustive,  // ResourceError above the cap
  Sampled,
};

struct SweepOptions {
  SweepMode mode = SweepMode::Auto;
  int exhaustive_max_n = 6;
  std::size_t samples = 20000;
  std::uint64_t seed = 0x5eed;
};

bool is_anonymous(const ScfOracle& o, const SweepOptions& opts = {});

struct Manipulation {
  Profile profile;
  int voter = 0;
  Ballot deviation = Ballot::Indifferent;
};

// A voter with a strict preference who obtains it by misreporting while the
// truthful report does not. Indifferent voters never gain.
std::optional<Manipulation> find_manipulation(const ScfOracle& o, const SweepOptions& opts = {});

// Same question asked on G directly through the six unilateral tally moves.
// True iff no profitable move exists.
bool grid_manipulation_check(const GridFunction& f);

// Calls visit(profile) on all 3^n profiles in base-3 counting order.
void for_each_profile(int n, const std::function<void(const Profile&)>& visit);

}  // namespace scfgrid
