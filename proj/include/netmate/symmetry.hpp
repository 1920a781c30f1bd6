#pragma once

#include <string>
#include <vector>

#include "netmate/action.hpp"
#include "netmate/state.hpp"

namespace netmate {

// Byte encoding of a state with interchangeable parts normalized: unordered
// zones are sorted, and when no rearrangement can happen any more, the ice
// behind the first piece the Runner can never get past is dropped.
struct CanonicalKey {
  std::string bytes;

  auto operator<=>(const CanonicalKey&) const = default;
};

CanonicalKey canonical_key(const GameState& state);

// True when the Runner can never pass this piece for the rest of the game:
// it ends the run, no installed breaker can break it, no Grappling Hook is
// installed, and no rearrangement effect remains available.
bool ice_is_impassable(const GameState& state, const IcePiece& ice);

struct PlanEnumeration {
  // false lists every distinct arrangement of the ice multiset instead of
  // one plan per canonical class
  bool collapse_unreachable = true;
};

// One representative plan per class of plans that lead to equal canonical
// keys. Requires a pending rearrangement.
std::vector<RearrangementPlan> enumerate_rearrangement_plans(const GameState& state, PlanEnumeration opts = {});

// Applies a plan to the ice only, with no validation or side effects.
void place_ice(GameState& state, const RearrangementPlan& plan);

}  // namespace netmate
