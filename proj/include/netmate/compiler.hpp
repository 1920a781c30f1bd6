#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "netmate/action.hpp"
#include "netmate/instance.hpp"
#include "netmate/state.hpp"

namespace netmate {

// Bookkeeping for a compiled board state.
struct ScenarioManifest {
  int theorem = 1;  // 1: Runner mate-in-1, 2: Corp mate-in-2
  std::vector<std::int64_t> values;
  std::int64_t twice_target = 0;      // 2t, the sum of the values
  std::int64_t hq_break_cost = 0;     // c: Aurora cost of the walls first placed on HQ (mate-in-1 only)
  std::int64_t per_server_target = 0; // break cost each agenda server must carry
  int enigmas_per_stack = 0;          // |A| + 3 (mate-in-1)
  int hq_initial_walls = 0;           // (|A| - 2) / 2 (mate-in-1)
  std::vector<std::string> wall_servers;  // initial server of the piece encoding values[i]

  bool operator==(const ScenarioManifest&) const = default;
};

struct CompiledScenario {
  GameState state;
  ScenarioManifest manifest;
};

int wall_strength(std::int64_t a);   // Ice Wall strength encoding a
int subboost_count(std::int64_t a);  // Sub Boost counters on the Wall of Static encoding a

IcePiece ice_wall_for(std::int64_t a);
IcePiece wall_of_static_for(std::int64_t a);

// Throws InstanceError for odd cardinality or out-of-range derived values.
CompiledScenario compile_runner_mate1(const PartitionInstance& instance);
CompiledScenario compile_corp_mate2(const PartitionInstance& instance);

// The winning Runner line on a compiled mate-in-1 state, given the indices of
// the values whose walls end up on HQ. Fails if the split is not balanced.
std::vector<Action> runner_reference_line(const CompiledScenario& scenario, const std::vector<int>& hq_half);

// The Corp's two-turn line on a compiled mate-in-2 state with the given
// half of the walls on the Mandatory Seed Replacement remote. The Runner's
// turn in between is spent clicking for credits.
std::vector<Action> corp_reference_line(const CompiledScenario& scenario, const std::vector<int>& remote1_half);

// Plan that lays the ice out server by server as given; pieces are matched
// to the current ones by equality.
RearrangementPlan plan_for_layout(const GameState& state, const std::vector<std::vector<IcePiece>>& layout);

}  // namespace netmate
