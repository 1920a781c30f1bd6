#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "netmate/action.hpp"
#include "netmate/state.hpp"
#include "netmate/symmetry.hpp"

namespace netmate {

enum class MoveOrder { Heuristic, Engine, Reversed };

struct SolverOptions {
  bool memo = true;
  // Futility bound for the Runner and removal of dominated Runner payments
  // and strength boosts.
  bool prune = true;
  bool collapse_plans = true;
  MoveOrder order = MoveOrder::Heuristic;
  int max_actions_per_turn = 64;
};

class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SolverPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SolveResult {
  bool winnable = false;
  std::vector<Action> witness;  // full line, opponent replies included
  TerminalStatus claimed = TerminalStatus::None;
  std::string refutation_note;
  std::uint64_t nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

// Can the Runner force a win before the current Runner turn ends?
SolveResult solve_runner_mate1(const GameState& state, const SolverOptions& options = {});

// Can the Corp, starting its turn, force a win by the end of its next turn?
SolveResult solve_corp_mate2(const GameState& state, const SolverOptions& options = {});

// Can the hero force a win before its turns-th own turn ends? The current
// turn counts when the hero owns it.
SolveResult solve_mate(const GameState& state, Side hero, int turns, const SolverOptions& options = {});

// Legal moves as the solver sees them: plan enumeration, pruning and
// ordering per the options.
std::vector<Action> solver_moves(const GameState& state, const SolverOptions& options);

// Runner optimistic reachability check used for pruning: false when no
// sequence of runs this turn could bring the Runner to 7 points.
bool runner_may_still_win_this_turn(const GameState& state);

// Distinct states (by canonical key) in which the current turn can end:
// the next turn start, or a terminal state reached during the turn.
std::vector<GameState> turn_outcomes(const GameState& state, const SolverOptions& options = {});

}  // namespace netmate
