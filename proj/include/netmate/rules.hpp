#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netmate/action.hpp"
#include "netmate/state.hpp"

namespace netmate {

enum class RuleViolation {
  TerminalState,
  IllegalAction,
  WrongPhase,
  InvalidPlan,
  Unaffordable,
};

class RulesError : public std::runtime_error {
 public:
  RulesError(RuleViolation code, const std::string& what) : std::runtime_error(what), code_(code) {}
  RuleViolation code() const { return code_; }

 private:
  RuleViolation code_;
};

enum class EventKind {
  TurnBegan,
  TurnEnded,
  ClickSpent,
  CreditsGained,
  CreditsSpent,       // from a credit pool
  PheromonesSpent,    // recurring credits on Pheromones
  CardDrawn,
  CardPlayed,
  CardInstalled,
  CardTrashed,
  Advanced,
  AgendaScored,
  AgendaStolen,
  RunStarted,
  IceEncountered,
  AuroraBoosted,
  SubroutineBroken,
  SubroutineFired,
  IcePassed,
  RunSuccessful,
  RunEnded,
  TagTaken,
  TagRemoved,
  MeatDamage,
  VirusCounterPlaced,
  IceRearranged,
  GameOver,
};

std::string_view to_string(EventKind kind);

struct Event {
  EventKind kind;
  Side side = Side::Runner;
  int amount = 0;
  std::string detail;

  bool operator==(const Event&) const = default;
};

std::string describe(const Event& event);

struct TransitionOutcome {
  GameState next;
  std::vector<Event> events;
};

// Legal moves for the side to act, deduplicated and in a fixed order.
// Throws RulesError(TerminalState) on terminal states.
std::vector<Action> legal_actions(const GameState& state);

// Validated transition. Throws RulesError(IllegalAction) for moves not in
// legal_actions (rearrangement plans are validated structurally instead).
TransitionOutcome apply(const GameState& state, const Action& action);

// Unvalidated transition used by search on moves produced by legal_actions.
void apply_in_place(GameState& state, const Action& action, std::vector<Event>* events = nullptr);

// Credits Aurora needs to break every subroutine on a rezzed piece of ice,
// or nullopt when Aurora cannot break it at all.
std::optional<int> aurora_cost_to_break(const IcePiece& ice);

// Payment splits for a cost, pheromones-heavy first. Pheromones credits are
// only offered during runs on HQ.
std::vector<Payment> payment_options(const GameState& state, int amount);

// Encounter-step actions (BoostAurora, BreakSubroutine, UseGrapplingHook,
// ContinueRun) applied with validation.
TransitionOutcome resolve_encounter_step(const GameState& state, const Action& action);

// Fires one subroutine of the ice currently encountered. Corp choices it
// creates are expanded into one branch per option.
std::vector<TransitionOutcome> fire_subroutine(const GameState& state, int sub_index);

// After an encounter resolved with the run alive: pass the ice and move to
// the next approach point (K. P. Lynn triggers after the last piece).
TransitionOutcome pass_ice_and_approach(const GameState& state);

// Breach of the run's target server, one branch per Corp choice of the
// accessed HQ card.
std::vector<TransitionOutcome> breach_server(const GameState& state);

TransitionOutcome rearrange_ice(const GameState& state, const RearrangementPlan& plan, RearrangeSource source);

TransitionOutcome turn_start(const GameState& state);

// Marks the run successful and applies "successful run" triggers.
TransitionOutcome successful_run_bookkeeping(const GameState& state);

std::optional<std::string> validate_plan(const GameState& state, const RearrangementPlan& plan);
RearrangementPlan identity_plan(const GameState& state);

// Marks a state terminal when a score area already holds enough points.
void settle_terminal(GameState& state);

}  // namespace netmate
