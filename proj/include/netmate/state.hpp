#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netmate/cards.hpp"

namespace netmate {

inline constexpr int kPointsToWin = 7;
inline constexpr int kCorpClicksPerTurn = 3;
inline constexpr int kRunnerClicksPerTurn = 4;
inline constexpr int kMaxHandSize = 5;

// HQ, R&D and Archives are fixed; remotes are numbered from 1.
struct ServerId {
  int value = 0;

  static constexpr ServerId hq() { return {0}; }
  static constexpr ServerId rnd() { return {1}; }
  static constexpr ServerId archives() { return {2}; }
  static constexpr ServerId remote(int k) { return {2 + k}; }

  constexpr bool is_remote() const { return value > 2; }
  constexpr int remote_number() const { return value - 2; }
  auto operator<=>(const ServerId&) const = default;
};

std::string to_string(ServerId id);
std::optional<ServerId> server_from_string(std::string_view text);

struct IcePiece {
  CardId id = CardId::IceWall;
  bool rezzed = true;
  int advancement = 0;  // only Ice Wall may carry tokens
  int sub_boosts = 0;   // hosted Sub Boost conditions

  auto operator<=>(const IcePiece&) const = default;
};

int ice_strength(const IcePiece& ice);
int subroutine_count(const IcePiece& ice);
SubEffect subroutine_effect(const IcePiece& ice, int index);
bool ice_is_barrier(const IcePiece& ice);

struct RootCard {
  CardId id = CardId::Strongbox;
  bool rezzed = false;
  int advancement = 0;

  auto operator<=>(const RootCard&) const = default;
};

struct ArchivedCard {
  CardId id = CardId::HedgeFund;
  bool faceup = true;

  auto operator<=>(const ArchivedCard&) const = default;
};

struct Server {
  ServerId id;
  std::vector<IcePiece> ice;  // index 0 is outermost
  std::vector<RootCard> root;

  bool operator==(const Server&) const = default;
};

struct CorpState {
  CardId identity = CardId::WeylandBBW;
  int credits = 0;
  int clicks = 0;
  std::vector<CardId> hq;   // unordered
  std::vector<CardId> rnd;  // index 0 is the top
  std::vector<ArchivedCard> archives;
  std::vector<Server> servers;  // HQ, R&D, Archives, then remotes in order
  std::vector<CardId> score_area;

  bool operator==(const CorpState&) const = default;
};

struct RunnerRig {
  std::vector<CardId> programs;
  int pheromones_counters = 0;
  int pheromones_credits = 0;  // unspent recurring credits

  bool has(CardId id) const;
  bool operator==(const RunnerRig&) const = default;
};

struct RunnerState {
  CardId identity = CardId::Exile;
  int credits = 0;
  int clicks = 0;
  std::vector<CardId> grip;
  std::vector<CardId> stack;  // index 0 is the top
  std::vector<CardId> heap;
  RunnerRig rig;
  int tags = 0;
  int link = 0;
  int memory = 4;  // carried, never binding
  std::vector<CardId> score_area;

  bool operator==(const RunnerState&) const = default;
};

enum class Phase : std::uint8_t { TurnStart, Action, Run, Terminal };

enum class TerminalStatus : std::uint8_t { None, RunnerWin, CorpWin, RunnerFlatline, CorpDecksOut };

std::string_view to_string(TerminalStatus s);
std::optional<Side> winner(TerminalStatus s);

enum class RunStep : std::uint8_t {
  Encounter,       // Runner may boost, break, hook, or let subroutines fire
  Firing,          // subroutines are resolving; waiting on a Corp choice
  Approach,        // Runner may continue or jack out
  KPLynn,          // take a tag or end the run
  Breach,          // Runner picks the next card to access
  AccessDecision,  // Runner decides about the accessed card
  Rearrange,       // Escher replaced access with a rearrangement
};

enum class AccessSource : std::uint8_t { HqHand, RndTop, Archives, Root };

struct PendingAccess {
  CardId id = CardId::HedgeFund;
  AccessSource source = AccessSource::Root;

  auto operator<=>(const PendingAccess&) const = default;
};

struct EncounterState {
  std::vector<bool> broken;  // entry i set when subroutine i is broken
  int aurora_strength = 1;
  int next_sub = 0;  // firing cursor

  bool is_broken(int i) const { return i < static_cast<int>(broken.size()) && broken[static_cast<std::size_t>(i)]; }
  void mark_broken(int i) {
    if (i >= static_cast<int>(broken.size())) broken.resize(static_cast<std::size_t>(i) + 1, false);
    broken[static_cast<std::size_t>(i)] = true;
  }

  bool operator==(const EncounterState&) const = default;
};

struct RunContext {
  ServerId target;
  int ice_index = 0;  // counts from the outermost piece
  RunStep step = RunStep::Encounter;
  EncounterState encounter;
  bool via_escher = false;
  bool successful = false;
  int strongbox_clicks = 0;  // extra clicks per steal on this breach
  std::vector<PendingAccess> pending;
  std::optional<PendingAccess> current;

  bool operator==(const RunContext&) const = default;
};

// A decision the Corp makes on behalf of a random or Corp-chosen effect.
enum class ChoiceKind : std::uint8_t { TrashProgram, HqAccess, MeatDamage };

struct PendingChoice {
  ChoiceKind kind = ChoiceKind::TrashProgram;
  std::vector<CardId> options;  // distinct, sorted
  int remaining = 1;            // for damage, cards still to discard

  bool operator==(const PendingChoice&) const = default;
};

enum class RearrangeSource : std::uint8_t { Escher, MandatorySeedReplacement };

struct GameState {
  CorpState corp;
  RunnerState runner;
  Side turn_owner = Side::Runner;
  Phase phase = Phase::Action;
  TerminalStatus status = TerminalStatus::None;
  int turn_number = 1;
  std::optional<RunContext> run;
  std::optional<PendingChoice> choice;
  std::optional<RearrangeSource> rearrange;

  Server& server(ServerId id);
  const Server& server(ServerId id) const;
  const Server* find_server(ServerId id) const;
  bool terminal() const { return phase == Phase::Terminal; }

  bool operator==(const GameState&) const = default;
};

int agenda_points(const std::vector<CardId>& score_area);
int medical_breakthrough_requirement(const GameState& state);
int advancement_requirement(const GameState& state, CardId agenda);

// Side that must act next; nullopt for terminal states.
std::optional<Side> side_to_act(const GameState& state);

// Multiset of every card instance in every zone, sorted. Used for
// conservation checks.
std::vector<CardId> all_cards(const GameState& state);

// Structural invariants; returns a description of the first violation.
std::optional<std::string> check_invariants(const GameState& state);

}  // namespace netmate
