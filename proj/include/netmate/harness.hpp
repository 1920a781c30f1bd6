#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netmate/action.hpp"
#include "netmate/rules.hpp"
#include "netmate/solver.hpp"
#include "netmate/state.hpp"

namespace netmate {

// ASCII board: one column per server, ice outermost first.
std::string render(const GameState& state);

struct LedgerRow {
  int step = 0;  // index of the action just applied
  std::string action;
  int runner_clicks = 0;
  int runner_credits = 0;
  int pheromones_credits = 0;
  int corp_clicks = 0;
  int corp_credits = 0;
  int tags = 0;
  int runner_points = 0;
  int corp_points = 0;
  std::vector<Event> events;
};

struct ReplayReport {
  std::vector<LedgerRow> rows;
  GameState final_state;
  std::optional<int> failed_step;  // first action that was not legal
  std::string error;

  std::string final_status() const;  // "in progress" while non-terminal
  std::vector<Event> all_events() const;
};

LedgerRow ledger_snapshot(const GameState& state);

// Applies the actions one by one with full validation, stopping at the
// first illegal one.
ReplayReport replay(const GameState& start, const std::vector<Action>& actions);

std::string format_ledger(const ReplayReport& report);

class CampaignRefused : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::int64_t kMaxCampaignInstances = 100'000;

struct CampaignOptions {
  int max_n = 2;
  int max_value = 3;
  int mate = 1;
  SolverOptions solver;
};

struct CampaignRow {
  std::vector<std::int64_t> values;
  bool oracle = false;
  bool table = false;
  bool solver = false;
  bool witness_ok = true;  // witness replays to the claimed win
  std::uint64_t nodes = 0;
  double seconds = 0.0;

  bool agrees() const { return oracle == table && oracle == solver && witness_ok; }
};

struct CampaignReport {
  std::vector<CampaignRow> rows;
  int agreements() const;
  bool all_agree() const { return agreements() == static_cast<int>(rows.size()); }
};

// Multisets of even size up to max_n over 1..max_value, in lexicographic
// order by size then values.
std::vector<std::vector<std::int64_t>> campaign_instances(int max_n, int max_value);
std::int64_t campaign_size(int max_n, int max_value);

// Throws CampaignRefused when the campaign would exceed kMaxCampaignInstances.
CampaignReport run_campaign(const CampaignOptions& options,
                            const std::function<void(const CampaignRow&)>& on_row = {});

std::string format_campaign_row(const CampaignRow& row);

// Random legal playout of at most max_actions moves with invariants,
// card conservation and Pheromones fencing checked after every step.
// Returns the first problem found.
struct PlayoutResult {
  int actions = 0;
  GameState final_state;
  std::optional<std::string> problem;
};

PlayoutResult random_playout(const GameState& start, std::uint64_t seed, int max_actions = 40);

}  // namespace netmate
