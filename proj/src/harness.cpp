#include <iomanip>
#include <random>
#include <sstream>

#include "netmate/compiler.hpp"
#include "netmate/harness.hpp"
#include "netmate/partition.hpp"

namespace netmate {

LedgerRow ledger_snapshot(const GameState& s) {
  LedgerRow row;
  row.runner_clicks = s.runner.clicks;
  row.runner_credits = s.runner.credits;
  row.pheromones_credits = s.runner.rig.pheromones_credits;
  row.corp_clicks = s.corp.clicks;
  row.corp_credits = s.corp.credits;
  row.tags = s.runner.tags;
  row.runner_points = agenda_points(s.runner.score_area);
  row.corp_points = agenda_points(s.corp.score_area);
  return row;
}

std::string ReplayReport::final_status() const {
  return final_state.terminal() ? std::string(to_string(final_state.status)) : "in progress";
}

std::vector<Event> ReplayReport::all_events() const {
  std::vector<Event> out;
  for (const auto& row : rows) out.insert(out.end(), row.events.begin(), row.events.end());
  return out;
}

ReplayReport replay(const GameState& start, const std::vector<Action>& actions) {
  ReplayReport report;
  report.final_state = start;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    try {
      auto out = apply(report.final_state, actions[i]);
      report.final_state = std::move(out.next);
      LedgerRow row = ledger_snapshot(report.final_state);
      row.step = static_cast<int>(i);
      row.action = describe(actions[i]);
      row.events = std::move(out.events);
      report.rows.push_back(std::move(row));
    } catch (const RulesError& e) {
      report.failed_step = static_cast<int>(i);
      report.error = e.what();
      break;
    }
  }
  return report;
}

std::string format_ledger(const ReplayReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "step" << std::setw(44) << "action"
     << " clicks pool pher tags | corp clk cr | pts R-C\n";
  for (const auto& r : report.rows) {
    os << std::left << std::setw(5) << r.step << std::setw(44) << r.action << std::right << std::setw(7)
       << r.runner_clicks << std::setw(5) << r.runner_credits << std::setw(5) << r.pheromones_credits
       << std::setw(5) << r.tags << " | " << std::setw(8) << r.corp_clicks << std::setw(3) << r.corp_credits
       << " | " << std::setw(3) << r.runner_points << "-" << r.corp_points << "\n";
  }
  if (report.failed_step)
    os << "error at step " << *report.failed_step << ": " << report.error << "\n";
  os << "final status: " << report.final_status() << "\n";
  return os.str();
}

namespace {

void multisets(int n, std::int64_t lo, std::int64_t max_value, std::vector<std::int64_t>& cur,
               std::vector<std::vector<std::int64_t>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = lo; v <= max_value; ++v) {
    cur.push_back(v);
    multisets(n, v, max_value, cur, out);
    cur.pop_back();
  }
}

bool witness_replays(const GameState& start, const SolveResult& r, Side hero) {
  const auto rep = replay(start, r.witness);
  return !rep.failed_step && rep.final_state.terminal() && rep.final_state.status == r.claimed &&
         winner(r.claimed) == hero;
}

}  // namespace

std::int64_t campaign_size(int max_n, int max_value) {
  std::int64_t total = 0;
  for (int n = 2; n <= max_n; n += 2) {
    // C(max_value + n - 1, n), capped once it passes the guard
    long double c = 1;
    for (int i = 1; i <= n; ++i) c = c * (max_value + n - i) / i;
    if (c > kMaxCampaignInstances) return kMaxCampaignInstances + 1;
    total += static_cast<std::int64_t>(c + 0.5L);
    if (total > kMaxCampaignInstances) return kMaxCampaignInstances + 1;
  }
  return total;
}

std::vector<std::vector<std::int64_t>> campaign_instances(int max_n, int max_value) {
  if (campaign_size(max_n, max_value) > kMaxCampaignInstances)
    throw CampaignRefused("campaign exceeds " + std::to_string(kMaxCampaignInstances) + " instances");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  for (int n = 2; n <= max_n; n += 2) multisets(n, 1, max_value, cur, out);
  return out;
}

int CampaignReport::agreements() const {
  int k = 0;
  for (const auto& r : rows) k += r.agrees() ? 1 : 0;
  return k;
}

CampaignReport run_campaign(const CampaignOptions& options, const std::function<void(const CampaignRow&)>& on_row) {
  if (options.mate != 1 && options.mate != 2) throw std::invalid_argument("mate must be 1 or 2");
  if (options.max_n < 2 || options.max_value < 1) throw std::invalid_argument("need max_n >= 2 and max_value >= 1");
  CampaignReport report;
  for (auto& values : campaign_instances(options.max_n, options.max_value)) {
    const PartitionInstance instance(values);
    CampaignRow row;
    row.values = std::move(values);
    row.oracle = balanced_partition(instance).exists;
    row.table = balanced_partition_by_table(instance);
    const bool runner = options.mate == 1;
    const auto scenario = runner ? compile_runner_mate1(instance) : compile_corp_mate2(instance);
    const auto result = runner ? solve_runner_mate1(scenario.state, options.solver)
                               : solve_corp_mate2(scenario.state, options.solver);
    row.solver = result.winnable;
    if (result.winnable) row.witness_ok = witness_replays(scenario.state, result, runner ? Side::Runner : Side::Corp);
    row.nodes = result.nodes_explored;
    row.seconds = result.elapsed_seconds;
    if (on_row) on_row(row);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_campaign_row(const CampaignRow& row) {
  std::ostringstream os;
  std::string values = "{";
  for (std::size_t i = 0; i < row.values.size(); ++i) values += (i ? "," : "") + std::to_string(row.values[i]);
  values += "}";
  os << std::left << std::setw(14) << values << " oracle " << (row.oracle ? "yes" : "no ") << "  solver "
     << (row.solver ? "yes" : "no ") << "  " << (row.agrees() ? "agree" : "DISAGREE") << "  nodes " << row.nodes;
  if (!row.witness_ok) os << "  (witness failed replay)";
  return os.str();
}

PlayoutResult random_playout(const GameState& start, std::uint64_t seed, int max_actions) {
  std::mt19937_64 rng(seed);
  PlayoutResult out;
  out.final_state = start;
  auto& s = out.final_state;
  const auto cards = all_cards(start);
  for (; out.actions < max_actions && !s.terminal(); ++out.actions) {
    const auto moves = legal_actions(s);
    if (moves.empty()) {
      out.problem = "no legal move in a live state";
      return out;
    }
    const auto& m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    const bool hq_run = s.run && s.run->target == ServerId::hq();
    auto step = apply(s, m);
    for (const auto& e : step.events)
      if (e.kind == EventKind::PheromonesSpent && !hq_run) out.problem = "Pheromones credits spent outside HQ";
    s = std::move(step.next);
    if (!out.problem) out.problem = check_invariants(s);
    if (!out.problem && all_cards(s) != cards) out.problem = "card multiset changed";
    if (out.problem) {
      *out.problem += " after " + describe(m);
      return out;
    }
  }
  return out;
}

}  // namespace netmate
