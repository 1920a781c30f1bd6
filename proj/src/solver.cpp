#include "netmate/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "netmate/rules.hpp"

namespace netmate {

namespace {

int priority(const Action& a) {
  switch (a.kind) {
    case ActionKind::Steal: return 0;
    case ActionKind::TrashAccessed: return 1;
    case ActionKind::AccessCard: return 2;
    case ActionKind::KPLynnChoice: return a.take_tag ? 3 : 20;
    case ActionKind::BreakSubroutine: return 4;
    case ActionKind::BoostAurora: return 5;
    case ActionKind::UseGrapplingHook: return 6;
    case ActionKind::ContinueRun: return 7;
    case ActionKind::Rearrange: return 8;
    case ActionKind::ResolveChoice: return 9;
    case ActionKind::BeginTurn: return 10;
    case ActionKind::Score: return 11;
    case ActionKind::PlayCard: return 12;
    case ActionKind::Advance: return 13;
    case ActionKind::InstallCard: return 14;
    case ActionKind::InitiateRun: return 15;
    case ActionKind::GainCredit: return 16;
    case ActionKind::DrawCard: return 17;
    case ActionKind::RemoveTag: return 18;
    case ActionKind::DeclineAccess: return 19;
    case ActionKind::JackOut: return 21;
    case ActionKind::EndTurn: return 22;
  }
  return 30;
}

bool has_payment(ActionKind k) {
  return k == ActionKind::BoostAurora || k == ActionKind::BreakSubroutine || k == ActionKind::TrashAccessed;
}

// Spending Pheromones credits instead of pool credits never hurts the
// Runner, and boosting Aurora past what the encounter needs only costs.
void drop_dominated(const GameState& s, std::vector<Action>& moves) {
  if (s.phase != Phase::Run || !s.run || s.choice || s.rearrange) return;
  std::vector<Action> kept;
  kept.reserve(moves.size());
  const IcePiece* ice = nullptr;
  if (s.run->step == RunStep::Encounter)
    ice = &s.server(s.run->target).ice.at(static_cast<std::size_t>(s.run->ice_index));
  for (auto& m : moves) {
    if (m.kind == ActionKind::BoostAurora && ice &&
        (!ice_is_barrier(*ice) || s.run->encounter.aurora_strength >= ice_strength(*ice)))
      continue;
    if (has_payment(m.kind) && !kept.empty()) {
      const Action& prev = kept.back();
      // payment options arrive grouped, Pheromones-heavy first
      if (prev.kind == m.kind && prev.index == m.index) continue;
    }
    kept.push_back(std::move(m));
  }
  moves = std::move(kept);
}

int min_pass_cost(const GameState& s, const IcePiece& ice) {
  constexpr int kNever = std::numeric_limits<int>::max() / 4;
  if (!ice.rezzed) return 0;
  const int subs = subroutine_count(ice);
  int etr = 0;
  for (int i = 0; i < subs; ++i) etr += subroutine_effect(ice, i) == SubEffect::EndTheRun ? 1 : 0;
  if (etr == 0) return 0;
  if (!s.runner.rig.has(CardId::Aurora) || !ice_is_barrier(ice)) return kNever;
  const int deficit = std::max(0, ice_strength(ice) - card(CardId::Aurora).strength);
  return 2 * ((deficit + 2) / 3) + 2 * etr;
}

class Searcher {
 public:
  Searcher(Side hero, const SolverOptions& opts) : hero_(hero), opts_(opts) {}

  bool value(const GameState& s, int ends_left, int turn_depth) {
    ++nodes_;
    if (s.terminal()) return winner(s.status) == hero_;
    if (turn_depth > opts_.max_actions_per_turn)
      throw SearchLimitExceeded("more than " + std::to_string(opts_.max_actions_per_turn) + " actions in one turn");
    if (opts_.prune && hero_ == Side::Runner && ends_left == 0 && !runner_may_still_win_this_turn(s)) return false;

    std::string key;
    if (opts_.memo) {
      key = canonical_key(s).bytes;
      key.push_back(static_cast<char>(ends_left));
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    const bool hero_moves = side_to_act(s) == hero_;
    bool result = !hero_moves;
    for (const auto& m : solver_moves(s, opts_)) {
      const bool child = child_value(s, m, ends_left, turn_depth);
      if (hero_moves && child) {
        result = true;
        break;
      }
      if (!hero_moves && !child) {
        result = false;
        break;
      }
    }
    if (opts_.memo) memo_.emplace(std::move(key), result);
    return result;
  }

  // Hero's winning line with the first opponent reply at each opponent node.
  std::vector<Action> principal_line(GameState s, int ends_left) {
    std::vector<Action> line;
    int depth = 0;
    while (!s.terminal()) {
      const bool hero_moves = side_to_act(s) == hero_;
      const auto moves = solver_moves(s, opts_);
      const Action* pick = nullptr;
      for (const auto& m : moves) {
        if (!hero_moves || child_value(s, m, ends_left, depth)) {
          pick = &m;
          break;
        }
      }
      if (!pick) throw std::logic_error("principal line lost the win");
      if (pick->kind == ActionKind::EndTurn && side_to_act(s) == hero_) --ends_left;
      depth = pick->kind == ActionKind::BeginTurn ? 0 : depth + 1;
      line.push_back(*pick);
      apply_in_place(s, *pick);
    }
    return line;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Side hero_;
  SolverOptions opts_;
  std::unordered_map<std::string, bool> memo_;
  std::uint64_t nodes_ = 0;

  bool child_value(const GameState& s, const Action& m, int ends_left, int turn_depth) {
    int next_ends = ends_left;
    if (m.kind == ActionKind::EndTurn && s.turn_owner == hero_) {
      if (ends_left == 0) return false;  // out of turns
      --next_ends;
    }
    GameState child = s;
    apply_in_place(child, m);
    return value(child, next_ends, m.kind == ActionKind::BeginTurn ? 0 : turn_depth + 1);
  }
};

SolveResult run_solver(const GameState& start, Side hero, int ends_allowed, const SolverOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  GameState s = start;
  settle_terminal(s);
  Searcher search(hero, opts);
  SolveResult out;
  out.winnable = search.value(s, ends_allowed, 0);
  if (out.winnable) {
    out.witness = search.principal_line(s, ends_allowed);
    GameState end = s;
    for (const auto& a : out.witness) apply_in_place(end, a);
    out.claimed = end.status;
  } else {
    out.refutation_note = hero == Side::Runner
                              ? "every Runner line this turn ends without 7 points"
                              : "every Corp line is answered: the Runner wins or the Corp is short of 7 points "
                                "when its second turn ends";
  }
  out.nodes_explored = search.nodes();
  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace

std::vector<Action> solver_moves(const GameState& s, const SolverOptions& opts) {
  std::vector<Action> moves;
  if (s.rearrange && !opts.collapse_plans) {
    for (auto& p : enumerate_rearrangement_plans(s, {.collapse_unreachable = false}))
      moves.push_back(Action::rearrange(std::move(p)));
  } else {
    moves = legal_actions(s);
  }
  if (opts.prune) drop_dominated(s, moves);
  switch (opts.order) {
    case MoveOrder::Heuristic:
      std::stable_sort(moves.begin(), moves.end(),
                       [](const Action& a, const Action& b) { return priority(a) < priority(b); });
      break;
    case MoveOrder::Engine: break;
    case MoveOrder::Reversed: std::reverse(moves.begin(), moves.end()); break;
  }
  return moves;
}

bool runner_may_still_win_this_turn(const GameState& s) {
  if (s.terminal()) return winner(s.status) == Side::Runner;
  if (s.phase != Phase::Action || s.turn_owner != Side::Runner || s.choice || s.rearrange) return true;
  const auto& r = s.runner;
  auto holds_escher = [](const std::vector<CardId>& zone) {
    return std::find(zone.begin(), zone.end(), CardId::Escher) != zone.end();
  };
  if (holds_escher(r.grip) || holds_escher(r.stack)) return true;  // ice may still move
  if (r.clicks < 1) return false;
  const int needed = kPointsToWin - agenda_points(r.score_area);
  // every click but the one spent on the run could be a credit
  const long long pool = static_cast<long long>(r.credits) + r.clicks - 1;
  const bool hook = r.rig.has(CardId::GrapplingHook);
  int reachable = 0;
  for (const auto& srv : s.corp.servers) {
    long long cost = 0;
    if (!hook)
      for (const auto& ice : srv.ice) cost += min_pass_cost(s, ice);
    const long long budget = pool + (srv.id == ServerId::hq() ? r.rig.pheromones_credits : 0);
    if (cost > budget) continue;
    for (const auto& rc : srv.root)
      if (is_agenda(rc.id)) reachable += card(rc.id).agenda_points;
    const std::vector<CardId>* zone = nullptr;
    if (srv.id == ServerId::hq()) zone = &s.corp.hq;
    if (srv.id == ServerId::rnd()) zone = &s.corp.rnd;
    if (zone)
      for (CardId id : *zone)
        if (is_agenda(id)) reachable += card(id).agenda_points;
    if (srv.id == ServerId::archives())
      for (const auto& a : s.corp.archives)
        if (is_agenda(a.id)) reachable += card(a.id).agenda_points;
  }
  return reachable >= needed;
}

SolveResult solve_mate(const GameState& state, Side hero, int turns, const SolverOptions& options) {
  if (turns < 1) throw std::invalid_argument("turns must be positive");
  return run_solver(state, hero, turns - 1, options);
}

SolveResult solve_runner_mate1(const GameState& state, const SolverOptions& options) {
  if (!state.terminal() && state.turn_owner != Side::Runner)
    throw SolverPreconditionError("mate-in-1 expects a Runner turn");
  return run_solver(state, Side::Runner, 0, options);
}

SolveResult solve_corp_mate2(const GameState& state, const SolverOptions& options) {
  if (!state.terminal() && (state.turn_owner != Side::Corp || state.phase != Phase::TurnStart))
    throw SolverPreconditionError("mate-in-2 expects the start of a Corp turn");
  return run_solver(state, Side::Corp, 1, options);
}

std::vector<GameState> turn_outcomes(const GameState& state, const SolverOptions& options) {
  if (state.terminal()) return {state};
  const Side mover = state.turn_owner;
  std::vector<GameState> out;
  std::unordered_set<std::string> seen_out;
  std::unordered_set<std::string> visited;
  std::vector<GameState> stack{state};
  while (!stack.empty()) {
    GameState s = std::move(stack.back());
    stack.pop_back();
    const bool done = s.terminal() || (s.phase == Phase::TurnStart && s.turn_owner != mover);
    std::string key = canonical_key(s).bytes;
    if (done) {
      if (seen_out.insert(key).second) out.push_back(std::move(s));
      continue;
    }
    if (!visited.insert(std::move(key)).second) continue;
    for (const auto& m : solver_moves(s, options)) {
      GameState child = s;
      apply_in_place(child, m);
      stack.push_back(std::move(child));
    }
  }
  return out;
}

}  // namespace netmate
