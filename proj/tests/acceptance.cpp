// One PASS/FAIL line per acceptance criterion. Ground truth comes from the
// oracles defined in this file, not from the library under test.
#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "netmate/compiler.hpp"
#include "netmate/harness.hpp"
#include "netmate/partition.hpp"
#include "netmate/rules.hpp"
#include "netmate/solver.hpp"

using namespace netmate;
using Values = std::vector<std::int64_t>;

namespace {

// --- oracles -------------------------------------------------------------

bool oracle_balanced(const Values& a) {
  const int n = static_cast<int>(a.size());
  if (n % 2 != 0) return false;
  const std::int64_t total = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != n / 2) continue;
    std::int64_t sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sum += a[static_cast<std::size_t>(i)];
    if (2 * sum == total) return true;
  }
  return false;
}

// Aurora from base strength 1: buy +3 until strong enough, then 2 per sub.
int greedy_break_cost(int strength, int subroutines) {
  int cost = 0;
  for (int s = 1; s < strength; s += 3) cost += 2;
  return cost + 2 * subroutines;
}

int wall_cost(std::int64_t a) { return greedy_break_cost(static_cast<int>(1 + 3 * (a - 1)), 1); }
int static_cost(std::int64_t a) { return greedy_break_cost(3, static_cast<int>(a)); }

std::vector<Values> multisets(int n, int max_value) {
  std::vector<Values> out;
  Values cur;
  std::function<void(std::int64_t)> rec = [&](std::int64_t lo) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = lo; v <= max_value; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::string show(const Values& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- reporting -----------------------------------------------------------

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct Witnessed {
  GameState start;
  SolveResult result;
};

std::vector<Witnessed> witnesses;

// --- helpers on engine states ---------------------------------------------

GameState step(const GameState& s, const Action& a) { return apply(s, a).next; }

// Boosts and breaks the encountered barrier with pool credits only.
GameState break_with_pool(GameState s) {
  const IcePiece ice = s.server(s.run->target).ice.at(static_cast<std::size_t>(s.run->ice_index));
  while (s.run->encounter.aurora_strength < ice_strength(ice)) s = step(s, Action::boost({2, 0}));
  for (;;) {
    const auto legal = legal_actions(s);
    const auto it = std::find_if(legal.begin(), legal.end(), [](const Action& a) {
      return a.kind == ActionKind::BreakSubroutine && a.payment.pheromones == 0;
    });
    if (it == legal.end()) break;
    s = step(s, *it);
  }
  return step(s, Action::continue_run());
}

int ice_on(const Server& srv, bool enigma) {
  return static_cast<int>(std::count_if(srv.ice.begin(), srv.ice.end(),
                                        [&](const IcePiece& i) { return (i.id == CardId::Enigma) == enigma; }));
}

// --- criteria ------------------------------------------------------------

void equivalence(int id, int theorem, int max_value, double budget_seconds) {
  const auto t0 = std::chrono::steady_clock::now();
  int total = 0, agree = 0;
  std::string first_bad;
  for (int n : {2, 4})
    for (const auto& v : multisets(n, max_value)) {
      ++total;
      const PartitionInstance inst(v);
      const auto sc = theorem == 1 ? compile_runner_mate1(inst) : compile_corp_mate2(inst);
      const auto r = theorem == 1 ? solve_runner_mate1(sc.state) : solve_corp_mate2(sc.state);
      if (r.winnable == oracle_balanced(v))
        ++agree;
      else if (first_bad.empty())
        first_bad = show(v);
      if (r.winnable) witnesses.push_back({sc.state, r});
    }
  const double secs = since(t0);
  std::ostringstream d;
  d << agree << "/" << total << " instances agree with the partition oracle in " << secs << " s (limit "
    << budget_seconds << " s)";
  if (!first_bad.empty()) d << ", first disagreement " << first_bad;
  report(id, theorem == 1 ? "runner mate-in-1 iff balanced partition" : "corp mate-in-2 iff balanced partition",
         agree == total && secs < budget_seconds, d.str());
}

void ledger() {
  const Values v{1, 2, 3, 2};
  const auto sc = compile_runner_mate1(PartitionInstance(v));
  const auto rep = replay(sc.state, runner_reference_line(sc, {0, 2}));
  const std::int64_t twice_t = 8;
  const LedgerRow* row = nullptr;
  for (const auto& r : rep.rows) {
    if (std::any_of(r.events.begin(), r.events.end(), [](const Event& e) { return e.kind == EventKind::RunEnded; })) {
      row = &r;
      break;
    }
  }
  std::ostringstream d;
  bool pass = row && !rep.failed_step && rep.final_state.status == TerminalStatus::RunnerWin;
  if (row) {
    d << "after step " << row->step << " (" << row->action << "): clicks=" << row->runner_clicks
      << " pool=" << row->runner_credits << " pheromones=" << row->pheromones_credits << ", expected 3/" << twice_t
      << "/" << 2 * twice_t + 2;
    pass = pass && row->runner_clicks == 3 && row->runner_credits == twice_t &&
           row->pheromones_credits == 2 * twice_t + 2;
  } else {
    d << "the Escher run never ended";
  }
  d << "; line ends " << rep.final_status();
  report(3, "resource ledger after the Escher run on {1,2,3,2}", pass, d.str());
}

void costs() {
  GameState base = compile_corp_mate2(PartitionInstance({1, 1})).state;
  base.turn_owner = Side::Runner;
  base.phase = Phase::Action;
  base.runner.clicks = 4;
  base.runner.credits = 1000;
  base.server(ServerId::remote(2)).ice.clear();
  int bad = 0;
  std::string first;
  for (std::int64_t a = 1; a <= 50; ++a) {
    for (bool wall : {true, false}) {
      const IcePiece ice = wall ? ice_wall_for(a) : wall_of_static_for(a);
      const int expected = wall ? 2 * static_cast<int>(a) : 2 * static_cast<int>(a) + 2;
      const int simulated = wall ? wall_cost(a) : static_cost(a);
      GameState s = base;
      s.server(ServerId::remote(1)).ice = {ice};
      s = step(s, Action::run(ServerId::remote(1)));
      const int before = s.runner.credits;
      s = break_with_pool(s);
      const int engine = before - s.runner.credits;
      const auto formula = aurora_cost_to_break(ice);
      if (!(formula == expected && simulated == expected && engine == expected && s.run)) {
        ++bad;
        if (first.empty())
          first = std::string(wall ? "Ice Wall" : "Wall of Static") + " a=" + std::to_string(a) + ": formula " +
                  (formula ? std::to_string(*formula) : "none") + ", greedy " + std::to_string(simulated) +
                  ", engine " + std::to_string(engine) + ", expected " + std::to_string(expected);
      }
    }
  }
  report(4, "Aurora break costs 2a and 2a+2 for a=1..50", bad == 0,
         std::to_string(100 - bad) + "/100 encodings match the greedy and engine simulations" +
             (first.empty() ? "" : "; " + first));
}

void pigeonhole() {
  const Values v{1, 2, 3, 4, 5, 3};
  const auto sc = compile_runner_mate1(PartitionInstance(v));
  GameState s = step(step(sc.state, Action::play(CardId::Escher)), Action::hook(0));
  s = step(s, Action::continue_run());
  while (s.run && !s.rearrange) {
    if (s.run->step == RunStep::Approach) {
      s = step(s, Action::continue_run());
      continue;
    }
    // HQ walls are paid with Pheromones first
    const IcePiece& ice = s.server(s.run->target).ice.at(static_cast<std::size_t>(s.run->ice_index));
    const ActionKind want =
        s.run->encounter.aurora_strength < ice_strength(ice) ? ActionKind::BoostAurora : ActionKind::BreakSubroutine;
    const auto legal = legal_actions(s);
    const auto it =
        std::find_if(legal.begin(), legal.end(), [&](const Action& a) { return a.kind == want; });
    s = step(s, it == legal.end() ? Action::continue_run() : *it);
  }
  int non_enigma = 0;
  for (const auto& srv : s.corp.servers) non_enigma += ice_on(srv, false);
  const int rnd_ice = static_cast<int>(s.server(ServerId::rnd()).ice.size());
  const int n = static_cast<int>(v.size());

  std::vector<IceSlot> slots;
  for (const auto& srv : s.corp.servers)
    for (std::size_t i = 0; i < srv.ice.size(); ++i) slots.push_back({srv.id, static_cast<int>(i)});
  std::mt19937_64 rng(2024);
  int violations = 0, rejected = 0;
  std::string first_error;
  for (int trial = 0; trial < 1000; ++trial) {
    std::shuffle(slots.begin(), slots.end(), rng);
    try {
      const auto next = step(s, Action::rearrange(RearrangementPlan{slots}));
      if (ice_on(next.server(ServerId::rnd()), true) < 1) ++violations;
    } catch (const RulesError& e) {
      if (rejected++ == 0) first_error = e.what();
    }
  }
  std::ostringstream d;
  d << "non-Enigma ice " << non_enigma << " (expected " << n + 2 << "), R&D ice " << rnd_ice << " (expected "
    << n + 4 << "), " << violations << " of 1000 random plans left R&D without an Enigma, " << rejected
    << " rejected";
  if (!first_error.empty()) d << " (first: " << first_error << ")";
  if (!s.rearrange) d << ", the Escher run ended without a rearrangement";
  report(5, "pigeonhole on a |A|=6 board", s.rearrange && non_enigma == n + 2 && rnd_ice == n + 4 &&
                                               violations == 0 && rejected == 0,
         d.str());
}

void soundness() {
  int ok = 0, deterministic = 0;
  for (const auto& w : witnesses) {
    const auto a = replay(w.start, w.result.witness);
    const auto b = replay(w.start, w.result.witness);
    if (!a.failed_step && a.final_state.terminal() && a.final_state.status == w.result.claimed) ++ok;
    if (a.all_events() == b.all_events() && a.final_state == b.final_state) ++deterministic;
  }
  int memo_agree = 0, memo_total = 0;
  SolverOptions no_memo;
  no_memo.memo = false;
  for (int theorem : {1, 2})
    for (const auto& v : multisets(2, theorem == 1 ? 4 : 3)) {
      ++memo_total;
      const PartitionInstance inst(v);
      const auto s = theorem == 1 ? compile_runner_mate1(inst).state : compile_corp_mate2(inst).state;
      const auto with = theorem == 1 ? solve_runner_mate1(s) : solve_corp_mate2(s);
      const auto without = theorem == 1 ? solve_runner_mate1(s, no_memo) : solve_corp_mate2(s, no_memo);
      memo_agree += with.winnable == without.winnable ? 1 : 0;
    }
  const int n = static_cast<int>(witnesses.size());
  std::ostringstream d;
  d << ok << "/" << n << " witnesses replay to the claimed status, " << deterministic << "/" << n
    << " replay identically twice, memo on/off agree on " << memo_agree << "/" << memo_total << " n=2 instances";
  report(6, "witness soundness and determinism", n > 0 && ok == n && deterministic == n && memo_agree == memo_total,
         d.str());
}

// Runner answer: three credits, then a run on the cheapest remote holding a
// Medical Breakthrough. Returns the final state and the credits spent on ice.
std::pair<GameState, int> click_then_steal(GameState s, ServerId target) {
  s = step(s, Action::begin_turn());
  for (int i = 0; i < 3; ++i) s = step(s, Action::gain_credit());
  const int before = s.runner.credits;
  s = step(s, Action::run(target));
  while (s.run && !s.terminal()) {
    switch (s.run->step) {
      case RunStep::Encounter: s = break_with_pool(s); break;
      case RunStep::Approach: s = step(s, Action::continue_run()); break;
      case RunStep::Breach: s = step(s, Action::access(CardId::MedicalBreakthrough, AccessSource::Root)); break;
      case RunStep::AccessDecision: {
        const auto legal = legal_actions(s);
        const bool can_steal = std::find(legal.begin(), legal.end(), Action::steal()) != legal.end();
        s = step(s, can_steal ? Action::steal() : Action::decline());
        break;
      }
      default: return {s, before - s.runner.credits};
    }
  }
  return {s, before - s.runner.credits};
}

bool holds_breakthrough(const Server& srv) {
  return std::any_of(srv.root.begin(), srv.root.end(),
                     [](const RootCard& r) { return r.id == CardId::MedicalBreakthrough; });
}

int remote_cost(const Server& srv) {
  int cost = 0;
  for (const auto& ice : srv.ice) cost += greedy_break_cost(3, 1 + ice.sub_boosts);
  return cost;
}

void refutation() {
  const Values v{1, 3};
  const auto sc = compile_corp_mate2(PartitionInstance(v));
  const std::int64_t budget = sc.manifest.per_server_target - 1;  // 2t+|A|-1
  const bool solver_says = solve_corp_mate2(sc.state).winnable;
  const auto lines = turn_outcomes(sc.state);
  int refuted = 0, shaped = 0, scripted = 0;
  std::string first_bad;
  for (const auto& o : lines) {
    bool ok = false;
    if (o.terminal()) {
      ok = winner(o.status) != Side::Corp;
    } else {
      // some Runner turn leaves the Corp unable to win on its next turn
      bool answer = false;
      for (const auto& r : turn_outcomes(o)) {
        if (r.terminal() ? winner(r.status) != Side::Corp : !solve_mate(r, Side::Corp, 1).winnable) {
          answer = true;
          break;
        }
      }
      ok = answer && !solve_mate(o, Side::Corp, 1).winnable;

      const bool seeded = std::count(o.corp.score_area.begin(), o.corp.score_area.end(),
                                     CardId::MandatorySeedReplacement) == 1;
      const auto& r1 = o.server(ServerId::remote(1));
      const auto& r2 = o.server(ServerId::remote(2));
      if (seeded && holds_breakthrough(r1) && holds_breakthrough(r2)) {
        ++shaped;
        const auto& cheap = remote_cost(r1) <= remote_cost(r2) ? r1 : r2;
        const auto [end, spent] = click_then_steal(o, cheap.id);
        if (remote_cost(cheap) <= budget && spent <= budget && end.status == TerminalStatus::RunnerWin) ++scripted;
      }
    }
    if (ok)
      ++refuted;
    else if (first_bad.empty())
      first_bad = render(o);
  }
  const int n = static_cast<int>(lines.size());
  std::ostringstream d;
  d << "solver " << (solver_says ? "claims a win" : "refutes") << "; " << refuted << "/" << n
    << " Corp turn-1 outcomes answered by the Runner; three credits and a run on the cheaper remote steal on "
    << scripted << "/" << shaped << " outcomes with both Medical Breakthroughs installed after the seed is scored";
  if (!first_bad.empty()) d << "\nfirst unanswered outcome:\n" << first_bad;
  report(7, "corp refutation on {1,3}", !solver_says && n > 0 && refuted == n && shaped > 0 && scripted == shaped,
         d.str());
}

void oracle_self_check() {
  const auto t0 = std::chrono::steady_clock::now();
  long long instances = 0, disagreements = 0;
  Values cur;
  std::function<void(int, std::int64_t)> rec = [&](int n, std::int64_t lo) {
    if (static_cast<int>(cur.size()) == n) {
      const PartitionInstance inst(cur);
      ++instances;
      if (balanced_partition(inst).exists != balanced_partition_by_table(inst)) ++disagreements;
      return;
    }
    for (std::int64_t x = lo; x <= 20; ++x) {
      cur.push_back(x);
      rec(n, x);
      cur.pop_back();
    }
  };
  for (int n = 2; n <= 12; ++n) rec(n, 1);

  std::mt19937_64 rng(77);
  int trial_bad = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 2 * static_cast<int>(1 + rng() % 6);
    Values v(static_cast<std::size_t>(n));
    for (auto& x : v) x = 1 + static_cast<std::int64_t>(rng() % 20);
    const bool truth = oracle_balanced(v);
    Values perm = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    Values scaled = v;
    const auto k = static_cast<std::int64_t>(2 + rng() % 9);
    for (auto& x : scaled) x *= k;
    const auto answer = balanced_partition(PartitionInstance(v));
    bool ok = answer.exists == truth && balanced_partition_by_table(PartitionInstance(v)) == truth;
    ok = ok && balanced_partition(PartitionInstance(perm)).exists == truth &&
         balanced_partition_by_table(PartitionInstance(perm)) == truth;
    ok = ok && balanced_partition(PartitionInstance(scaled)).exists == truth &&
         balanced_partition_by_table(PartitionInstance(scaled)) == truth;
    if (answer.witness) {
      std::int64_t in = 0;
      for (int i : *answer.witness) in += v[static_cast<std::size_t>(i)];
      ok = ok && 2 * static_cast<int>(answer.witness->size()) == n &&
           2 * in == std::accumulate(v.begin(), v.end(), std::int64_t{0});
    }
    trial_bad += ok ? 0 : 1;
  }
  std::ostringstream d;
  d << disagreements << " disagreements over " << instances << " multisets (n<=12, values<=20), " << trial_bad
    << " failures in 500 permutation/scaling trials, " << since(t0) << " s";
  report(8, "partition oracle self-check", disagreements == 0 && trial_bad == 0, d.str());
}

}  // namespace

int main(int argc, char** argv) {
  // optional criterion numbers restrict the run, e.g. `netmate_acceptance 4 5`
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const auto want = [&](int c) { return only.empty() || only.count(c) > 0; };
  if (want(1) || want(6)) equivalence(1, 1, 4, 600);
  if (want(2) || want(6)) equivalence(2, 2, 3, 1200);
  if (want(3)) ledger();
  if (want(4)) costs();
  if (want(5)) pigeonhole();
  if (want(6)) soundness();
  if (want(7)) refutation();
  if (want(8)) oracle_self_check();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
