#include <algorithm>

#include "doctest.h"
#include "netmate/compiler.hpp"
#include "netmate/rules.hpp"

using namespace netmate;

namespace {

bool offers(const GameState& s, const Action& a) {
  const auto legal = legal_actions(s);
  return std::find(legal.begin(), legal.end(), a) != legal.end();
}

GameState step(const GameState& s, const Action& a) { return apply(s, a).next; }

GameState runner_mate1(std::vector<std::int64_t> values) {
  return compile_runner_mate1(PartitionInstance(std::move(values))).state;
}

// Corp mate-in-2 board handed to the Runner mid-turn.
GameState runner_facing_walls(std::vector<std::int64_t> values) {
  GameState s = compile_corp_mate2(PartitionInstance(std::move(values))).state;
  s.turn_owner = Side::Runner;
  s.phase = Phase::Action;
  s.runner.clicks = 4;
  s.runner.credits = 20;
  return s;
}

bool has_event(const std::vector<Event>& events, EventKind kind) {
  return std::any_of(events.begin(), events.end(), [&](const Event& e) { return e.kind == kind; });
}

}  // namespace

TEST_CASE("runner opening moves on the mate-in-1 board") {
  const auto s = runner_mate1({2, 2});
  const auto legal = legal_actions(s);
  CHECK(offers(s, Action::play(CardId::Escher)));
  CHECK(offers(s, Action::gain_credit()));
  for (auto id : {ServerId::hq(), ServerId::rnd(), ServerId::archives(), ServerId::remote(1), ServerId::remote(2)})
    CHECK(offers(s, Action::run(id)));
  CHECK_FALSE(offers(s, Action::draw_card()));
  CHECK(std::count_if(legal.begin(), legal.end(), [](const Action& a) { return a.kind == ActionKind::InitiateRun; }) ==
        5);
}

TEST_CASE("grappling hook offers every kept subroutine on Archer") {
  const auto s = step(runner_mate1({2, 2}), Action::play(CardId::Escher));
  for (int k = 0; k < 4; ++k) CHECK(offers(s, Action::hook(k)));
}

TEST_CASE("no clicks outside a run leaves only end turn") {
  auto s = runner_mate1({2, 2});
  s.runner.clicks = 0;
  CHECK(legal_actions(s) == std::vector<Action>{Action::end_turn()});
  CHECK_THROWS_AS(legal_actions(GameState{.phase = Phase::Terminal}), RulesError);
}

TEST_CASE("playing Escher pays 3 and starts an HQ run") {
  auto s = runner_mate1({2, 2});
  s.runner.credits = 7;
  const auto out = apply(s, Action::play(CardId::Escher));
  CHECK(out.next.runner.credits == 4);
  CHECK(out.next.runner.clicks == 3);
  REQUIRE(out.next.run.has_value());
  CHECK(out.next.run->target == ServerId::hq());
  CHECK(out.next.run->via_escher);
}

TEST_CASE("advancing Mandatory Seed Replacement") {
  auto s = step(compile_corp_mate2(PartitionInstance({1, 1})).state, Action::begin_turn());
  REQUIRE(s.corp.credits == 4);
  REQUIRE(s.corp.clicks == 3);
  s = step(s, Action::advance_root(ServerId::remote(1), 0));
  CHECK(s.corp.credits == 3);
  CHECK(s.corp.clicks == 2);
  CHECK(s.server(ServerId::remote(1)).root.at(0).advancement == 4);
}

TEST_CASE("gain credit") {
  const auto s = runner_mate1({1, 1});
  const auto n = step(s, Action::gain_credit());
  CHECK(n.runner.credits == s.runner.credits + 1);
  CHECK(n.runner.clicks == s.runner.clicks - 1);
}

TEST_CASE("illegal actions are rejected with a reason code") {
  const auto s = runner_mate1({1, 1});
  try {
    apply(s, Action::draw_card());
    FAIL("draw from an empty stack was accepted");
  } catch (const RulesError& e) {
    CHECK(e.code() == RuleViolation::IllegalAction);
  }
}

TEST_CASE("aurora break costs") {
  CHECK(aurora_cost_to_break(ice_wall_for(2)) == 4);
  CHECK(aurora_cost_to_break(IcePiece{CardId::WallOfStatic, true, 0, 2}) == 8);
  CHECK_FALSE(aurora_cost_to_break(IcePiece{CardId::Enigma}).has_value());
  CHECK_FALSE(aurora_cost_to_break(IcePiece{CardId::Archer}).has_value());
  CHECK_THROWS(aurora_cost_to_break(IcePiece{CardId::IceWall, false, 0, 0}));
}

TEST_CASE("hooking Archer keeps only the credit subroutine") {
  auto s = step(runner_mate1({2, 2}), Action::play(CardId::Escher));
  s = resolve_encounter_step(s, Action::hook(0)).next;
  CHECK(s.run->encounter.broken == std::vector<bool>{false, true, true, true});
  CHECK_FALSE(s.runner.rig.has(CardId::GrapplingHook));
  const int corp_before = s.corp.credits;
  s = resolve_encounter_step(s, Action::continue_run()).next;
  CHECK(s.corp.credits == corp_before + 2);
  CHECK(s.phase == Phase::Run);
}

TEST_CASE("breaking a strength 1 Ice Wall from the pool") {
  auto s = step(runner_mate1({1, 1}), Action::run(ServerId::rnd()));
  const int before = s.runner.credits;
  REQUIRE(offers(s, Action::break_sub(0, {2, 0})));
  s = step(s, Action::break_sub(0, {2, 0}));
  CHECK(s.runner.credits == before - 2);
  CHECK(s.run->encounter.is_broken(0));
}

TEST_CASE("unbroken Enigma costs a click and ends the run") {
  auto s = step(runner_mate1({1, 1}), Action::run(ServerId::rnd()));
  s = step(s, Action::break_sub(0, {2, 0}));
  s = step(s, Action::continue_run());
  REQUIRE(s.run->step == RunStep::Approach);
  s = step(s, Action::continue_run());
  REQUIRE(s.run->step == RunStep::Encounter);
  CHECK(s.runner.clicks == 3);
  s = step(s, Action::continue_run());
  CHECK(s.runner.clicks == 2);
  CHECK(s.phase == Phase::Action);
  CHECK_FALSE(s.run.has_value());
}

TEST_CASE("Archer program trash branches per program") {
  auto s = runner_mate1({2, 2});
  s.runner.rig.programs = {CardId::Aurora, CardId::Pheromones};
  s = step(s, Action::run(ServerId::hq()));
  const auto branches = fire_subroutine(s, 1);
  REQUIRE(branches.size() == 2);
  CHECK(branches[0].next.runner.rig.programs.size() == 1);
  CHECK(branches[1].next.runner.rig.programs.size() == 1);
  CHECK(branches[0].next.runner.rig.programs != branches[1].next.runner.rig.programs);
}

TEST_CASE("Wall of Static ends the run") {
  auto s = step(runner_facing_walls({1, 1}), Action::run(ServerId::remote(1)));
  const auto out = fire_subroutine(s, 0);
  REQUIRE(out.size() == 1);
  CHECK_FALSE(out[0].next.run.has_value());
  CHECK(out[0].next.phase == Phase::Action);
}

TEST_CASE("Enigma click loss is skipped at zero clicks") {
  auto s = runner_mate1({1, 1});
  s.runner.clicks = 1;
  s = step(s, Action::run(ServerId::remote(1)));
  s = step(s, Action::break_sub(0, {2, 0}));
  s = step(s, Action::continue_run());
  s = step(s, Action::continue_run());
  REQUIRE(s.runner.clicks == 0);
  const auto out = fire_subroutine(s, 0);
  REQUIRE(out.size() == 1);
  CHECK(out[0].next.runner.clicks == 0);
  CHECK(out[0].next.run.has_value());
}

TEST_CASE("K. P. Lynn after the last ice") {
  auto s = step(runner_mate1({2, 2}), Action::run(ServerId::remote(2)));
  s = step(s, Action::hook(0));
  s = step(s, Action::continue_run());
  REQUIRE(s.run->step == RunStep::KPLynn);
  auto tagged = step(s, Action::kp_lynn(true));
  CHECK(tagged.runner.tags == 1);
  REQUIRE(tagged.run.has_value());
  CHECK(tagged.run->step == RunStep::Approach);
  tagged = step(tagged, Action::continue_run());
  CHECK(tagged.run->successful);
  const auto ended = step(s, Action::kp_lynn(false));
  CHECK(ended.runner.tags == 0);
  CHECK_FALSE(ended.run.has_value());
}

TEST_CASE("jacking out at the second approach") {
  auto s = step(runner_mate1({1, 1}), Action::run(ServerId::rnd()));
  CHECK_FALSE(offers(s, Action::jack_out()));
  s = step(s, Action::break_sub(0, {2, 0}));
  s = step(s, Action::continue_run());
  REQUIRE(offers(s, Action::jack_out()));
  const auto out = apply(s, Action::jack_out());
  CHECK_FALSE(out.next.run.has_value());
  CHECK_FALSE(has_event(out.events, EventKind::RunSuccessful));
}

TEST_CASE("Strongboxes block a clickless steal from HQ") {
  auto s = runner_mate1({2, 2});
  s.runner.clicks = 1;
  s = step(s, Action::run(ServerId::hq()));
  s = step(s, Action::hook(0));
  s = step(s, Action::continue_run());
  s = step(s, Action::continue_run());  // approach the server
  REQUIRE(s.run->step == RunStep::Breach);
  const auto box = step(s, Action::access(CardId::Strongbox, AccessSource::Root));
  const auto legal = legal_actions(box);
  CHECK(std::any_of(legal.begin(), legal.end(), [](const Action& a) {
    return a.kind == ActionKind::TrashAccessed && a.payment.total() == 1;
  }));
  const auto agenda = step(s, Action::access(CardId::PriorityRequisition, AccessSource::HqHand));
  CHECK_FALSE(offers(agenda, Action::steal()));
  CHECK(offers(agenda, Action::decline()));
}

TEST_CASE("stealing the seventh point wins before run-end triggers") {
  const auto sc = compile_runner_mate1(PartitionInstance({2, 2}));
  const auto line = runner_reference_line(sc, {0});
  GameState s = sc.state;
  std::vector<Event> last;
  for (const auto& a : line) {
    auto out = apply(s, a);
    s = std::move(out.next);
    last = std::move(out.events);
  }
  CHECK(s.status == TerminalStatus::RunnerWin);
  CHECK(has_event(last, EventKind::AgendaStolen));
  CHECK_FALSE(has_event(last, EventKind::MeatDamage));
}

TEST_CASE("tagged runner with an empty grip flatlines to Dedicated Response Team") {
  auto s = runner_mate1({1, 1});
  s.runner.tags = 1;
  s.runner.grip.clear();
  s = step(s, Action::run(ServerId::archives()));
  CHECK(s.status == TerminalStatus::RunnerFlatline);
}

TEST_CASE("Escher rearrangement") {
  const auto sc = compile_runner_mate1(PartitionInstance({2, 2}));
  auto s = step(sc.state, Action::play(CardId::Escher));
  s = step(s, Action::hook(0));
  s = step(s, Action::continue_run());
  s = step(s, Action::continue_run());
  REQUIRE(s.rearrange == RearrangeSource::Escher);

  SUBCASE("swap the Archers onto the Enigma servers") {
    const IcePiece archer{CardId::Archer};
    const IcePiece wall = ice_wall_for(2);
    std::vector<IcePiece> stack{archer};
    for (int i = 0; i < 5; ++i) stack.push_back(IcePiece{CardId::Enigma});
    const auto plan = plan_for_layout(s, {{wall}, stack, {}, stack, {wall}});
    const auto out = rearrange_ice(s, plan, RearrangeSource::Escher).next;
    CHECK(out.server(ServerId::hq()).ice == std::vector<IcePiece>{wall});
    CHECK(out.server(ServerId::remote(2)).ice == std::vector<IcePiece>{wall});
    CHECK_FALSE(out.rearrange.has_value());
  }
  SUBCASE("identity plan") {
    const auto out = rearrange_ice(s, identity_plan(s), RearrangeSource::Escher).next;
    for (std::size_t i = 0; i < s.corp.servers.size(); ++i) CHECK(out.corp.servers[i].ice == s.corp.servers[i].ice);
    CHECK_FALSE(out.rearrange.has_value());
  }
  SUBCASE("plans must keep per-server counts") {
    auto plan = identity_plan(s);
    plan.assignment[0] = {ServerId::rnd(), 6};
    CHECK(validate_plan(s, plan).has_value());
    try {
      apply(s, Action::rearrange(plan));
      FAIL("bad plan accepted");
    } catch (const RulesError& e) {
      CHECK(e.code() == RuleViolation::InvalidPlan);
    }
  }
}

TEST_CASE("turn starts") {
  SUBCASE("corp draws its Medical Breakthrough") {
    const auto s = turn_start(compile_corp_mate2(PartitionInstance({1, 1})).state).next;
    CHECK(std::count(s.corp.hq.begin(), s.corp.hq.end(), CardId::MedicalBreakthrough) == 2);
    CHECK(s.corp.clicks == 3);
    CHECK(s.corp.rnd == std::vector<CardId>{CardId::HedgeFund});
  }
  SUBCASE("corp with an empty deck loses") {
    auto s = compile_corp_mate2(PartitionInstance({1, 1})).state;
    s.corp.rnd.clear();
    CHECK(turn_start(s).next.status == TerminalStatus::CorpDecksOut);
  }
  SUBCASE("runner refreshes clicks and Pheromones credits") {
    auto s = runner_mate1({1, 1});
    s.phase = Phase::TurnStart;
    s.runner.clicks = 0;
    s.runner.rig.pheromones_credits = 0;
    s = turn_start(s).next;
    CHECK(s.runner.clicks == 4);
    CHECK(s.runner.rig.pheromones_credits == s.runner.rig.pheromones_counters);
  }
}

TEST_CASE("successful HQ runs feed Pheromones") {
  const auto sc = compile_runner_mate1(PartitionInstance({1, 2, 3, 2}));
  REQUIRE(sc.state.runner.rig.pheromones_counters == 24);
  const auto line = runner_reference_line(sc, {0, 2});
  GameState s = sc.state;
  for (const auto& a : line) {
    const int spendable = s.runner.rig.pheromones_credits;
    s = step(s, a);
    if (a.kind == ActionKind::Rearrange) {
      CHECK(s.runner.rig.pheromones_counters == 25);
      CHECK(s.runner.rig.pheromones_credits == spendable);
      break;
    }
  }

  SUBCASE("no counter for other servers or failed runs") {
    const auto start = runner_mate1({1, 1});
    const auto r = step(start, Action::run(ServerId::archives()));
    CHECK(r.runner.rig.pheromones_counters == start.runner.rig.pheromones_counters);
    auto h = runner_mate1({2, 2});
    h = step(h, Action::run(ServerId::hq()));
    h = step(h, Action::continue_run());  // Archer fires
    while (h.choice) h = step(h, Action::resolve(0));
    CHECK_FALSE(h.run.has_value());
    CHECK(h.runner.rig.pheromones_counters == 10);
  }
}
