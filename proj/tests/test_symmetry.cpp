#include <algorithm>
#include <set>

#include "doctest.h"
#include "netmate/compiler.hpp"
#include "netmate/rules.hpp"
#include "netmate/symmetry.hpp"

using namespace netmate;

namespace {

GameState escher_pending(std::vector<std::int64_t> v) {
  const auto sc = compile_runner_mate1(PartitionInstance(std::move(v)));
  GameState s = sc.state;
  for (const auto& a : {Action::play(CardId::Escher), Action::hook(0), Action::continue_run()}) s = apply(s, a).next;
  while (s.run && s.run->step == RunStep::Approach) s = apply(s, Action::continue_run()).next;
  // pay through whatever walls HQ still has
  while (s.run && s.run->step == RunStep::Encounter) {
    const auto legal = legal_actions(s);
    const auto it = std::find_if(legal.begin(), legal.end(), [](const Action& a) {
      return a.kind == ActionKind::BreakSubroutine || a.kind == ActionKind::BoostAurora;
    });
    s = apply(s, it == legal.end() ? Action::continue_run() : *it).next;
    while (s.run && s.run->step == RunStep::Approach) s = apply(s, Action::continue_run()).next;
  }
  REQUIRE(s.rearrange == RearrangeSource::Escher);
  return s;
}

GameState seed_pending(std::vector<std::int64_t> v) {
  GameState s = compile_corp_mate2(PartitionInstance(std::move(v))).state;
  for (const auto& a : {Action::begin_turn(), Action::advance_root(ServerId::remote(1), 0),
                        Action::score(ServerId::remote(1), 0)})
    s = apply(s, a).next;
  REQUIRE(s.rearrange == RearrangeSource::MandatorySeedReplacement);
  return s;
}

// Every distinct arrangement of the ice multiset over the fixed server
// sizes, applied through the engine; returns the set of resulting keys.
std::set<CanonicalKey> keys_of_all_arrangements(const GameState& s, std::size_t* arrangements) {
  std::vector<IcePiece> pieces;
  std::vector<std::size_t> sizes;
  for (const auto& srv : s.corp.servers) {
    pieces.insert(pieces.end(), srv.ice.begin(), srv.ice.end());
    sizes.push_back(srv.ice.size());
  }
  std::sort(pieces.begin(), pieces.end());
  std::set<CanonicalKey> keys;
  *arrangements = 0;
  do {
    std::vector<std::vector<IcePiece>> layout;
    std::size_t at = 0;
    for (auto n : sizes) {
      layout.emplace_back(pieces.begin() + static_cast<std::ptrdiff_t>(at),
                          pieces.begin() + static_cast<std::ptrdiff_t>(at + n));
      at += n;
    }
    keys.insert(canonical_key(apply(s, Action::rearrange(plan_for_layout(s, layout))).next));
    ++*arrangements;
  } while (std::next_permutation(pieces.begin(), pieces.end()));
  return keys;
}

std::set<CanonicalKey> keys_of(const GameState& s, const std::vector<RearrangementPlan>& plans) {
  std::set<CanonicalKey> keys;
  for (const auto& p : plans) keys.insert(canonical_key(apply(s, Action::rearrange(p)).next));
  return keys;
}

void check_one_plan_per_class(const GameState& s, std::size_t expected_classes, std::size_t expected_arrangements) {
  std::size_t arrangements = 0;
  const auto all = keys_of_all_arrangements(s, &arrangements);
  const auto plans = enumerate_rearrangement_plans(s);
  CHECK(arrangements == expected_arrangements);
  CHECK(plans.size() == all.size());
  CHECK(keys_of(s, plans) == all);
  CHECK(all.size() == expected_classes);
  const auto every = enumerate_rearrangement_plans(s, {.collapse_unreachable = false});
  CHECK(every.size() == arrangements);
}

}  // namespace

TEST_CASE("plan classes match brute force") {
  SUBCASE("two identical walls") { check_one_plan_per_class(seed_pending({1, 1}), 1, 1); }
  SUBCASE("walls 1,2,3,2") { check_one_plan_per_class(seed_pending({1, 2, 3, 2}), 12, 12); }
  SUBCASE("Escher on {2,2}") { check_one_plan_per_class(escher_pending({2, 2}), 112, 6006); }
}

TEST_CASE("canonical keys") {
  const auto s = compile_corp_mate2(PartitionInstance({1, 2, 3, 2})).state;
  const auto k = canonical_key(s);
  CHECK(canonical_key(s) == k);

  auto swapped = compile_runner_mate1(PartitionInstance({2, 2})).state;
  const auto base = canonical_key(swapped);
  auto& stack = swapped.server(ServerId::rnd()).ice;
  std::swap(stack[1], stack[2]);
  CHECK(canonical_key(swapped) == base);

  auto richer = s;
  richer.runner.credits += 1;
  CHECK_FALSE(canonical_key(richer) == k);

  auto reordered = s;
  std::swap(reordered.corp.rnd[0], reordered.corp.rnd[1]);
  CHECK_FALSE(canonical_key(reordered) == k);

  auto walls_swapped = s;
  std::swap(walls_swapped.server(ServerId::remote(1)).ice[0], walls_swapped.server(ServerId::remote(1)).ice[1]);
  CHECK_FALSE(canonical_key(walls_swapped) == k);

  auto hand = compile_runner_mate1(PartitionInstance({2, 2})).state;
  hand.corp.hq = {CardId::HedgeFund, CardId::PriorityRequisition};
  auto hand2 = hand;
  hand2.corp.hq = {CardId::PriorityRequisition, CardId::HedgeFund};
  CHECK(canonical_key(hand) == canonical_key(hand2));
}

TEST_CASE("ice behind an impassable piece is ignored once no rearrangement is left") {
  auto s = compile_runner_mate1(PartitionInstance({2, 2})).state;
  s.runner.grip.clear();
  s.runner.rig.programs = {CardId::Aurora, CardId::Pheromones};
  auto t = s;
  // second Enigma on R&D can never be reached
  t.server(ServerId::rnd()).ice[2] = IcePiece{CardId::Archer};
  CHECK(ice_is_impassable(s, IcePiece{CardId::Enigma}));
  CHECK_FALSE(ice_is_impassable(s, ice_wall_for(2)));
  CHECK(canonical_key(s) == canonical_key(t));

  auto with_hook = s;
  with_hook.runner.rig.programs.push_back(CardId::GrapplingHook);
  CHECK_FALSE(ice_is_impassable(with_hook, IcePiece{CardId::Enigma}));
}
