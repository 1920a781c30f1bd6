#include "netmate/compiler.hpp"

#include <algorithm>
#include <numeric>

#include "netmate/rules.hpp"

namespace netmate {

namespace {

// Every counter must stay comfortably inside 16 bits.
constexpr std::int64_t kMaxDerived = 30000;

std::int64_t checked(std::int64_t v, const char* what) {
  if (v < 0 || v > kMaxDerived)
    throw InstanceError(std::string("instance too large: ") + what + " = " + std::to_string(v));
  return v;
}

void require_even(const PartitionInstance& instance) {
  if (instance.size() % 2 != 0)
    throw InstanceError("odd cardinality " + std::to_string(instance.size()) +
                        ": the construction needs two halves of equal size");
}

std::vector<Server> central_servers() {
  return {Server{ServerId::hq(), {}, {}}, Server{ServerId::rnd(), {}, {}}, Server{ServerId::archives(), {}, {}}};
}

IcePiece rezzed(CardId id) { return IcePiece{id, true, 0, 0}; }

}  // namespace

int wall_strength(std::int64_t a) {
  if (a < 1) throw InstanceError("values must be positive");
  return static_cast<int>(checked(3 * (a - 1) + 1, "wall strength"));
}

int subboost_count(std::int64_t a) {
  if (a < 1) throw InstanceError("values must be positive");
  return static_cast<int>(checked(a - 1, "sub boost counters"));
}

IcePiece ice_wall_for(std::int64_t a) {
  // base strength 1, one token per point above it
  return IcePiece{CardId::IceWall, true, wall_strength(a) - card(CardId::IceWall).strength, 0};
}

IcePiece wall_of_static_for(std::int64_t a) { return IcePiece{CardId::WallOfStatic, true, 0, subboost_count(a)}; }

CompiledScenario compile_runner_mate1(const PartitionInstance& instance) {
  require_even(instance);
  const auto& a = instance.values();
  const int n = instance.size();
  const std::int64_t twice_t = instance.twice_target();

  CompiledScenario out;
  auto& m = out.manifest;
  m.theorem = 1;
  m.values = a;
  m.twice_target = twice_t;
  m.per_server_target = twice_t;
  m.enigmas_per_stack = n + 3;
  m.hq_initial_walls = (n - 2) / 2;

  GameState& s = out.state;
  s.corp.identity = CardId::WeylandBBW;
  s.corp.servers = central_servers();
  Server& hq = s.corp.servers[0];
  Server& rnd = s.corp.servers[1];
  Server remote1{ServerId::remote(1), {}, {}};
  Server remote2{ServerId::remote(2), {}, {}};

  // a_1 guards R&D, a_2 the Dedicated Response Team remote, the rest
  // alternate between HQ and the Priority Requisition remote.
  m.wall_servers.resize(a.size());
  rnd.ice.push_back(ice_wall_for(a[0]));
  m.wall_servers[0] = to_string(rnd.id);
  remote1.ice.push_back(ice_wall_for(a[1]));
  m.wall_servers[1] = to_string(remote1.id);
  hq.ice.push_back(rezzed(CardId::Archer));
  remote2.ice.push_back(rezzed(CardId::Archer));
  std::int64_t c = 0;
  for (std::size_t i = 2; i < a.size(); ++i) {
    const bool to_hq = (i % 2) == 0;
    (to_hq ? hq : remote2).ice.push_back(ice_wall_for(a[i]));
    m.wall_servers[i] = to_string(to_hq ? hq.id : remote2.id);
    if (to_hq) c += 2 * a[i];
  }
  for (int i = 0; i < n + 3; ++i) {
    rnd.ice.push_back(rezzed(CardId::Enigma));
    remote1.ice.push_back(rezzed(CardId::Enigma));
  }
  m.hq_break_cost = checked(c, "c");

  hq.root = {RootCard{CardId::Strongbox, true, 0}, RootCard{CardId::Strongbox, true, 0}};
  remote1.root = {RootCard{CardId::DedicatedResponseTeam, true, 0}};
  remote2.root = {RootCard{CardId::PriorityRequisition, false, 0}, RootCard{CardId::KPLynn, true, 0}};
  s.corp.servers.push_back(std::move(remote1));
  s.corp.servers.push_back(std::move(remote2));
  s.corp.hq = {CardId::PriorityRequisition};
  s.corp.rnd.assign(static_cast<std::size_t>(n + 3), CardId::HedgeFund);
  s.corp.archives = {ArchivedCard{CardId::FastTrack, true}};

  const int pheromones = static_cast<int>(checked(2 * twice_t + c + 2, "pheromones counters"));
  auto& r = s.runner;
  r.identity = CardId::Exile;
  r.link = 1;
  r.rig.programs = {CardId::Aurora, CardId::GrapplingHook, CardId::Pheromones};
  r.rig.pheromones_counters = pheromones;
  r.rig.pheromones_credits = pheromones;
  r.grip = {CardId::Escher};
  r.heap = {CardId::Infiltration};
  r.credits = static_cast<int>(checked(twice_t + 3, "runner credits"));
  r.clicks = kRunnerClicksPerTurn;
  r.score_area = {CardId::PriorityRequisition};

  s.turn_owner = Side::Runner;
  s.phase = Phase::Action;
  return out;
}

CompiledScenario compile_corp_mate2(const PartitionInstance& instance) {
  require_even(instance);
  const auto& a = instance.values();
  const int n = instance.size();
  const std::int64_t twice_t = instance.twice_target();
  const std::int64_t pool = twice_t + n - 4;
  if (pool < 0) throw InstanceError("runner credit pool 2t+|A|-4 would be negative");

  CompiledScenario out;
  auto& m = out.manifest;
  m.theorem = 2;
  m.values = a;
  m.twice_target = twice_t;
  m.per_server_target = checked(twice_t + n, "threshold");
  m.wall_servers.resize(a.size());

  GameState& s = out.state;
  s.corp.identity = CardId::NiseiDivision;
  s.corp.servers = central_servers();
  Server remote1{ServerId::remote(1), {}, {RootCard{CardId::MandatorySeedReplacement, false, 3}}};
  Server remote2{ServerId::remote(2), {}, {}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool first_half = static_cast<int>(i) < n / 2;
    (first_half ? remote1 : remote2).ice.push_back(wall_of_static_for(a[i]));
    m.wall_servers[i] = to_string(first_half ? remote1.id : remote2.id);
  }
  s.corp.servers.push_back(std::move(remote1));
  s.corp.servers.push_back(std::move(remote2));
  s.corp.hq = {CardId::MedicalBreakthrough};
  s.corp.rnd = {CardId::MedicalBreakthrough, CardId::HedgeFund};
  s.corp.archives = {ArchivedCard{CardId::HedgeFund, true}};
  s.corp.credits = 4;
  s.corp.score_area = {CardId::PriorityRequisition};

  auto& r = s.runner;
  r.identity = CardId::Exile;
  r.link = 1;
  r.rig.programs = {CardId::Aurora};
  r.heap = {CardId::TheShadowNet};
  r.credits = static_cast<int>(checked(pool, "runner credits"));
  r.score_area = {CardId::PriorityRequisition, CardId::MedicalBreakthrough};

  s.turn_owner = Side::Corp;
  s.phase = Phase::TurnStart;
  return out;
}

RearrangementPlan plan_for_layout(const GameState& state, const std::vector<std::vector<IcePiece>>& layout) {
  if (layout.size() != state.corp.servers.size()) throw std::invalid_argument("layout needs one entry per server");
  std::vector<IcePiece> pieces;
  for (const auto& srv : state.corp.servers) pieces.insert(pieces.end(), srv.ice.begin(), srv.ice.end());
  std::vector<bool> used(pieces.size(), false);
  RearrangementPlan plan;
  plan.assignment.resize(pieces.size());
  for (std::size_t s = 0; s < layout.size(); ++s)
    for (std::size_t p = 0; p < layout[s].size(); ++p) {
      std::size_t i = 0;
      while (i < pieces.size() && (used[i] || !(pieces[i] == layout[s][p]))) ++i;
      if (i == pieces.size()) throw std::invalid_argument("layout uses a piece that is not in play");
      used[i] = true;
      plan.assignment[i] = {state.corp.servers[s].id, static_cast<int>(p)};
    }
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw std::invalid_argument("layout leaves pieces unplaced");
  return plan;
}

namespace {

class LineBuilder {
 public:
  explicit LineBuilder(GameState start) : s_(std::move(start)) {}

  void play(const Action& a) {
    s_ = apply(s_, a).next;
    line_.push_back(a);
  }

  const GameState& state() const { return s_; }
  std::vector<Action> take() { return std::move(line_); }

  Payment cheapest_for_pool(int amount) const {
    const auto options = payment_options(s_, amount);
    if (options.empty()) throw std::logic_error("reference line ran out of credits");
    return options.front();  // spends Pheromones first when allowed
  }

  // Breaks every barrier on the way in, stopping at anything else.
  void push_through() {
    while (s_.phase == Phase::Run && !s_.choice && !s_.rearrange) {
      const auto& run = *s_.run;
      if (run.step == RunStep::Approach) {
        play(Action::continue_run());
        continue;
      }
      if (run.step != RunStep::Encounter) return;
      const IcePiece ice = s_.server(run.target).ice.at(static_cast<std::size_t>(run.ice_index));
      if (!ice_is_barrier(ice)) return;
      while (s_.run->encounter.aurora_strength < ice_strength(ice)) play(Action::boost(cheapest_for_pool(2)));
      for (int i = 0; i < subroutine_count(ice); ++i) play(Action::break_sub(i, cheapest_for_pool(2)));
      play(Action::continue_run());
    }
  }

 private:
  GameState s_;
  std::vector<Action> line_;
};

std::vector<int> complement(int n, const std::vector<int>& half) {
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (std::find(half.begin(), half.end(), i) == half.end()) rest.push_back(i);
  return rest;
}

void require_balanced(const std::vector<std::int64_t>& values, const std::vector<int>& half) {
  const int n = static_cast<int>(values.size());
  std::vector<int> sorted = half;
  std::sort(sorted.begin(), sorted.end());
  if (std::unique(sorted.begin(), sorted.end()) != sorted.end() || static_cast<int>(sorted.size()) * 2 != n ||
      sorted.front() < 0 || sorted.back() >= n)
    throw std::invalid_argument("half must name |A|/2 distinct indices");
  std::int64_t sum = 0;
  for (int i : sorted) sum += values[static_cast<std::size_t>(i)];
  const std::int64_t total = std::accumulate(values.begin(), values.end(), std::int64_t{0});
  if (2 * sum != total) throw std::invalid_argument("half is not balanced");
}

}  // namespace

std::vector<Action> runner_reference_line(const CompiledScenario& scenario, const std::vector<int>& hq_half) {
  const auto& values = scenario.manifest.values;
  require_balanced(values, hq_half);
  const int n = static_cast<int>(values.size());
  LineBuilder b(scenario.state);

  // Escher: Grappling Hook keeps Archer's credit subroutine, Pheromones
  // pays for the walls behind it.
  b.play(Action::play(CardId::Escher));
  b.play(Action::hook(0));
  b.play(Action::continue_run());
  b.push_through();

  std::vector<std::vector<IcePiece>> layout(b.state().corp.servers.size());
  std::vector<IcePiece> deep{IcePiece{CardId::Archer, true, 0, 0}};
  deep.insert(deep.end(), static_cast<std::size_t>(n + 3), IcePiece{CardId::Enigma, true, 0, 0});
  for (int i : hq_half) layout[0].push_back(ice_wall_for(values[static_cast<std::size_t>(i)]));
  layout[1] = deep;
  layout[3] = deep;
  for (int i : complement(n, hq_half)) layout[4].push_back(ice_wall_for(values[static_cast<std::size_t>(i)]));
  b.play(Action::rearrange(plan_for_layout(b.state(), layout)));

  // First HQ run trashes both Strongboxes and leaves the agenda.
  b.play(Action::run(ServerId::hq()));
  b.push_through();
  for (int k = 0; k < 2; ++k) {
    b.play(Action::access(CardId::Strongbox, AccessSource::Root));
    b.play(Action::trash_accessed(b.cheapest_for_pool(card(CardId::Strongbox).trash_cost)));
  }
  b.play(Action::decline());

  b.play(Action::run(ServerId::hq()));
  b.push_through();
  b.play(Action::steal());

  b.play(Action::run(ServerId::remote(2)));
  b.push_through();
  b.play(Action::kp_lynn(true));
  b.push_through();
  b.play(Action::access(CardId::PriorityRequisition, AccessSource::Root));
  b.play(Action::steal());
  return b.take();
}

std::vector<Action> corp_reference_line(const CompiledScenario& scenario, const std::vector<int>& remote1_half) {
  const auto& values = scenario.manifest.values;
  require_balanced(values, remote1_half);
  const int n = static_cast<int>(values.size());
  const ServerId r1 = ServerId::remote(1);
  const ServerId r2 = ServerId::remote(2);
  LineBuilder b(scenario.state);

  b.play(Action::begin_turn());
  b.play(Action::advance_root(r1, 0));
  b.play(Action::score(r1, 0));
  std::vector<std::vector<IcePiece>> layout(b.state().corp.servers.size());
  for (int i : remote1_half) layout[3].push_back(wall_of_static_for(values[static_cast<std::size_t>(i)]));
  for (int i : complement(n, remote1_half)) layout[4].push_back(wall_of_static_for(values[static_cast<std::size_t>(i)]));
  b.play(Action::rearrange(plan_for_layout(b.state(), layout)));
  b.play(Action::install(CardId::MedicalBreakthrough, r1));
  b.play(Action::install(CardId::MedicalBreakthrough, r2));
  b.play(Action::end_turn());

  b.play(Action::begin_turn());
  for (int i = 0; i < kRunnerClicksPerTurn; ++i) b.play(Action::gain_credit());
  b.play(Action::end_turn());

  b.play(Action::begin_turn());
  for (int i = 0; i < kCorpClicksPerTurn; ++i) b.play(Action::advance_root(r1, 0));
  b.play(Action::score(r1, 0));
  return b.take();
}

}  // namespace netmate
