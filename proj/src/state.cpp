#include "netmate/state.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace netmate {

std::string to_string(ServerId id) {
  switch (id.value) {
    case 0: return "hq";
    case 1: return "rnd";
    case 2: return "archives";
    default: return "remote" + std::to_string(id.remote_number());
  }
}

std::optional<ServerId> server_from_string(std::string_view text) {
  if (text == "hq") return ServerId::hq();
  if (text == "rnd") return ServerId::rnd();
  if (text == "archives") return ServerId::archives();
  constexpr std::string_view prefix = "remote";
  if (text.substr(0, prefix.size()) != prefix) return std::nullopt;
  int k = 0;
  const auto digits = text.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || k < 1) return std::nullopt;
  return ServerId::remote(k);
}

int ice_strength(const IcePiece& ice) {
  const int base = card(ice.id).strength;
  // Ice Wall: +1 strength for each advancement token.
  if (ice.id == CardId::IceWall) return base + ice.advancement;
  return base;
}

int subroutine_count(const IcePiece& ice) {
  return static_cast<int>(card(ice.id).subroutines.size()) + ice.sub_boosts;
}

SubEffect subroutine_effect(const IcePiece& ice, int index) {
  const auto printed = card(ice.id).subroutines;
  if (index < 0 || index >= subroutine_count(ice)) throw std::out_of_range("subroutine index");
  if (index < static_cast<int>(printed.size())) return printed[static_cast<std::size_t>(index)];
  return SubEffect::EndTheRun;  // appended by Sub Boost
}

bool ice_is_barrier(const IcePiece& ice) {
  return has_subtype(ice.id, subtype::kBarrier) || ice.sub_boosts > 0;
}

bool RunnerRig::has(CardId id) const {
  return std::find(programs.begin(), programs.end(), id) != programs.end();
}

std::string_view to_string(TerminalStatus s) {
  switch (s) {
    case TerminalStatus::None: return "in progress";
    case TerminalStatus::RunnerWin: return "runner wins";
    case TerminalStatus::CorpWin: return "corp wins";
    case TerminalStatus::RunnerFlatline: return "runner flatlined";
    case TerminalStatus::CorpDecksOut: return "corp decked out";
  }
  return "?";
}

std::optional<Side> winner(TerminalStatus s) {
  switch (s) {
    case TerminalStatus::RunnerWin:
    case TerminalStatus::CorpDecksOut: return Side::Runner;
    case TerminalStatus::CorpWin:
    case TerminalStatus::RunnerFlatline: return Side::Corp;
    case TerminalStatus::None: break;
  }
  return std::nullopt;
}

Server& GameState::server(ServerId id) {
  return const_cast<Server&>(std::as_const(*this).server(id));
}

const Server& GameState::server(ServerId id) const {
  if (const Server* s = find_server(id)) return *s;
  throw std::out_of_range("no such server: " + to_string(id));
}

const Server* GameState::find_server(ServerId id) const {
  for (const auto& s : corp.servers)
    if (s.id == id) return &s;
  return nullptr;
}

int agenda_points(const std::vector<CardId>& score_area) {
  int total = 0;
  for (CardId id : score_area) total += card(id).agenda_points;
  return total;
}

int medical_breakthrough_requirement(const GameState& state) {
  // Each copy in either score area lowers the requirement by one.
  const auto copies = std::count(state.corp.score_area.begin(), state.corp.score_area.end(),
                                 CardId::MedicalBreakthrough) +
                      std::count(state.runner.score_area.begin(), state.runner.score_area.end(),
                                 CardId::MedicalBreakthrough);
  return std::max(0, card(CardId::MedicalBreakthrough).advancement_requirement - static_cast<int>(copies));
}

int advancement_requirement(const GameState& state, CardId agenda) {
  if (agenda == CardId::MedicalBreakthrough) return medical_breakthrough_requirement(state);
  return card(agenda).advancement_requirement;
}

std::optional<Side> side_to_act(const GameState& state) {
  if (state.terminal()) return std::nullopt;
  if (state.choice) return Side::Corp;
  if (state.rearrange)
    return *state.rearrange == RearrangeSource::Escher ? Side::Runner : Side::Corp;
  if (state.phase == Phase::Run) return Side::Runner;
  return state.turn_owner;
}

std::vector<CardId> all_cards(const GameState& state) {
  std::vector<CardId> out;
  const auto add = [&out](const std::vector<CardId>& zone) { out.insert(out.end(), zone.begin(), zone.end()); };
  out.push_back(state.corp.identity);
  out.push_back(state.runner.identity);
  add(state.corp.hq);
  add(state.corp.rnd);
  add(state.corp.score_area);
  for (const auto& a : state.corp.archives) out.push_back(a.id);
  for (const auto& s : state.corp.servers) {
    for (const auto& ice : s.ice) out.push_back(ice.id);
    for (const auto& r : s.root) out.push_back(r.id);
  }
  add(state.runner.grip);
  add(state.runner.stack);
  add(state.runner.heap);
  add(state.runner.rig.programs);
  add(state.runner.score_area);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> check_invariants(const GameState& state) {
  const auto& c = state.corp;
  const auto& r = state.runner;
  if (c.credits < 0 || c.clicks < 0) return "corp credits or clicks negative";
  if (r.credits < 0 || r.clicks < 0) return "runner credits or clicks negative";
  if (r.tags < 0) return "negative tags";
  if (r.rig.pheromones_credits > r.rig.pheromones_counters) return "pheromones credits exceed counters";
  if (r.rig.pheromones_credits < 0 || r.rig.pheromones_counters < 0) return "negative pheromones";
  if (!r.rig.has(CardId::Pheromones) && (r.rig.pheromones_counters != 0 || r.rig.pheromones_credits != 0))
    return "pheromones counters without pheromones";
  if (c.servers.size() < 3 || c.servers[0].id != ServerId::hq() || c.servers[1].id != ServerId::rnd() ||
      c.servers[2].id != ServerId::archives())
    return "central servers missing or out of order";
  for (std::size_t i = 3; i < c.servers.size(); ++i)
    if (!(c.servers[i - 1].id < c.servers[i].id)) return "remote servers out of order";
  for (const auto& s : c.servers) {
    for (const auto& ice : s.ice) {
      if (!is_ice(ice.id)) return "non-ice card in ice position";
      if (ice.advancement > 0 && ice.id != CardId::IceWall) return "advancement tokens on non-advanceable ice";
      if (ice.sub_boosts > 0 && !ice.rezzed) return "sub boost on unrezzed ice";
      if (ice.advancement < 0 || ice.sub_boosts < 0) return "negative ice counters";
    }
    for (const auto& rc : s.root)
      if (is_ice(rc.id)) return "ice installed in a root";
  }
  for (CardId id : c.score_area)
    if (!is_agenda(id)) return "non-agenda in corp score area";
  for (CardId id : r.score_area)
    if (!is_agenda(id)) return "non-agenda in runner score area";
  if (state.phase == Phase::Terminal) {
    if (state.status == TerminalStatus::None) return "terminal phase without status";
  } else if (state.status != TerminalStatus::None) {
    return "status set on non-terminal state";
  }
  if (state.phase == Phase::Run && !state.run) return "run phase without run context";
  if (state.phase != Phase::Run && state.run) return "run context outside run phase";
  if (state.run) {
    const auto& run = *state.run;
    const Server* target = state.find_server(run.target);
    if (!target) return "run on missing server";
    if (run.ice_index < 0 || run.ice_index > static_cast<int>(target->ice.size())) return "ice index out of range";
    if (run.step == RunStep::Encounter || run.step == RunStep::Firing) {
      if (run.ice_index >= static_cast<int>(target->ice.size())) return "encounter past the last ice";
      const int subs = subroutine_count(target->ice[static_cast<std::size_t>(run.ice_index)]);
      if (static_cast<int>(run.encounter.broken.size()) > subs) return "broken subroutine outside the encountered ice";
    }
  }
  return std::nullopt;
}

}  // namespace netmate
