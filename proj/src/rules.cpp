#include "netmate/rules.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "netmate/symmetry.hpp"

namespace netmate {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::TurnBegan: return "turn-began";
    case EventKind::TurnEnded: return "turn-ended";
    case EventKind::ClickSpent: return "click-spent";
    case EventKind::CreditsGained: return "credits-gained";
    case EventKind::CreditsSpent: return "credits-spent";
    case EventKind::PheromonesSpent: return "pheromones-spent";
    case EventKind::CardDrawn: return "card-drawn";
    case EventKind::CardPlayed: return "card-played";
    case EventKind::CardInstalled: return "card-installed";
    case EventKind::CardTrashed: return "card-trashed";
    case EventKind::Advanced: return "advanced";
    case EventKind::AgendaScored: return "agenda-scored";
    case EventKind::AgendaStolen: return "agenda-stolen";
    case EventKind::RunStarted: return "run-started";
    case EventKind::IceEncountered: return "ice-encountered";
    case EventKind::AuroraBoosted: return "aurora-boosted";
    case EventKind::SubroutineBroken: return "subroutine-broken";
    case EventKind::SubroutineFired: return "subroutine-fired";
    case EventKind::IcePassed: return "ice-passed";
    case EventKind::RunSuccessful: return "run-successful";
    case EventKind::RunEnded: return "run-ended";
    case EventKind::TagTaken: return "tag-taken";
    case EventKind::TagRemoved: return "tag-removed";
    case EventKind::MeatDamage: return "meat-damage";
    case EventKind::VirusCounterPlaced: return "virus-counter-placed";
    case EventKind::IceRearranged: return "ice-rearranged";
    case EventKind::GameOver: return "game-over";
  }
  return "?";
}

std::string describe(const Event& e) {
  std::ostringstream out;
  out << to_string(e.side) << " " << to_string(e.kind);
  if (e.amount) out << " " << e.amount;
  if (!e.detail.empty()) out << " (" << e.detail << ")";
  return out.str();
}

std::optional<int> aurora_cost_to_break(const IcePiece& ice) {
  if (!ice.rezzed) throw RulesError(RuleViolation::WrongPhase, "break cost of unrezzed ice is undefined");
  if (!ice_is_barrier(ice)) return std::nullopt;
  const int base = card(CardId::Aurora).strength;
  const int deficit = std::max(0, ice_strength(ice) - base);
  const int boosts = (deficit + 2) / 3;
  return 2 * boosts + 2 * subroutine_count(ice);
}

namespace {

constexpr int kAuroraBoost = 3;
constexpr int kAuroraAbilityCost = 2;

bool remove_one(std::vector<CardId>& zone, CardId id) {
  auto it = std::find(zone.begin(), zone.end(), id);
  if (it == zone.end()) return false;
  zone.erase(it);
  return true;
}

std::vector<CardId> distinct_sorted(std::vector<CardId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool pheromones_usable(const GameState& s) {
  return s.phase == Phase::Run && s.run && s.run->target == ServerId::hq() && s.runner.rig.has(CardId::Pheromones);
}

bool access_needs_decision(const PendingAccess& p) {
  if (is_agenda(p.id)) return true;
  return p.source != AccessSource::Archives && card(p.id).trash_cost > 0;
}

class Transition {
 public:
  Transition(GameState& s, std::vector<Event>* log) : s_(s), log_(log) {}

  void apply(const Action& a) {
    if (s_.terminal()) throw RulesError(RuleViolation::TerminalState, "game is over");
    if (s_.choice) {
      if (a.kind != ActionKind::ResolveChoice) throw illegal(a, "a Corp choice is pending");
      resolve_choice(a.index);
      return;
    }
    if (s_.rearrange) {
      if (a.kind != ActionKind::Rearrange) throw illegal(a, "a rearrangement is pending");
      rearrange(a.plan);
      return;
    }
    switch (s_.phase) {
      case Phase::TurnStart:
        if (a.kind != ActionKind::BeginTurn) throw illegal(a, "turn has not begun");
        begin_turn();
        return;
      case Phase::Action:
        if (s_.turn_owner == Side::Corp)
          corp_action(a);
        else
          runner_action(a);
        return;
      case Phase::Run: run_action(a); return;
      case Phase::Terminal: break;
    }
    throw RulesError(RuleViolation::TerminalState, "game is over");
  }

  // Pieces also used by the standalone operations.
  void begin_turn() {
    emit(EventKind::TurnBegan, s_.turn_owner);
    if (s_.turn_owner == Side::Corp) {
      if (s_.corp.rnd.empty()) {
        finish(TerminalStatus::CorpDecksOut);
        return;
      }
      const CardId top = s_.corp.rnd.front();
      s_.corp.rnd.erase(s_.corp.rnd.begin());
      s_.corp.hq.push_back(top);
      emit(EventKind::CardDrawn, Side::Corp, 1, std::string(card(top).name));
      s_.corp.clicks = kCorpClicksPerTurn;
    } else {
      s_.runner.clicks = kRunnerClicksPerTurn;
      auto& rig = s_.runner.rig;
      if (rig.has(CardId::Pheromones)) rig.pheromones_credits = rig.pheromones_counters;
    }
    s_.phase = Phase::Action;
  }

  void fire_one(int sub, std::optional<CardId> trash_target) {
    const IcePiece& ice = current_ice();
    const SubEffect effect = subroutine_effect(ice, sub);
    emit(EventKind::SubroutineFired, Side::Corp, sub, std::string(card(ice.id).name));
    switch (effect) {
      case SubEffect::CorpGainsTwo:
        s_.corp.credits += 2;
        emit(EventKind::CreditsGained, Side::Corp, 2);
        break;
      case SubEffect::RunnerLosesClick:
        if (s_.runner.clicks > 0) {
          --s_.runner.clicks;
          emit(EventKind::ClickSpent, Side::Runner, 1, "lost to subroutine");
        }
        break;
      case SubEffect::TrashProgram:
        if (trash_target) trash_program(*trash_target);
        break;
      case SubEffect::EndTheRun: end_run(false); break;
    }
  }

  void pass_ice() {
    auto& run = *s_.run;
    emit(EventKind::IcePassed, Side::Runner, run.ice_index);
    ++run.ice_index;
    if (run.ice_index < static_cast<int>(target().ice.size()))
      run.step = RunStep::Approach;
    else
      passed_all_ice();
  }

  void start_breach() {
    auto& run = *s_.run;
    const Server& srv = target();
    run.strongbox_clicks = static_cast<int>(std::count_if(
        srv.root.begin(), srv.root.end(), [](const RootCard& r) { return r.id == CardId::Strongbox && r.rezzed; }));
    run.pending.clear();
    for (const auto& r : srv.root) run.pending.push_back({r.id, AccessSource::Root});
    if (run.target == ServerId::rnd() && !s_.corp.rnd.empty())
      run.pending.push_back({s_.corp.rnd.front(), AccessSource::RndTop});
    if (run.target == ServerId::archives())
      for (const auto& a : s_.corp.archives) run.pending.push_back({a.id, AccessSource::Archives});
    run.step = RunStep::Breach;
    if (run.target == ServerId::hq() && !s_.corp.hq.empty()) {
      auto options = distinct_sorted(s_.corp.hq);
      if (options.size() > 1) {
        // random access: the Corp picks the card, worst case for the Runner
        s_.choice = PendingChoice{ChoiceKind::HqAccess, std::move(options), 1};
        return;
      }
      run.pending.push_back({options.front(), AccessSource::HqHand});
    }
    settle_breach();
  }

  void mark_successful() {
    auto& run = *s_.run;
    run.successful = true;
    emit(EventKind::RunSuccessful, Side::Runner, 0, to_string(run.target));
    auto& rig = s_.runner.rig;
    if (run.target == ServerId::hq() && rig.has(CardId::Pheromones)) {
      // recurring credits are not refreshed mid-turn
      ++rig.pheromones_counters;
      emit(EventKind::VirusCounterPlaced, Side::Runner, 1, "Pheromones");
    }
  }

  void rearrange(const RearrangementPlan& plan) {
    if (auto err = validate_plan(s_, plan)) throw RulesError(RuleViolation::InvalidPlan, *err);
    const RearrangeSource source = *s_.rearrange;
    place_ice(s_, plan);
    s_.rearrange.reset();
    emit(EventKind::IceRearranged, source == RearrangeSource::Escher ? Side::Runner : Side::Corp);
    if (source == RearrangeSource::Escher) end_run(true);
  }

 private:
  GameState& s_;
  std::vector<Event>* log_;

  void emit(EventKind kind, Side side, int amount = 0, std::string detail = {}) {
    if (log_) log_->push_back({kind, side, amount, std::move(detail)});
  }

  RulesError illegal(const Action& a, const std::string& why) const {
    return RulesError(RuleViolation::IllegalAction, describe(a) + ": " + why);
  }

  Server& target() { return s_.server(s_.run->target); }
  const IcePiece& current_ice() { return target().ice.at(static_cast<std::size_t>(s_.run->ice_index)); }

  void finish(TerminalStatus status) {
    s_.phase = Phase::Terminal;
    s_.status = status;
    s_.run.reset();
    s_.choice.reset();
    s_.rearrange.reset();
    emit(EventKind::GameOver, winner(status).value_or(Side::Runner), 0, std::string(to_string(status)));
  }

  bool check_points() {
    if (agenda_points(s_.runner.score_area) >= kPointsToWin) {
      finish(TerminalStatus::RunnerWin);
      return true;
    }
    if (agenda_points(s_.corp.score_area) >= kPointsToWin) {
      finish(TerminalStatus::CorpWin);
      return true;
    }
    return false;
  }

  void spend_click(Side side) {
    int& clicks = side == Side::Corp ? s_.corp.clicks : s_.runner.clicks;
    if (clicks < 1) throw RulesError(RuleViolation::Unaffordable, "no clicks left");
    --clicks;
    emit(EventKind::ClickSpent, side, 1);
  }

  void corp_pay(int amount) {
    if (s_.corp.credits < amount) throw RulesError(RuleViolation::Unaffordable, "corp cannot afford");
    s_.corp.credits -= amount;
    if (amount) emit(EventKind::CreditsSpent, Side::Corp, amount);
  }

  void runner_pay(const Payment& p) {
    auto& r = s_.runner;
    if (p.pool < 0 || p.pheromones < 0) throw RulesError(RuleViolation::Unaffordable, "negative payment");
    if (p.pheromones > 0 && !pheromones_usable(s_))
      throw RulesError(RuleViolation::IllegalAction, "pheromones credits only pay during runs on HQ");
    if (p.pool > r.credits || p.pheromones > r.rig.pheromones_credits)
      throw RulesError(RuleViolation::Unaffordable, "runner cannot afford");
    r.credits -= p.pool;
    r.rig.pheromones_credits -= p.pheromones;
    if (p.pool) emit(EventKind::CreditsSpent, Side::Runner, p.pool);
    if (p.pheromones) emit(EventKind::PheromonesSpent, Side::Runner, p.pheromones);
  }

  void trash_program(CardId id) {
    auto& rig = s_.runner.rig;
    if (!remove_one(rig.programs, id)) throw RulesError(RuleViolation::IllegalAction, "program not installed");
    s_.runner.heap.push_back(id);
    if (id == CardId::Pheromones) {
      rig.pheromones_counters = 0;
      rig.pheromones_credits = 0;
    }
    emit(EventKind::CardTrashed, Side::Runner, 0, std::string(card(id).name));
  }

  void to_archives(CardId id, bool faceup) {
    s_.corp.archives.push_back({id, faceup});
    emit(EventKind::CardTrashed, Side::Corp, 0, std::string(card(id).name));
  }

  // --- turn structure -----------------------------------------------------

  void end_turn() {
    emit(EventKind::TurnEnded, s_.turn_owner);
    if (s_.turn_owner == Side::Corp) {
      while (static_cast<int>(s_.corp.hq.size()) > kMaxHandSize) {
        to_archives(s_.corp.hq.back(), true);
        s_.corp.hq.pop_back();
      }
      s_.corp.clicks = 0;
    } else {
      while (static_cast<int>(s_.runner.grip.size()) > kMaxHandSize) {
        s_.runner.heap.push_back(s_.runner.grip.back());
        s_.runner.grip.pop_back();
      }
      s_.runner.clicks = 0;
    }
    s_.turn_owner = opponent(s_.turn_owner);
    s_.phase = Phase::TurnStart;
    ++s_.turn_number;
  }

  void corp_action(const Action& a) {
    auto& c = s_.corp;
    switch (a.kind) {
      case ActionKind::GainCredit:
        spend_click(Side::Corp);
        c.credits += 1;
        emit(EventKind::CreditsGained, Side::Corp, 1);
        return;
      case ActionKind::DrawCard: {
        if (c.rnd.empty()) throw illegal(a, "R&D is empty");
        spend_click(Side::Corp);
        const CardId top = c.rnd.front();
        c.rnd.erase(c.rnd.begin());
        c.hq.push_back(top);
        emit(EventKind::CardDrawn, Side::Corp, 1, std::string(card(top).name));
        return;
      }
      case ActionKind::PlayCard: {
        if (a.card != CardId::HedgeFund) throw illegal(a, "card has no play effect");
        if (std::find(c.hq.begin(), c.hq.end(), a.card) == c.hq.end()) throw illegal(a, "card not in HQ");
        spend_click(Side::Corp);
        corp_pay(card(a.card).cost);
        remove_one(c.hq, a.card);
        emit(EventKind::CardPlayed, Side::Corp, 0, std::string(card(a.card).name));
        c.credits += 9;
        emit(EventKind::CreditsGained, Side::Corp, 9);
        c.archives.push_back({a.card, true});
        return;
      }
      case ActionKind::InstallCard: install(a); return;
      case ActionKind::Advance: {
        Server& srv = s_.server(a.server);
        spend_click(Side::Corp);
        corp_pay(1);
        if (a.on_ice) {
          auto& ice = srv.ice.at(static_cast<std::size_t>(a.index));
          if (ice.id != CardId::IceWall) throw illegal(a, "ice cannot be advanced");
          ++ice.advancement;
        } else {
          auto& rc = srv.root.at(static_cast<std::size_t>(a.index));
          if (!is_agenda(rc.id)) throw illegal(a, "card cannot be advanced");
          ++rc.advancement;
        }
        emit(EventKind::Advanced, Side::Corp, 1, to_string(a.server));
        return;
      }
      case ActionKind::Score: {
        Server& srv = s_.server(a.server);
        const RootCard rc = srv.root.at(static_cast<std::size_t>(a.index));
        if (!is_agenda(rc.id) || rc.advancement < advancement_requirement(s_, rc.id))
          throw illegal(a, "agenda not fully advanced");
        srv.root.erase(srv.root.begin() + a.index);
        c.score_area.push_back(rc.id);
        emit(EventKind::AgendaScored, Side::Corp, card(rc.id).agenda_points, std::string(card(rc.id).name));
        if (check_points()) return;
        if (rc.id == CardId::MandatorySeedReplacement) s_.rearrange = RearrangeSource::MandatorySeedReplacement;
        return;
      }
      case ActionKind::EndTurn:
        if (c.clicks != 0) throw illegal(a, "clicks remain");
        end_turn();
        return;
      default: throw illegal(a, "not a Corp action");
    }
  }

  void install(const Action& a) {
    auto& c = s_.corp;
    const CardDef& def = card(a.card);
    if (def.kind != CardKind::Agenda && def.kind != CardKind::Asset && def.kind != CardKind::Upgrade)
      throw illegal(a, "only agendas, assets and upgrades can be installed");
    if (std::find(c.hq.begin(), c.hq.end(), a.card) == c.hq.end()) throw illegal(a, "card not in HQ");
    if (!a.server.is_remote() && def.kind != CardKind::Upgrade) throw illegal(a, "central roots take upgrades only");
    if (!s_.find_server(a.server)) {
      const int next = c.servers.back().id.is_remote() ? c.servers.back().id.remote_number() + 1 : 1;
      if (a.server != ServerId::remote(next)) throw illegal(a, "new remotes are numbered consecutively");
      c.servers.push_back(Server{a.server, {}, {}});
    }
    spend_click(Side::Corp);
    remove_one(c.hq, a.card);
    Server& srv = s_.server(a.server);
    if (def.kind != CardKind::Upgrade) {
      // one agenda or asset per remote: the previous one is trashed
      auto old = std::find_if(srv.root.begin(), srv.root.end(), [](const RootCard& r) {
        const auto k = card(r.id).kind;
        return k == CardKind::Agenda || k == CardKind::Asset;
      });
      if (old != srv.root.end()) {
        const RootCard gone = *old;
        srv.root.erase(old);
        to_archives(gone.id, gone.rezzed);
      }
    }
    srv.root.push_back(RootCard{a.card, false, 0});
    emit(EventKind::CardInstalled, Side::Corp, 0, std::string(def.name) + " in " + to_string(a.server));
  }

  void runner_action(const Action& a) {
    auto& r = s_.runner;
    switch (a.kind) {
      case ActionKind::GainCredit:
        spend_click(Side::Runner);
        r.credits += 1;
        emit(EventKind::CreditsGained, Side::Runner, 1);
        return;
      case ActionKind::DrawCard: {
        if (r.stack.empty()) throw illegal(a, "the stack is empty");
        spend_click(Side::Runner);
        r.grip.push_back(r.stack.front());
        r.stack.erase(r.stack.begin());
        emit(EventKind::CardDrawn, Side::Runner, 1);
        return;
      }
      case ActionKind::PlayCard: {
        if (a.card != CardId::Escher) throw illegal(a, "card has no play effect");
        if (std::find(r.grip.begin(), r.grip.end(), a.card) == r.grip.end()) throw illegal(a, "card not in grip");
        spend_click(Side::Runner);
        runner_pay({card(a.card).cost, 0});
        remove_one(r.grip, a.card);
        r.heap.push_back(a.card);
        emit(EventKind::CardPlayed, Side::Runner, 0, std::string(card(a.card).name));
        start_run(ServerId::hq(), true);
        return;
      }
      case ActionKind::RemoveTag:
        if (r.tags < 1) throw illegal(a, "no tags");
        spend_click(Side::Runner);
        runner_pay({2, 0});
        --r.tags;
        emit(EventKind::TagRemoved, Side::Runner, 1);
        return;
      case ActionKind::InitiateRun:
        if (!s_.find_server(a.server)) throw illegal(a, "no such server");
        spend_click(Side::Runner);
        start_run(a.server, false);
        return;
      case ActionKind::EndTurn:
        if (r.clicks != 0) throw illegal(a, "clicks remain");
        end_turn();
        return;
      default: throw illegal(a, "not a Runner action");
    }
  }

  // --- runs ---------------------------------------------------------------

  void start_run(ServerId server, bool via_escher) {
    s_.phase = Phase::Run;
    s_.run = RunContext{};
    s_.run->target = server;
    s_.run->via_escher = via_escher;
    emit(EventKind::RunStarted, Side::Runner, 0, to_string(server));
    // the first approach offers no jack out
    if (target().ice.empty())
      passed_all_ice();
    else
      enter_ice();
  }

  void enter_ice() {
    auto& run = *s_.run;
    const IcePiece& ice = current_ice();
    if (!ice.rezzed) {
      pass_ice();
      return;
    }
    run.step = RunStep::Encounter;
    run.encounter = EncounterState{{}, card(CardId::Aurora).strength, 0};
    emit(EventKind::IceEncountered, Side::Runner, run.ice_index, std::string(card(ice.id).name));
  }

  void passed_all_ice() {
    const Server& srv = target();
    const bool lynn = std::any_of(srv.root.begin(), srv.root.end(),
                                  [](const RootCard& r) { return r.id == CardId::KPLynn && r.rezzed; });
    if (lynn) {
      s_.run->step = RunStep::KPLynn;
      return;
    }
    approach_point();
  }

  void approach_point() {
    if (!target().ice.empty()) {
      s_.run->step = RunStep::Approach;
      return;
    }
    approach_server();
  }

  void approach_server() {
    mark_successful();
    if (s_.run->via_escher) {
      s_.run->step = RunStep::Rearrange;
      s_.rearrange = RearrangeSource::Escher;
      return;
    }
    start_breach();
  }

  void settle_breach() {
    auto& run = *s_.run;
    std::erase_if(run.pending, [](const PendingAccess& p) { return !access_needs_decision(p); });
    run.current.reset();
    if (run.pending.empty()) {
      end_run(true);
      return;
    }
    const bool all_same = std::all_of(run.pending.begin(), run.pending.end(),
                                      [&](const PendingAccess& p) { return p == run.pending.front(); });
    if (all_same) {
      run.current = run.pending.front();
      run.pending.erase(run.pending.begin());
      run.step = RunStep::AccessDecision;
    } else {
      run.step = RunStep::Breach;
    }
  }

  void end_run(bool successful) {
    emit(EventKind::RunEnded, Side::Runner, successful ? 1 : 0, successful ? "successful" : "unsuccessful");
    s_.run.reset();
    s_.phase = Phase::Action;
    if (!successful || s_.runner.tags < 1) return;
    int teams = 0;
    for (const auto& srv : s_.corp.servers)
      for (const auto& rc : srv.root)
        if (rc.id == CardId::DedicatedResponseTeam && rc.rezzed) ++teams;
    if (teams > 0) deal_meat_damage(2 * teams);
  }

  void deal_meat_damage(int amount) {
    auto& grip = s_.runner.grip;
    emit(EventKind::MeatDamage, Side::Corp, amount);
    if (amount > static_cast<int>(grip.size())) {
      for (CardId id : grip) s_.runner.heap.push_back(id);
      grip.clear();
      finish(TerminalStatus::RunnerFlatline);
      return;
    }
    discard_damage(amount);
  }

  void discard_damage(int remaining) {
    auto& grip = s_.runner.grip;
    while (remaining > 0) {
      auto options = distinct_sorted(grip);
      if (options.size() > 1 && remaining < static_cast<int>(grip.size())) {
        s_.choice = PendingChoice{ChoiceKind::MeatDamage, std::move(options), remaining};
        return;
      }
      s_.runner.heap.push_back(grip.back());
      grip.pop_back();
      --remaining;
    }
  }

  void fire_remaining() {
    auto& run = *s_.run;
    const IcePiece ice = current_ice();
    const int subs = subroutine_count(ice);
    while (run.encounter.next_sub < subs) {
      const int i = run.encounter.next_sub++;
      if (run.encounter.is_broken(i)) continue;
      if (subroutine_effect(ice, i) == SubEffect::TrashProgram) {
        auto programs = distinct_sorted(s_.runner.rig.programs);
        if (programs.size() > 1) {
          emit(EventKind::SubroutineFired, Side::Corp, i, std::string(card(ice.id).name));
          run.step = RunStep::Firing;
          s_.choice = PendingChoice{ChoiceKind::TrashProgram, std::move(programs), 1};
          return;
        }
        fire_one(i, programs.empty() ? std::nullopt : std::optional<CardId>(programs.front()));
        continue;
      }
      fire_one(i, std::nullopt);
      if (!s_.run) return;  // the run ended
    }
    pass_ice();
  }

  void resolve_choice(int index) {
    PendingChoice choice = *s_.choice;
    if (index < 0 || index >= static_cast<int>(choice.options.size()))
      throw RulesError(RuleViolation::IllegalAction, "choice option out of range");
    const CardId picked = choice.options[static_cast<std::size_t>(index)];
    s_.choice.reset();
    switch (choice.kind) {
      case ChoiceKind::TrashProgram:
        trash_program(picked);
        s_.run->step = RunStep::Encounter;
        fire_remaining();
        return;
      case ChoiceKind::HqAccess:
        s_.run->pending.push_back({picked, AccessSource::HqHand});
        settle_breach();
        return;
      case ChoiceKind::MeatDamage:
        remove_one(s_.runner.grip, picked);
        s_.runner.heap.push_back(picked);
        discard_damage(choice.remaining - 1);
        return;
    }
  }

  void run_action(const Action& a) {
    auto& run = *s_.run;
    switch (run.step) {
      case RunStep::Encounter: encounter_action(a); return;
      case RunStep::Approach:
        if (a.kind == ActionKind::JackOut) {
          end_run(false);
        } else if (a.kind == ActionKind::ContinueRun) {
          if (run.ice_index < static_cast<int>(target().ice.size()))
            enter_ice();
          else
            approach_server();
        } else {
          throw illegal(a, "approaching: continue or jack out");
        }
        return;
      case RunStep::KPLynn:
        if (a.kind != ActionKind::KPLynnChoice) throw illegal(a, "K. P. Lynn demands a choice");
        if (a.take_tag) {
          ++s_.runner.tags;
          emit(EventKind::TagTaken, Side::Runner, 1, "K. P. Lynn");
          approach_point();
        } else {
          end_run(false);
        }
        return;
      case RunStep::Breach: {
        if (a.kind != ActionKind::AccessCard) throw illegal(a, "choose a card to access");
        const PendingAccess want{a.card, a.source};
        auto it = std::find(run.pending.begin(), run.pending.end(), want);
        if (it == run.pending.end()) throw illegal(a, "card is not pending access");
        run.pending.erase(it);
        run.current = want;
        run.step = RunStep::AccessDecision;
        return;
      }
      case RunStep::AccessDecision: access_decision(a); return;
      case RunStep::Firing:
      case RunStep::Rearrange: break;
    }
    throw illegal(a, "no run action expected");
  }

  void encounter_action(const Action& a) {
    auto& run = *s_.run;
    const IcePiece ice = current_ice();
    const auto& rig = s_.runner.rig;
    switch (a.kind) {
      case ActionKind::BoostAurora:
        if (!rig.has(CardId::Aurora)) throw illegal(a, "Aurora not installed");
        if (a.payment.total() != kAuroraAbilityCost) throw illegal(a, "boost costs 2");
        runner_pay(a.payment);
        run.encounter.aurora_strength += kAuroraBoost;
        emit(EventKind::AuroraBoosted, Side::Runner, kAuroraBoost);
        return;
      case ActionKind::BreakSubroutine: {
        if (!rig.has(CardId::Aurora)) throw illegal(a, "Aurora not installed");
        if (!ice_is_barrier(ice)) throw illegal(a, "Aurora breaks barrier subroutines only");
        if (run.encounter.aurora_strength < ice_strength(ice)) throw illegal(a, "Aurora strength too low");
        if (a.index < 0 || a.index >= subroutine_count(ice) || run.encounter.is_broken(a.index))
          throw illegal(a, "no such unbroken subroutine");
        if (a.payment.total() != kAuroraAbilityCost) throw illegal(a, "break costs 2");
        runner_pay(a.payment);
        run.encounter.mark_broken(a.index);
        emit(EventKind::SubroutineBroken, Side::Runner, a.index, std::string(card(ice.id).name));
        return;
      }
      case ActionKind::UseGrapplingHook: {
        if (!rig.has(CardId::GrapplingHook)) throw illegal(a, "Grappling Hook not installed");
        const int subs = subroutine_count(ice);
        if (a.index < 0 || a.index >= subs) throw illegal(a, "no such subroutine");
        trash_program(CardId::GrapplingHook);
        for (int i = 0; i < subs; ++i)
          if (i != a.index && !run.encounter.is_broken(i)) {
            run.encounter.mark_broken(i);
            emit(EventKind::SubroutineBroken, Side::Runner, i, "Grappling Hook");
          }
        return;
      }
      case ActionKind::ContinueRun:
        run.encounter.next_sub = 0;
        fire_remaining();
        return;
      default: throw illegal(a, "not an encounter action");
    }
  }

  void remove_accessed(const PendingAccess& p) {
    auto& c = s_.corp;
    switch (p.source) {
      case AccessSource::HqHand: remove_one(c.hq, p.id); return;
      case AccessSource::RndTop: c.rnd.erase(c.rnd.begin()); return;
      case AccessSource::Archives: {
        auto it = std::find_if(c.archives.begin(), c.archives.end(), [&](const ArchivedCard& x) { return x.id == p.id; });
        c.archives.erase(it);
        return;
      }
      case AccessSource::Root: {
        auto& root = target().root;
        auto it = std::find_if(root.begin(), root.end(), [&](const RootCard& r) { return r.id == p.id; });
        root.erase(it);
        return;
      }
    }
  }

  void access_decision(const Action& a) {
    auto& run = *s_.run;
    const PendingAccess acc = *run.current;
    switch (a.kind) {
      case ActionKind::Steal: {
        if (!is_agenda(acc.id)) throw illegal(a, "only agendas can be stolen");
        if (s_.runner.clicks < run.strongbox_clicks) throw RulesError(RuleViolation::Unaffordable, "Strongbox clicks");
        for (int i = 0; i < run.strongbox_clicks; ++i) {
          --s_.runner.clicks;
          emit(EventKind::ClickSpent, Side::Runner, 1, "Strongbox");
        }
        remove_accessed(acc);
        s_.runner.score_area.push_back(acc.id);
        emit(EventKind::AgendaStolen, Side::Runner, card(acc.id).agenda_points, std::string(card(acc.id).name));
        if (check_points()) return;  // the win comes before run-end triggers
        break;
      }
      case ActionKind::TrashAccessed: {
        const int cost = card(acc.id).trash_cost;
        if (cost <= 0 || acc.source == AccessSource::Archives) throw illegal(a, "card cannot be trashed");
        if (a.payment.total() != cost) throw illegal(a, "payment does not match trash cost");
        runner_pay(a.payment);
        remove_accessed(acc);
        to_archives(acc.id, true);
        break;
      }
      case ActionKind::DeclineAccess: break;
      default: throw illegal(a, "decide about the accessed card");
    }
    settle_breach();
  }

};

void corp_actions(const GameState& s, std::vector<Action>& out) {
  const auto& c = s.corp;
  for (const auto& srv : c.servers)
    for (std::size_t i = 0; i < srv.root.size(); ++i) {
      const auto& rc = srv.root[i];
      if (is_agenda(rc.id) && rc.advancement >= advancement_requirement(s, rc.id))
        out.push_back(Action::score(srv.id, static_cast<int>(i)));
    }
  if (c.clicks < 1) {
    out.push_back(Action::end_turn());
    return;
  }
  out.push_back(Action::gain_credit());
  if (!c.rnd.empty()) out.push_back(Action::draw_card());
  const auto hand = distinct_sorted(c.hq);
  for (CardId id : hand)
    if (id == CardId::HedgeFund && c.credits >= card(id).cost) out.push_back(Action::play(id));
  const int next_remote = c.servers.back().id.is_remote() ? c.servers.back().id.remote_number() + 1 : 1;
  for (CardId id : hand) {
    const auto kind = card(id).kind;
    if (kind != CardKind::Agenda && kind != CardKind::Asset && kind != CardKind::Upgrade) continue;
    for (const auto& srv : c.servers)
      if (srv.id.is_remote() || kind == CardKind::Upgrade) out.push_back(Action::install(id, srv.id));
    out.push_back(Action::install(id, ServerId::remote(next_remote)));
  }
  if (c.credits >= 1) {
    for (const auto& srv : c.servers) {
      for (std::size_t i = 0; i < srv.root.size(); ++i)
        if (is_agenda(srv.root[i].id)) out.push_back(Action::advance_root(srv.id, static_cast<int>(i)));
      for (std::size_t i = 0; i < srv.ice.size(); ++i)
        if (srv.ice[i].id == CardId::IceWall) out.push_back(Action::advance_ice(srv.id, static_cast<int>(i)));
    }
  }
}

void runner_actions(const GameState& s, std::vector<Action>& out) {
  const auto& r = s.runner;
  if (r.clicks < 1) {
    out.push_back(Action::end_turn());
    return;
  }
  out.push_back(Action::gain_credit());
  if (!r.stack.empty()) out.push_back(Action::draw_card());
  if (std::find(r.grip.begin(), r.grip.end(), CardId::Escher) != r.grip.end() && r.credits >= card(CardId::Escher).cost)
    out.push_back(Action::play(CardId::Escher));
  if (r.tags > 0 && r.credits >= 2) out.push_back(Action::remove_tag());
  for (const auto& srv : s.corp.servers) out.push_back(Action::run(srv.id));
}

void encounter_actions(const GameState& s, std::vector<Action>& out) {
  const auto& run = *s.run;
  const IcePiece& ice = s.server(run.target).ice.at(static_cast<std::size_t>(run.ice_index));
  const auto& rig = s.runner.rig;
  const int subs = subroutine_count(ice);
  const auto unbroken = [&](int i) { return !run.encounter.is_broken(i); };
  if (rig.has(CardId::Aurora)) {
    const auto pays = payment_options(s, kAuroraAbilityCost);
    for (const auto& p : pays) out.push_back(Action::boost(p));
    if (ice_is_barrier(ice) && run.encounter.aurora_strength >= ice_strength(ice)) {
      // identical subroutines are interchangeable: offer the first of each
      std::set<SubEffect> seen;
      for (int i = 0; i < subs; ++i) {
        if (!unbroken(i) || !seen.insert(subroutine_effect(ice, i)).second) continue;
        for (const auto& p : pays) out.push_back(Action::break_sub(i, p));
      }
    }
  }
  if (rig.has(CardId::GrapplingHook)) {
    int open = 0;
    for (int i = 0; i < subs; ++i) open += unbroken(i) ? 1 : 0;
    if (open >= 2)
      for (int i = 0; i < subs; ++i)
        if (unbroken(i)) out.push_back(Action::hook(i));
  }
  out.push_back(Action::continue_run());
}

void run_actions(const GameState& s, std::vector<Action>& out) {
  const auto& run = *s.run;
  switch (run.step) {
    case RunStep::Encounter: encounter_actions(s, out); return;
    case RunStep::Approach:
      out.push_back(Action::continue_run());
      out.push_back(Action::jack_out());
      return;
    case RunStep::KPLynn:
      out.push_back(Action::kp_lynn(true));
      out.push_back(Action::kp_lynn(false));
      return;
    case RunStep::Breach: {
      std::vector<PendingAccess> distinct = run.pending;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (const auto& p : distinct) out.push_back(Action::access(p.id, p.source));
      return;
    }
    case RunStep::AccessDecision: {
      const auto& acc = *run.current;
      if (is_agenda(acc.id)) {
        if (s.runner.clicks >= run.strongbox_clicks) out.push_back(Action::steal());
      } else if (acc.source != AccessSource::Archives && card(acc.id).trash_cost > 0) {
        for (const auto& p : payment_options(s, card(acc.id).trash_cost)) out.push_back(Action::trash_accessed(p));
      }
      out.push_back(Action::decline());
      return;
    }
    case RunStep::Firing:
    case RunStep::Rearrange: return;
  }
}

}  // namespace

std::vector<Payment> payment_options(const GameState& s, int amount) {
  std::vector<Payment> out;
  const int available_ph = pheromones_usable(s) ? s.runner.rig.pheromones_credits : 0;
  for (int ph = std::min(amount, available_ph); ph >= 0; --ph) {
    const int pool = amount - ph;
    if (pool <= s.runner.credits) out.push_back({pool, ph});
  }
  return out;
}

std::vector<Action> legal_actions(const GameState& s) {
  if (s.terminal()) throw RulesError(RuleViolation::TerminalState, "game is over");
  std::vector<Action> out;
  if (s.choice) {
    for (std::size_t i = 0; i < s.choice->options.size(); ++i) out.push_back(Action::resolve(static_cast<int>(i)));
    return out;
  }
  if (s.rearrange) {
    for (auto& plan : enumerate_rearrangement_plans(s)) out.push_back(Action::rearrange(std::move(plan)));
    return out;
  }
  switch (s.phase) {
    case Phase::TurnStart: out.push_back(Action::begin_turn()); break;
    case Phase::Action:
      if (s.turn_owner == Side::Corp)
        corp_actions(s, out);
      else
        runner_actions(s, out);
      break;
    case Phase::Run: run_actions(s, out); break;
    case Phase::Terminal: break;
  }
  return out;
}

void apply_in_place(GameState& state, const Action& action, std::vector<Event>* events) {
  Transition(state, events).apply(action);
}

TransitionOutcome apply(const GameState& state, const Action& action) {
  if (state.terminal()) throw RulesError(RuleViolation::TerminalState, "game is over");
  if (action.kind == ActionKind::Rearrange) {
    if (!state.rearrange) throw RulesError(RuleViolation::IllegalAction, "no rearrangement pending");
    if (auto err = validate_plan(state, action.plan)) throw RulesError(RuleViolation::InvalidPlan, *err);
  } else {
    const auto legal = legal_actions(state);
    if (std::find(legal.begin(), legal.end(), action) == legal.end())
      throw RulesError(RuleViolation::IllegalAction, describe(action) + " is not legal here");
  }
  TransitionOutcome out{state, {}};
  apply_in_place(out.next, action, &out.events);
  return out;
}

TransitionOutcome resolve_encounter_step(const GameState& state, const Action& action) {
  if (state.phase != Phase::Run || !state.run || state.run->step != RunStep::Encounter || state.choice)
    throw RulesError(RuleViolation::WrongPhase, "not mid-encounter");
  switch (action.kind) {
    case ActionKind::BoostAurora:
    case ActionKind::BreakSubroutine:
    case ActionKind::UseGrapplingHook:
    case ActionKind::ContinueRun: break;
    default: throw RulesError(RuleViolation::IllegalAction, "not an encounter step");
  }
  TransitionOutcome out{state, {}};
  apply_in_place(out.next, action, &out.events);
  return out;
}

std::vector<TransitionOutcome> fire_subroutine(const GameState& state, int sub_index) {
  if (state.phase != Phase::Run || !state.run || state.run->step != RunStep::Encounter)
    throw RulesError(RuleViolation::WrongPhase, "not mid-encounter");
  const IcePiece& ice = state.server(state.run->target).ice.at(static_cast<std::size_t>(state.run->ice_index));
  std::vector<std::optional<CardId>> targets{std::nullopt};
  if (subroutine_effect(ice, sub_index) == SubEffect::TrashProgram && !state.runner.rig.programs.empty()) {
    targets.clear();
    for (CardId id : distinct_sorted(state.runner.rig.programs)) targets.emplace_back(id);
  }
  std::vector<TransitionOutcome> out;
  for (const auto& t : targets) {
    TransitionOutcome o{state, {}};
    Transition(o.next, &o.events).fire_one(sub_index, t);
    out.push_back(std::move(o));
  }
  return out;
}

TransitionOutcome pass_ice_and_approach(const GameState& state) {
  if (state.phase != Phase::Run || !state.run || state.run->step != RunStep::Encounter)
    throw RulesError(RuleViolation::WrongPhase, "no encounter to pass");
  TransitionOutcome out{state, {}};
  Transition(out.next, &out.events).pass_ice();
  return out;
}

std::vector<TransitionOutcome> breach_server(const GameState& state) {
  if (state.phase != Phase::Run || !state.run || !state.run->successful)
    throw RulesError(RuleViolation::WrongPhase, "breach needs a successful run");
  TransitionOutcome base{state, {}};
  Transition(base.next, &base.events).start_breach();
  if (!base.next.choice) return {std::move(base)};
  std::vector<TransitionOutcome> out;
  for (std::size_t i = 0; i < base.next.choice->options.size(); ++i) {
    TransitionOutcome o = base;
    apply_in_place(o.next, Action::resolve(static_cast<int>(i)), &o.events);
    out.push_back(std::move(o));
  }
  return out;
}

TransitionOutcome rearrange_ice(const GameState& state, const RearrangementPlan& plan, RearrangeSource source) {
  if (!state.rearrange || *state.rearrange != source)
    throw RulesError(RuleViolation::WrongPhase, "no matching rearrangement pending");
  TransitionOutcome out{state, {}};
  Transition(out.next, &out.events).rearrange(plan);
  return out;
}

TransitionOutcome turn_start(const GameState& state) {
  if (state.phase != Phase::TurnStart) throw RulesError(RuleViolation::WrongPhase, "not at turn start");
  TransitionOutcome out{state, {}};
  Transition(out.next, &out.events).begin_turn();
  return out;
}

TransitionOutcome successful_run_bookkeeping(const GameState& state) {
  if (state.phase != Phase::Run || !state.run) throw RulesError(RuleViolation::WrongPhase, "no run in progress");
  TransitionOutcome out{state, {}};
  Transition(out.next, &out.events).mark_successful();
  return out;
}

std::optional<std::string> validate_plan(const GameState& state, const RearrangementPlan& plan) {
  std::size_t pieces = 0;
  for (const auto& srv : state.corp.servers) pieces += srv.ice.size();
  if (plan.assignment.size() != pieces)
    return "plan covers " + std::to_string(plan.assignment.size()) + " pieces, " + std::to_string(pieces) + " in play";
  for (const auto& srv : state.corp.servers) {
    std::vector<int> positions;
    for (const auto& slot : plan.assignment)
      if (slot.server == srv.id) positions.push_back(slot.position);
    if (positions.size() != srv.ice.size())
      return "server " + to_string(srv.id) + " would hold " + std::to_string(positions.size()) + " ice instead of " +
             std::to_string(srv.ice.size());
    std::sort(positions.begin(), positions.end());
    for (std::size_t i = 0; i < positions.size(); ++i)
      if (positions[i] != static_cast<int>(i)) return "positions on " + to_string(srv.id) + " are not a permutation";
  }
  for (const auto& slot : plan.assignment)
    if (!state.find_server(slot.server)) return "plan names missing server " + to_string(slot.server);
  return std::nullopt;
}

RearrangementPlan identity_plan(const GameState& state) {
  RearrangementPlan plan;
  for (const auto& srv : state.corp.servers)
    for (std::size_t i = 0; i < srv.ice.size(); ++i) plan.assignment.push_back({srv.id, static_cast<int>(i)});
  return plan;
}

void settle_terminal(GameState& state) {
  if (state.terminal()) return;
  TerminalStatus status = TerminalStatus::None;
  if (agenda_points(state.runner.score_area) >= kPointsToWin)
    status = TerminalStatus::RunnerWin;
  else if (agenda_points(state.corp.score_area) >= kPointsToWin)
    status = TerminalStatus::CorpWin;
  if (status == TerminalStatus::None) return;
  state.phase = Phase::Terminal;
  state.status = status;
  state.run.reset();
  state.choice.reset();
  state.rearrange.reset();
}

}  // namespace netmate
