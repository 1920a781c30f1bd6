#include "netmate/serialize.hpp"

#include <array>
#include <string_view>

#include "json.hpp"

namespace netmate {

namespace {

using Json = nlohmann::ordered_json;

template <typename E, std::size_t N>
std::string_view name_of(E value, const std::array<std::string_view, N>& names) {
  const auto i = static_cast<std::size_t>(value);
  if (i >= N) throw SerializationError("enum value out of range");
  return names[i];
}

template <typename E, std::size_t N>
E value_of(const Json& j, const std::array<std::string_view, N>& names, std::string_view what) {
  const auto text = j.get<std::string>();
  for (std::size_t i = 0; i < N; ++i)
    if (names[i] == text) return static_cast<E>(i);
  throw SerializationError("unknown " + std::string(what) + " '" + text + "'");
}

constexpr std::array<std::string_view, 2> kSides{"corp", "runner"};
constexpr std::array<std::string_view, 4> kPhases{"turn_start", "action", "run", "terminal"};
constexpr std::array<std::string_view, 5> kStatuses{"none", "runner_win", "corp_win", "runner_flatline",
                                                    "corp_decks_out"};
constexpr std::array<std::string_view, 7> kSteps{"encounter", "firing", "approach", "kp_lynn",
                                                 "breach", "access_decision", "rearrange"};
constexpr std::array<std::string_view, 4> kSources{"hq_hand", "rnd_top", "archives", "root"};
constexpr std::array<std::string_view, 3> kChoices{"trash_program", "hq_access", "meat_damage"};
constexpr std::array<std::string_view, 2> kRearrangers{"escher", "msr"};
constexpr std::array<std::string_view, 22> kActionKinds{
    "begin_turn", "gain_credit", "draw_card",     "play_card",  "install_card", "advance",
    "score",      "remove_tag",  "initiate_run",  "boost_aurora", "break_subroutine", "use_grappling_hook",
    "jack_out",   "continue_run", "access_card",  "trash_accessed", "steal",     "decline_access",
    "kp_lynn_choice", "rearrange", "resolve_choice", "end_turn"};

Json card_json(CardId id) { return std::string(card(id).key); }

CardId card_of(const Json& j) {
  const auto key = j.get<std::string>();
  if (auto id = card_from_key(key)) return *id;
  throw SerializationError("unknown card '" + key + "'");
}

Json cards_json(const std::vector<CardId>& cards) {
  Json out = Json::array();
  for (CardId c : cards) out.push_back(card_json(c));
  return out;
}

std::vector<CardId> cards_of(const Json& j) {
  std::vector<CardId> out;
  for (const auto& e : j) out.push_back(card_of(e));
  return out;
}

Json server_json(ServerId id) { return to_string(id); }

ServerId server_of(const Json& j) {
  const auto text = j.get<std::string>();
  if (auto id = server_from_string(text)) return *id;
  throw SerializationError("unknown server '" + text + "'");
}

Json ice_json(const IcePiece& ice) {
  return Json{{"card", card_json(ice.id)},
              {"rezzed", ice.rezzed},
              {"advancement", ice.advancement},
              {"sub_boosts", ice.sub_boosts}};
}

IcePiece ice_of(const Json& j) {
  return {card_of(j.at("card")), j.at("rezzed").get<bool>(), j.at("advancement").get<int>(),
          j.at("sub_boosts").get<int>()};
}

Json access_json(const PendingAccess& a) {
  return Json{{"card", card_json(a.id)}, {"source", name_of(a.source, kSources)}};
}

PendingAccess access_of(const Json& j) {
  return {card_of(j.at("card")), value_of<AccessSource>(j.at("source"), kSources, "access source")};
}

Json corp_json(const CorpState& c) {
  Json servers = Json::array();
  for (const auto& s : c.servers) {
    Json ice = Json::array();
    for (const auto& i : s.ice) ice.push_back(ice_json(i));
    Json root = Json::array();
    for (const auto& r : s.root)
      root.push_back(Json{{"card", card_json(r.id)}, {"rezzed", r.rezzed}, {"advancement", r.advancement}});
    servers.push_back(Json{{"server", server_json(s.id)}, {"ice", ice}, {"root", root}});
  }
  Json archives = Json::array();
  for (const auto& a : c.archives) archives.push_back(Json{{"card", card_json(a.id)}, {"faceup", a.faceup}});
  return Json{{"identity", card_json(c.identity)},
              {"credits", c.credits},
              {"clicks", c.clicks},
              {"hq", cards_json(c.hq)},
              {"rnd", cards_json(c.rnd)},
              {"archives", archives},
              {"servers", servers},
              {"score_area", cards_json(c.score_area)}};
}

CorpState corp_of(const Json& j) {
  CorpState c;
  c.identity = card_of(j.at("identity"));
  c.credits = j.at("credits").get<int>();
  c.clicks = j.at("clicks").get<int>();
  c.hq = cards_of(j.at("hq"));
  c.rnd = cards_of(j.at("rnd"));
  for (const auto& a : j.at("archives")) c.archives.push_back({card_of(a.at("card")), a.at("faceup").get<bool>()});
  for (const auto& s : j.at("servers")) {
    Server srv;
    srv.id = server_of(s.at("server"));
    for (const auto& i : s.at("ice")) srv.ice.push_back(ice_of(i));
    for (const auto& r : s.at("root"))
      srv.root.push_back({card_of(r.at("card")), r.at("rezzed").get<bool>(), r.at("advancement").get<int>()});
    c.servers.push_back(std::move(srv));
  }
  c.score_area = cards_of(j.at("score_area"));
  return c;
}

Json runner_json(const RunnerState& r) {
  return Json{{"identity", card_json(r.identity)},
              {"credits", r.credits},
              {"clicks", r.clicks},
              {"grip", cards_json(r.grip)},
              {"stack", cards_json(r.stack)},
              {"heap", cards_json(r.heap)},
              {"programs", cards_json(r.rig.programs)},
              {"pheromones_counters", r.rig.pheromones_counters},
              {"pheromones_credits", r.rig.pheromones_credits},
              {"tags", r.tags},
              {"link", r.link},
              {"memory", r.memory},
              {"score_area", cards_json(r.score_area)}};
}

RunnerState runner_of(const Json& j) {
  RunnerState r;
  r.identity = card_of(j.at("identity"));
  r.credits = j.at("credits").get<int>();
  r.clicks = j.at("clicks").get<int>();
  r.grip = cards_of(j.at("grip"));
  r.stack = cards_of(j.at("stack"));
  r.heap = cards_of(j.at("heap"));
  r.rig.programs = cards_of(j.at("programs"));
  r.rig.pheromones_counters = j.at("pheromones_counters").get<int>();
  r.rig.pheromones_credits = j.at("pheromones_credits").get<int>();
  r.tags = j.at("tags").get<int>();
  r.link = j.at("link").get<int>();
  r.memory = j.at("memory").get<int>();
  r.score_area = cards_of(j.at("score_area"));
  return r;
}

// indices of the broken subroutines, ascending
Json broken_json(const EncounterState& e) {
  Json out = Json::array();
  for (std::size_t i = 0; i < e.broken.size(); ++i)
    if (e.broken[i]) out.push_back(i);
  return out;
}

Json run_json(const RunContext& run) {
  Json pending = Json::array();
  for (const auto& p : run.pending) pending.push_back(access_json(p));
  return Json{{"target", server_json(run.target)},
              {"ice_index", run.ice_index},
              {"step", name_of(run.step, kSteps)},
              {"broken", broken_json(run.encounter)},
              {"aurora_strength", run.encounter.aurora_strength},
              {"next_sub", run.encounter.next_sub},
              {"via_escher", run.via_escher},
              {"successful", run.successful},
              {"strongbox_clicks", run.strongbox_clicks},
              {"pending", pending},
              {"current", run.current ? access_json(*run.current) : Json(nullptr)}};
}

RunContext run_of(const Json& j) {
  RunContext run;
  run.target = server_of(j.at("target"));
  run.ice_index = j.at("ice_index").get<int>();
  run.step = value_of<RunStep>(j.at("step"), kSteps, "run step");
  for (const auto& i : j.at("broken")) run.encounter.mark_broken(i.get<int>());
  run.encounter.aurora_strength = j.at("aurora_strength").get<int>();
  run.encounter.next_sub = j.at("next_sub").get<int>();
  run.via_escher = j.at("via_escher").get<bool>();
  run.successful = j.at("successful").get<bool>();
  run.strongbox_clicks = j.at("strongbox_clicks").get<int>();
  for (const auto& p : j.at("pending")) run.pending.push_back(access_of(p));
  if (!j.at("current").is_null()) run.current = access_of(j.at("current"));
  return run;
}

Json game_json(const GameState& s) {
  Json choice(nullptr);
  if (s.choice)
    choice = Json{{"kind", name_of(s.choice->kind, kChoices)},
                  {"options", cards_json(s.choice->options)},
                  {"remaining", s.choice->remaining}};
  return Json{{"turn_owner", name_of(s.turn_owner, kSides)},
              {"phase", name_of(s.phase, kPhases)},
              {"status", name_of(s.status, kStatuses)},
              {"turn_number", s.turn_number},
              {"corp", corp_json(s.corp)},
              {"runner", runner_json(s.runner)},
              {"run", s.run ? run_json(*s.run) : Json(nullptr)},
              {"choice", choice},
              {"rearrange", s.rearrange ? Json(name_of(*s.rearrange, kRearrangers)) : Json(nullptr)}};
}

GameState game_of(const Json& j) {
  GameState s;
  s.turn_owner = value_of<Side>(j.at("turn_owner"), kSides, "side");
  s.phase = value_of<Phase>(j.at("phase"), kPhases, "phase");
  s.status = value_of<TerminalStatus>(j.at("status"), kStatuses, "status");
  s.turn_number = j.at("turn_number").get<int>();
  s.corp = corp_of(j.at("corp"));
  s.runner = runner_of(j.at("runner"));
  if (!j.at("run").is_null()) s.run = run_of(j.at("run"));
  if (const auto& c = j.at("choice"); !c.is_null())
    s.choice = PendingChoice{value_of<ChoiceKind>(c.at("kind"), kChoices, "choice"), cards_of(c.at("options")),
                             c.at("remaining").get<int>()};
  if (const auto& r = j.at("rearrange"); !r.is_null())
    s.rearrange = value_of<RearrangeSource>(r, kRearrangers, "rearrangement source");
  return s;
}

Json payment_json(const Payment& p) { return Json{{"pool", p.pool}, {"pheromones", p.pheromones}}; }

Payment payment_of(const Json& j) { return {j.at("pool").get<int>(), j.at("pheromones").get<int>()}; }

Json action_json(const Action& a) {
  Json j{{"kind", name_of(a.kind, kActionKinds)}};
  switch (a.kind) {
    case ActionKind::PlayCard: j["card"] = card_json(a.card); break;
    case ActionKind::InstallCard:
      j["card"] = card_json(a.card);
      j["server"] = server_json(a.server);
      break;
    case ActionKind::Advance:
      j["server"] = server_json(a.server);
      j["on_ice"] = a.on_ice;
      j["index"] = a.index;
      break;
    case ActionKind::Score:
      j["server"] = server_json(a.server);
      j["index"] = a.index;
      break;
    case ActionKind::InitiateRun: j["server"] = server_json(a.server); break;
    case ActionKind::BoostAurora:
    case ActionKind::TrashAccessed: j["payment"] = payment_json(a.payment); break;
    case ActionKind::BreakSubroutine:
      j["index"] = a.index;
      j["payment"] = payment_json(a.payment);
      break;
    case ActionKind::UseGrapplingHook:
    case ActionKind::ResolveChoice: j["index"] = a.index; break;
    case ActionKind::AccessCard:
      j["card"] = card_json(a.card);
      j["source"] = name_of(a.source, kSources);
      break;
    case ActionKind::KPLynnChoice: j["take_tag"] = a.take_tag; break;
    case ActionKind::Rearrange: {
      Json slots = Json::array();
      for (const auto& slot : a.plan.assignment) slots.push_back(Json::array({to_string(slot.server), slot.position}));
      j["plan"] = slots;
      break;
    }
    default: break;
  }
  return j;
}

Action action_of(const Json& j) {
  Action a;
  a.kind = value_of<ActionKind>(j.at("kind"), kActionKinds, "action kind");
  if (j.contains("card")) a.card = card_of(j.at("card"));
  if (j.contains("server")) a.server = server_of(j.at("server"));
  if (j.contains("index")) a.index = j.at("index").get<int>();
  if (j.contains("on_ice")) a.on_ice = j.at("on_ice").get<bool>();
  if (j.contains("take_tag")) a.take_tag = j.at("take_tag").get<bool>();
  if (j.contains("source")) a.source = value_of<AccessSource>(j.at("source"), kSources, "access source");
  if (j.contains("payment")) a.payment = payment_of(j.at("payment"));
  if (j.contains("plan"))
    for (const auto& slot : j.at("plan")) a.plan.assignment.push_back({server_of(slot.at(0)), slot.at(1).get<int>()});
  return a;
}

Json manifest_json(const ScenarioManifest& m) {
  return Json{{"theorem", m.theorem},
              {"values", m.values},
              {"twice_target", m.twice_target},
              {"hq_break_cost", m.hq_break_cost},
              {"per_server_target", m.per_server_target},
              {"enigmas_per_stack", m.enigmas_per_stack},
              {"hq_initial_walls", m.hq_initial_walls},
              {"wall_servers", m.wall_servers}};
}

ScenarioManifest manifest_of(const Json& j) {
  ScenarioManifest m;
  m.theorem = j.at("theorem").get<int>();
  m.values = j.at("values").get<std::vector<std::int64_t>>();
  m.twice_target = j.at("twice_target").get<std::int64_t>();
  m.hq_break_cost = j.at("hq_break_cost").get<std::int64_t>();
  m.per_server_target = j.at("per_server_target").get<std::int64_t>();
  m.enigmas_per_stack = j.at("enigmas_per_stack").get<int>();
  m.hq_initial_walls = j.at("hq_initial_walls").get<int>();
  m.wall_servers = j.at("wall_servers").get<std::vector<std::string>>();
  return m;
}

Json parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SerializationError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema_version")) throw SerializationError("missing schema_version");
  if (j.at("schema_version") != kSchemaVersion)
    throw SerializationError("unsupported schema_version " + j.at("schema_version").dump());
  return j;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw SerializationError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

std::string serialize(const StateDocument& doc) {
  Json j{{"schema_version", kSchemaVersion}, {"state", game_json(doc.state)}};
  if (doc.manifest) j["manifest"] = manifest_json(*doc.manifest);
  return j.dump(2) + "\n";
}

std::string serialize(const LineDocument& doc) {
  Json actions = Json::array();
  for (const auto& a : doc.actions) actions.push_back(action_json(a));
  Json j{{"schema_version", kSchemaVersion},
         {"mate", doc.mate},
         {"claimed", name_of(doc.claimed, kStatuses)},
         {"actions", actions}};
  return j.dump(2) + "\n";
}

StateDocument parse_state_document(const std::string& text) {
  const Json j = parse_document(text);
  return guarded([&] {
    StateDocument doc{game_of(j.at("state")), std::nullopt};
    if (j.contains("manifest")) doc.manifest = manifest_of(j.at("manifest"));
    return doc;
  });
}

LineDocument parse_line_document(const std::string& text) {
  const Json j = parse_document(text);
  return guarded([&] {
    LineDocument doc;
    doc.mate = j.value("mate", 0);
    if (j.contains("claimed")) doc.claimed = value_of<TerminalStatus>(j.at("claimed"), kStatuses, "status");
    for (const auto& a : j.at("actions")) doc.actions.push_back(action_of(a));
    return doc;
  });
}

std::string action_to_json(const Action& action) { return action_json(action).dump(); }

Action action_from_json(const std::string& text) {
  return guarded([&] { return action_of(Json::parse(text)); });
}

std::string state_to_json(const GameState& state) { return game_json(state).dump(); }

GameState state_from_json(const std::string& text) {
  return guarded([&] { return game_of(Json::parse(text)); });
}

}  // namespace netmate
