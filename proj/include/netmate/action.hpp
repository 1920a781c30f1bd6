#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netmate/state.hpp"

namespace netmate {

struct IceSlot {
  ServerId server;
  int position = 0;

  auto operator<=>(const IceSlot&) const = default;
};

// Destination of every ice piece in play. Entry i belongs to the i-th piece
// when walking servers in order and each server's ice outermost first.
struct RearrangementPlan {
  std::vector<IceSlot> assignment;

  bool operator==(const RearrangementPlan&) const = default;
};

struct Payment {
  int pool = 0;
  int pheromones = 0;

  int total() const { return pool + pheromones; }
  auto operator<=>(const Payment&) const = default;
};

enum class ActionKind : std::uint8_t {
  BeginTurn,
  GainCredit,
  DrawCard,
  PlayCard,
  InstallCard,
  Advance,
  Score,
  RemoveTag,
  InitiateRun,
  BoostAurora,
  BreakSubroutine,
  UseGrapplingHook,
  JackOut,
  ContinueRun,
  AccessCard,
  TrashAccessed,
  Steal,
  DeclineAccess,
  KPLynnChoice,
  Rearrange,
  ResolveChoice,
  EndTurn,
};

std::string_view to_string(ActionKind kind);

// One atomic move. Only the fields a kind needs are meaningful:
//   PlayCard/InstallCard: card; InstallCard also server (destination)
//   Advance: server, on_ice, index (ice position or root position)
//   Score: server, index (root position)
//   InitiateRun: server
//   BoostAurora/TrashAccessed: payment
//   BreakSubroutine: index, payment
//   UseGrapplingHook: index of the subroutine left unbroken
//   AccessCard: card, source
//   KPLynnChoice: take_tag
//   Rearrange: plan
//   ResolveChoice: index into the pending choice's options
struct Action {
  ActionKind kind = ActionKind::EndTurn;
  CardId card = CardId::HedgeFund;
  ServerId server;
  int index = 0;
  bool on_ice = false;
  bool take_tag = false;
  AccessSource source = AccessSource::Root;
  Payment payment;
  RearrangementPlan plan;

  bool operator==(const Action&) const = default;

  static Action begin_turn() { return {.kind = ActionKind::BeginTurn}; }
  static Action gain_credit() { return {.kind = ActionKind::GainCredit}; }
  static Action draw_card() { return {.kind = ActionKind::DrawCard}; }
  static Action play(CardId c) { return {.kind = ActionKind::PlayCard, .card = c}; }
  static Action install(CardId c, ServerId dest) { return {.kind = ActionKind::InstallCard, .card = c, .server = dest}; }
  static Action advance_root(ServerId s, int pos) { return {.kind = ActionKind::Advance, .server = s, .index = pos}; }
  static Action advance_ice(ServerId s, int pos) {
    return {.kind = ActionKind::Advance, .server = s, .index = pos, .on_ice = true};
  }
  static Action score(ServerId s, int pos) { return {.kind = ActionKind::Score, .server = s, .index = pos}; }
  static Action remove_tag() { return {.kind = ActionKind::RemoveTag}; }
  static Action run(ServerId s) { return {.kind = ActionKind::InitiateRun, .server = s}; }
  static Action boost(Payment p) { return {.kind = ActionKind::BoostAurora, .payment = p}; }
  static Action break_sub(int sub, Payment p) { return {.kind = ActionKind::BreakSubroutine, .index = sub, .payment = p}; }
  static Action hook(int kept) { return {.kind = ActionKind::UseGrapplingHook, .index = kept}; }
  static Action jack_out() { return {.kind = ActionKind::JackOut}; }
  static Action continue_run() { return {.kind = ActionKind::ContinueRun}; }
  static Action access(CardId c, AccessSource src) { return {.kind = ActionKind::AccessCard, .card = c, .source = src}; }
  static Action trash_accessed(Payment p) { return {.kind = ActionKind::TrashAccessed, .payment = p}; }
  static Action steal() { return {.kind = ActionKind::Steal}; }
  static Action decline() { return {.kind = ActionKind::DeclineAccess}; }
  static Action kp_lynn(bool tag) { return {.kind = ActionKind::KPLynnChoice, .take_tag = tag}; }
  static Action rearrange(RearrangementPlan p) { return {.kind = ActionKind::Rearrange, .plan = std::move(p)}; }
  static Action resolve(int option) { return {.kind = ActionKind::ResolveChoice, .index = option}; }
  static Action end_turn() { return {.kind = ActionKind::EndTurn}; }
};

std::string describe(const Action& action);

}  // namespace netmate
