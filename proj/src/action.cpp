#include "netmate/action.hpp"

#include <sstream>

namespace netmate {

std::string_view to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::BeginTurn: return "BeginTurn";
    case ActionKind::GainCredit: return "GainCredit";
    case ActionKind::DrawCard: return "DrawCard";
    case ActionKind::PlayCard: return "PlayCard";
    case ActionKind::InstallCard: return "InstallCard";
    case ActionKind::Advance: return "Advance";
    case ActionKind::Score: return "Score";
    case ActionKind::RemoveTag: return "RemoveTag";
    case ActionKind::InitiateRun: return "InitiateRun";
    case ActionKind::BoostAurora: return "BoostAurora";
    case ActionKind::BreakSubroutine: return "BreakSubroutine";
    case ActionKind::UseGrapplingHook: return "UseGrapplingHook";
    case ActionKind::JackOut: return "JackOut";
    case ActionKind::ContinueRun: return "ContinueRun";
    case ActionKind::AccessCard: return "AccessCard";
    case ActionKind::TrashAccessed: return "TrashAccessed";
    case ActionKind::Steal: return "Steal";
    case ActionKind::DeclineAccess: return "DeclineAccess";
    case ActionKind::KPLynnChoice: return "KPLynnChoice";
    case ActionKind::Rearrange: return "Rearrange";
    case ActionKind::ResolveChoice: return "ResolveChoice";
    case ActionKind::EndTurn: return "EndTurn";
  }
  return "?";
}

namespace {

std::string payment_text(const Payment& p) {
  std::ostringstream out;
  out << "pool " << p.pool;
  if (p.pheromones) out << " + pheromones " << p.pheromones;
  return out.str();
}

std::string_view source_text(AccessSource s) {
  switch (s) {
    case AccessSource::HqHand: return "hq hand";
    case AccessSource::RndTop: return "rnd top";
    case AccessSource::Archives: return "archives";
    case AccessSource::Root: return "root";
  }
  return "?";
}

}  // namespace

std::string describe(const Action& a) {
  std::ostringstream out;
  out << to_string(a.kind);
  switch (a.kind) {
    case ActionKind::PlayCard: out << "(" << card(a.card).name << ")"; break;
    case ActionKind::InstallCard: out << "(" << card(a.card).name << " -> " << to_string(a.server) << ")"; break;
    case ActionKind::Advance:
      out << "(" << to_string(a.server) << (a.on_ice ? " ice " : " root ") << a.index << ")";
      break;
    case ActionKind::Score: out << "(" << to_string(a.server) << " root " << a.index << ")"; break;
    case ActionKind::InitiateRun: out << "(" << to_string(a.server) << ")"; break;
    case ActionKind::BoostAurora:
    case ActionKind::TrashAccessed: out << "(" << payment_text(a.payment) << ")"; break;
    case ActionKind::BreakSubroutine: out << "(sub " << a.index << ", " << payment_text(a.payment) << ")"; break;
    case ActionKind::UseGrapplingHook: out << "(keep sub " << a.index << ")"; break;
    case ActionKind::AccessCard: out << "(" << card(a.card).name << " from " << source_text(a.source) << ")"; break;
    case ActionKind::KPLynnChoice: out << (a.take_tag ? "(take tag)" : "(end run)"); break;
    case ActionKind::ResolveChoice: out << "(option " << a.index << ")"; break;
    case ActionKind::Rearrange: {
      out << "(";
      for (std::size_t i = 0; i < a.plan.assignment.size(); ++i) {
        if (i) out << " ";
        out << to_string(a.plan.assignment[i].server) << ":" << a.plan.assignment[i].position;
      }
      out << ")";
      break;
    }
    default: break;
  }
  return out.str();
}

}  // namespace netmate
