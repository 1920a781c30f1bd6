#include <sstream>

#include "netmate/harness.hpp"

namespace netmate {

namespace {

std::string list(const std::vector<CardId>& cards) {
  if (cards.empty()) return "-";
  std::string out;
  for (CardId c : cards) {
    if (!out.empty()) out += ", ";
    out += card(c).name;
  }
  return out;
}

std::string server_title(ServerId id) {
  if (id == ServerId::hq()) return "HQ";
  if (id == ServerId::rnd()) return "R&D";
  if (id == ServerId::archives()) return "Archives";
  return "Remote " + std::to_string(id.remote_number());
}

std::string ice_line(const IcePiece& ice) {
  std::string out = std::string(card(ice.id).name) + " [str " + std::to_string(ice_strength(ice)) + "]";
  if (ice.advancement > 0) out += " adv " + std::to_string(ice.advancement);
  if (ice.sub_boosts > 0) out += " sub boost x" + std::to_string(ice.sub_boosts);
  if (!ice.rezzed) out += " (unrezzed)";
  return out;
}

}  // namespace

std::string render(const GameState& s) {
  std::ostringstream os;
  const auto& c = s.corp;
  const auto& r = s.runner;
  os << "Turn " << s.turn_number << ", " << (s.turn_owner == Side::Corp ? "Corp" : "Runner") << " to play";
  if (s.terminal()) os << " [" << to_string(s.status) << "]";
  os << "\n\nCORP  " << card(c.identity).name << "\n";
  os << "  credits " << c.credits << "  clicks " << c.clicks << "  points " << agenda_points(c.score_area) << "\n";
  os << "  score area: " << list(c.score_area) << "\n";
  for (const auto& srv : c.servers) {
    os << "\n  " << server_title(srv.id);
    if (s.run && s.run->target == srv.id) os << "  <- run";
    os << "\n";
    if (srv.ice.empty()) os << "    (no ice)\n";
    for (std::size_t i = 0; i < srv.ice.size(); ++i)
      os << "    " << (i + 1 < 10 ? " " : "") << i + 1 << ". " << ice_line(srv.ice[i]) << "\n";
    os << "    ----\n";
    if (srv.id == ServerId::hq()) os << "    hand: " << list(c.hq) << "\n";
    if (srv.id == ServerId::rnd()) os << "    deck (top first): " << list(c.rnd) << "\n";
    if (srv.id == ServerId::archives()) {
      std::vector<CardId> ids;
      for (const auto& a : c.archives) ids.push_back(a.id);
      os << "    discard: " << list(ids) << "\n";
    }
    for (const auto& rc : srv.root) {
      os << "    root: " << card(rc.id).name << (rc.rezzed ? "" : " (unrezzed)");
      if (rc.advancement > 0) os << " adv " << rc.advancement;
      os << "\n";
    }
  }
  os << "\nRUNNER  " << card(r.identity).name << "\n";
  os << "  credits " << r.credits << "  clicks " << r.clicks << "  tags " << r.tags << "  points "
     << agenda_points(r.score_area) << "\n";
  os << "  programs: " << list(r.rig.programs) << "\n";
  if (r.rig.has(CardId::Pheromones))
    os << "  pheromones: " << r.rig.pheromones_counters << " counters, " << r.rig.pheromones_credits
       << " credits\n";
  os << "  grip: " << list(r.grip) << "\n";
  os << "  stack: " << list(r.stack) << "\n";
  os << "  heap: " << list(r.heap) << "\n";
  os << "  score area: " << list(r.score_area) << "\n";
  return os.str();
}

}  // namespace netmate
