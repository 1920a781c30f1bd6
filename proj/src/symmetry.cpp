#include "netmate/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

namespace netmate {

namespace {

bool rearrangement_possible(const GameState& s) {
  if (s.rearrange) return true;
  const auto holds = [](const std::vector<CardId>& zone, CardId id) {
    return std::find(zone.begin(), zone.end(), id) != zone.end();
  };
  if (holds(s.runner.grip, CardId::Escher) || holds(s.runner.stack, CardId::Escher)) return true;
  if (holds(s.corp.hq, CardId::MandatorySeedReplacement) || holds(s.corp.rnd, CardId::MandatorySeedReplacement))
    return true;
  for (const auto& srv : s.corp.servers)
    for (const auto& rc : srv.root)
      if (rc.id == CardId::MandatorySeedReplacement) return true;
  return false;
}

bool impassable_now(const GameState& s, const IcePiece& ice) {
  if (!ice.rezzed) return false;
  const int subs = subroutine_count(ice);
  bool ends_run = false;
  for (int i = 0; i < subs; ++i) ends_run = ends_run || subroutine_effect(ice, i) == SubEffect::EndTheRun;
  if (!ends_run) return false;
  const auto& rig = s.runner.rig;
  if (rig.has(CardId::GrapplingHook)) return false;
  if (rig.has(CardId::Aurora) && ice_is_barrier(ice)) return false;
  return true;
}

class KeyWriter {
 public:
  void put(int v) {
    // values stay well inside 16 bits in every reachable state
    bytes_.push_back(static_cast<char>(v & 0xff));
    bytes_.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  void put_bool(bool b) { bytes_.push_back(b ? 1 : 0); }
  void put_card(CardId id) { bytes_.push_back(static_cast<char>(id)); }
  void put_cards(const std::vector<CardId>& zone) {
    put(static_cast<int>(zone.size()));
    for (CardId id : zone) put_card(id);
  }
  void put_sorted(std::vector<CardId> zone) {
    std::sort(zone.begin(), zone.end());
    put_cards(zone);
  }
  void put_ice(const IcePiece& ice) {
    put_card(ice.id);
    put_bool(ice.rezzed);
    put(ice.advancement);
    put(ice.sub_boosts);
  }
  void mark(char c) { bytes_.push_back(c); }
  std::string take() { return std::move(bytes_); }

 private:
  std::string bytes_;
};

}  // namespace

bool ice_is_impassable(const GameState& state, const IcePiece& ice) {
  return !rearrangement_possible(state) && impassable_now(state, ice);
}

CanonicalKey canonical_key(const GameState& s) {
  KeyWriter w;
  w.put(static_cast<int>(s.turn_owner));
  w.put(static_cast<int>(s.phase));
  w.put(static_cast<int>(s.status));

  const bool truncate = !rearrangement_possible(s);
  const auto& c = s.corp;
  w.mark('C');
  w.put_card(c.identity);
  w.put(c.credits);
  w.put(c.clicks);
  w.put_sorted(c.hq);
  w.put_cards(c.rnd);
  auto archives = c.archives;
  std::sort(archives.begin(), archives.end());
  w.put(static_cast<int>(archives.size()));
  for (const auto& a : archives) {
    w.put_card(a.id);
    w.put_bool(a.faceup);
  }
  w.put(static_cast<int>(c.servers.size()));
  for (const auto& srv : c.servers) {
    w.mark('S');
    w.put(srv.id.value);
    w.put(static_cast<int>(srv.ice.size()));
    int from = 0;
    if (s.run && s.run->target == srv.id) from = s.run->ice_index;
    for (std::size_t i = 0; i < srv.ice.size(); ++i) {
      w.put_ice(srv.ice[i]);
      // nothing behind a piece the Runner can never pass is observable
      if (truncate && static_cast<int>(i) >= from && impassable_now(s, srv.ice[i])) {
        w.mark('|');
        break;
      }
    }
    auto root = srv.root;
    std::sort(root.begin(), root.end());
    w.put(static_cast<int>(root.size()));
    for (const auto& rc : root) {
      w.put_card(rc.id);
      w.put_bool(rc.rezzed);
      w.put(rc.advancement);
    }
  }
  w.put_sorted(c.score_area);

  const auto& r = s.runner;
  w.mark('R');
  w.put_card(r.identity);
  w.put(r.credits);
  w.put(r.clicks);
  w.put_sorted(r.grip);
  w.put_cards(r.stack);
  w.put_sorted(r.heap);
  w.put_sorted(r.rig.programs);
  w.put(r.rig.pheromones_counters);
  w.put(r.rig.pheromones_credits);
  w.put(r.tags);
  w.put(r.link);
  w.put(r.memory);
  w.put_sorted(r.score_area);

  if (s.run) {
    const auto& run = *s.run;
    w.mark('U');
    w.put(run.target.value);
    w.put(run.ice_index);
    w.put(static_cast<int>(run.step));
    w.put(static_cast<int>(run.encounter.broken.size()));
    for (bool b : run.encounter.broken) w.put_bool(b);
    w.put(run.encounter.aurora_strength);
    w.put(run.encounter.next_sub);
    w.put_bool(run.via_escher);
    w.put_bool(run.successful);
    w.put(run.strongbox_clicks);
    auto pending = run.pending;
    std::sort(pending.begin(), pending.end());
    w.put(static_cast<int>(pending.size()));
    for (const auto& p : pending) {
      w.put_card(p.id);
      w.put(static_cast<int>(p.source));
    }
    w.put_bool(run.current.has_value());
    if (run.current) {
      w.put_card(run.current->id);
      w.put(static_cast<int>(run.current->source));
    }
  }
  if (s.choice) {
    w.mark('H');
    w.put(static_cast<int>(s.choice->kind));
    w.put_cards(s.choice->options);
    w.put(s.choice->remaining);
  }
  if (s.rearrange) {
    w.mark('A');
    w.put(static_cast<int>(*s.rearrange));
  }
  return {w.take()};
}

void place_ice(GameState& state, const RearrangementPlan& plan) {
  std::vector<IcePiece> pieces;
  for (const auto& srv : state.corp.servers) pieces.insert(pieces.end(), srv.ice.begin(), srv.ice.end());
  if (pieces.size() != plan.assignment.size()) throw std::invalid_argument("plan size mismatch");
  for (auto& srv : state.corp.servers) srv.ice.assign(srv.ice.size(), IcePiece{});
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& slot = plan.assignment[i];
    state.server(slot.server).ice.at(static_cast<std::size_t>(slot.position)) = pieces[i];
  }
}

std::vector<RearrangementPlan> enumerate_rearrangement_plans(const GameState& state, PlanEnumeration opts) {
  if (!state.rearrange) throw std::logic_error("no rearrangement pending");

  std::vector<IcePiece> pieces;
  std::vector<int> sizes;
  for (const auto& srv : state.corp.servers) {
    pieces.insert(pieces.end(), srv.ice.begin(), srv.ice.end());
    sizes.push_back(static_cast<int>(srv.ice.size()));
  }
  std::vector<IcePiece> classes = pieces;
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  const auto class_of = [&](const IcePiece& p) {
    return static_cast<int>(std::lower_bound(classes.begin(), classes.end(), p) - classes.begin());
  };

  std::vector<int> count(classes.size(), 0);
  std::vector<std::deque<int>> members(classes.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const int k = class_of(pieces[i]);
    ++count[static_cast<std::size_t>(k)];
    members[static_cast<std::size_t>(k)].push_back(static_cast<int>(i));
  }

  // Judge passability as it will stand once the rearrangement is spent.
  GameState after = state;
  after.rearrange.reset();
  std::vector<bool> terminator(classes.size(), false);
  if (opts.collapse_unreachable)
    for (std::size_t k = 0; k < classes.size(); ++k) terminator[k] = ice_is_impassable(after, classes[k]);

  const std::size_t nservers = sizes.size();
  std::vector<std::vector<int>> layout(nservers);  // class per observable slot
  std::vector<RearrangementPlan> out;

  const auto emit = [&] {
    std::vector<int> left = count;
    std::vector<std::vector<int>> full(nservers);
    for (std::size_t s = 0; s < nservers; ++s) full[s] = layout[s];
    std::size_t k = 0;
    for (std::size_t s = 0; s < nservers; ++s)
      while (static_cast<int>(full[s].size()) < sizes[s]) {
        while (left[k] == 0) ++k;
        full[s].push_back(static_cast<int>(k));
        --left[k];
      }
    auto queues = members;
    RearrangementPlan plan;
    plan.assignment.resize(pieces.size());
    for (std::size_t s = 0; s < nservers; ++s)
      for (std::size_t p = 0; p < full[s].size(); ++p) {
        auto& q = queues[static_cast<std::size_t>(full[s][p])];
        plan.assignment[static_cast<std::size_t>(q.front())] = {state.corp.servers[s].id, static_cast<int>(p)};
        q.pop_front();
      }
    out.push_back(std::move(plan));
  };

  std::function<void(std::size_t)> place = [&](std::size_t s) {
    if (s == nservers) {
      emit();
      return;
    }
    if (static_cast<int>(layout[s].size()) == sizes[s]) {
      place(s + 1);
      return;
    }
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (count[k] == 0) continue;
      --count[k];
      layout[s].push_back(static_cast<int>(k));
      if (terminator[k])
        place(s + 1);  // the rest of this server is never seen
      else
        place(s);
      layout[s].pop_back();
      ++count[k];
    }
  };
  place(0);
  return out;
}

}  // namespace netmate
