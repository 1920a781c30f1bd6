#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netmate/action.hpp"
#include "netmate/compiler.hpp"
#include "netmate/state.hpp"

namespace netmate {

inline constexpr int kSchemaVersion = 1;

class SerializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// State file: {"schema_version", "state", optional "manifest"}.
struct StateDocument {
  GameState state;
  std::optional<ScenarioManifest> manifest;

  bool operator==(const StateDocument&) const = default;
};

// Line file: {"schema_version", "mate", "claimed", "actions"}. mate and
// claimed are informational.
struct LineDocument {
  int mate = 0;
  TerminalStatus claimed = TerminalStatus::None;
  std::vector<Action> actions;

  bool operator==(const LineDocument&) const = default;
};

// Output is pretty-printed with a fixed key order, so equal inputs give
// equal bytes.
std::string serialize(const StateDocument& doc);
std::string serialize(const LineDocument& doc);

StateDocument parse_state_document(const std::string& text);
LineDocument parse_line_document(const std::string& text);

// Single-action and single-state forms, compact JSON.
std::string action_to_json(const Action& action);
Action action_from_json(const std::string& text);
std::string state_to_json(const GameState& state);
GameState state_from_json(const std::string& text);

}  // namespace netmate
