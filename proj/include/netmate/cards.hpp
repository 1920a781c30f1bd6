#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace netmate {

enum class Side : std::uint8_t { Corp, Runner };

constexpr Side opponent(Side s) { return s == Side::Corp ? Side::Runner : Side::Corp; }
std::string_view to_string(Side s);

// The closed catalog. Values are stable and used by the serializer.
enum class CardId : std::uint8_t {
  Archer,
  DedicatedResponseTeam,
  Enigma,
  FastTrack,
  HedgeFund,
  IceWall,
  KPLynn,
  MandatorySeedReplacement,
  MedicalBreakthrough,
  NiseiDivision,
  PriorityRequisition,
  Strongbox,
  SubBoost,
  WallOfStatic,
  WeylandBBW,
  Aurora,
  Escher,
  Exile,
  GrapplingHook,
  Infiltration,
  Pheromones,
  TheShadowNet,
};

inline constexpr int kCatalogSize = 22;

enum class CardKind : std::uint8_t {
  Identity,
  Agenda,
  Asset,
  Upgrade,
  Operation,
  Ice,
  Event,
  Program,
  Resource,
};

namespace subtype {
inline constexpr std::uint32_t kNone = 0;
inline constexpr std::uint32_t kBarrier = 1u << 0;
inline constexpr std::uint32_t kCodeGate = 1u << 1;
inline constexpr std::uint32_t kSentry = 1u << 2;
inline constexpr std::uint32_t kDestroyer = 1u << 3;
inline constexpr std::uint32_t kFracter = 1u << 4;
inline constexpr std::uint32_t kIcebreaker = 1u << 5;
inline constexpr std::uint32_t kVirus = 1u << 6;
inline constexpr std::uint32_t kSecurity = 1u << 7;
inline constexpr std::uint32_t kResearch = 1u << 8;
inline constexpr std::uint32_t kHostile = 1u << 9;
inline constexpr std::uint32_t kExecutive = 1u << 10;
inline constexpr std::uint32_t kTransaction = 1u << 11;
inline constexpr std::uint32_t kCondition = 1u << 12;
inline constexpr std::uint32_t kRun = 1u << 13;
inline constexpr std::uint32_t kVirtual = 1u << 14;
inline constexpr std::uint32_t kMegacorp = 1u << 15;
inline constexpr std::uint32_t kDivision = 1u << 16;
inline constexpr std::uint32_t kNatural = 1u << 17;
}  // namespace subtype

enum class SubEffect : std::uint8_t {
  CorpGainsTwo,
  TrashProgram,
  EndTheRun,
  RunnerLosesClick,
};

struct CardDef {
  CardId id;
  std::string_view name;
  std::string_view key;  // short identifier used in files
  Side side;
  CardKind kind;
  std::uint32_t subtypes;
  int cost;  // rez, play or install cost
  int strength;
  int trash_cost;
  int agenda_points;
  int advancement_requirement;
  std::span<const SubEffect> subroutines;
};

const CardDef& card(CardId id);
std::span<const CardDef> catalog();
std::optional<CardId> card_from_key(std::string_view key);

inline bool has_subtype(CardId id, std::uint32_t mask) { return (card(id).subtypes & mask) != 0; }
inline bool is_agenda(CardId id) { return card(id).kind == CardKind::Agenda; }
inline bool is_ice(CardId id) { return card(id).kind == CardKind::Ice; }
inline bool is_program(CardId id) { return card(id).kind == CardKind::Program; }

}  // namespace netmate
