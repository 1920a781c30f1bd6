#include "netmate/cards.hpp"

#include <array>
#include <stdexcept>

namespace netmate {

namespace {

using namespace subtype;

constexpr std::array<SubEffect, 4> kArcherSubs{SubEffect::CorpGainsTwo, SubEffect::TrashProgram,
                                               SubEffect::TrashProgram, SubEffect::EndTheRun};
constexpr std::array<SubEffect, 2> kEnigmaSubs{SubEffect::RunnerLosesClick, SubEffect::EndTheRun};
constexpr std::array<SubEffect, 1> kEtrSub{SubEffect::EndTheRun};

constexpr std::span<const SubEffect> kNoSubs{};

// clang-format off
const std::array<CardDef, kCatalogSize> kCatalog{{
  //  id                                 name                                          key        side          kind                 subtypes                     cost str trash pts adv  subs
  {CardId::Archer,                   "Archer",                                     "archer",  Side::Corp,   CardKind::Ice,       kSentry | kDestroyer,        4,   6,  0,    0,  0,   kArcherSubs},
  {CardId::DedicatedResponseTeam,    "Dedicated Response Team",                    "drt",     Side::Corp,   CardKind::Asset,     kHostile,                    2,   0,  3,    0,  0,   kNoSubs},
  {CardId::Enigma,                   "Enigma",                                     "enigma",  Side::Corp,   CardKind::Ice,       kCodeGate,                   3,   2,  0,    0,  0,   kEnigmaSubs},
  {CardId::FastTrack,                "Fast Track",                                 "fasttrack", Side::Corp, CardKind::Operation, kNone,                       0,   0,  0,    0,  0,   kNoSubs},
  {CardId::HedgeFund,                "Hedge Fund",                                 "hedge",   Side::Corp,   CardKind::Operation, kTransaction,                5,   0,  0,    0,  0,   kNoSubs},
  {CardId::IceWall,                  "Ice Wall",                                   "icewall", Side::Corp,   CardKind::Ice,       kBarrier,                    1,   1,  0,    0,  0,   kEtrSub},
  {CardId::KPLynn,                   "K. P. Lynn",                                 "kplynn",  Side::Corp,   CardKind::Upgrade,   kExecutive,                  1,   0,  3,    0,  0,   kNoSubs},
  {CardId::MandatorySeedReplacement, "Mandatory Seed Replacement",                 "msr",     Side::Corp,   CardKind::Agenda,    kSecurity,                   0,   0,  0,    2,  4,   kNoSubs},
  {CardId::MedicalBreakthrough,      "Medical Breakthrough",                       "medbt",   Side::Corp,   CardKind::Agenda,    kResearch,                   0,   0,  0,    2,  4,   kNoSubs},
  {CardId::NiseiDivision,            "Nisei Division: The Next Generation",        "nisei",   Side::Corp,   CardKind::Identity,  kDivision,                   0,   0,  0,    0,  0,   kNoSubs},
  {CardId::PriorityRequisition,      "Priority Requisition",                       "prireq",  Side::Corp,   CardKind::Agenda,    kSecurity,                   0,   0,  0,    3,  5,   kNoSubs},
  {CardId::Strongbox,                "Strongbox",                                  "strongbox", Side::Corp, CardKind::Upgrade,   kNone,                       3,   0,  1,    0,  0,   kNoSubs},
  {CardId::SubBoost,                 "Sub Boost",                                  "subboost", Side::Corp,  CardKind::Operation, kCondition,                  0,   0,  0,    0,  0,   kNoSubs},
  {CardId::WallOfStatic,             "Wall of Static",                             "wos",     Side::Corp,   CardKind::Ice,       kBarrier,                    3,   3,  0,    0,  0,   kEtrSub},
  {CardId::WeylandBBW,               "Weyland Consortium: Building a Better World", "weyland", Side::Corp,  CardKind::Identity,  kMegacorp,                   0,   0,  0,    0,  0,   kNoSubs},
  {CardId::Aurora,                   "Aurora",                                     "aurora",  Side::Runner, CardKind::Program,   kIcebreaker | kFracter,      3,   1,  0,    0,  0,   kNoSubs},
  {CardId::Escher,                   "Escher",                                     "escher",  Side::Runner, CardKind::Event,     kRun,                        3,   0,  0,    0,  0,   kNoSubs},
  {CardId::Exile,                    "Exile: Streethawk",                          "exile",   Side::Runner, CardKind::Identity,  kNatural,                    0,   0,  0,    0,  0,   kNoSubs},
  {CardId::GrapplingHook,            "Grappling Hook",                             "hook",    Side::Runner, CardKind::Program,   kNone,                       2,   0,  0,    0,  0,   kNoSubs},
  {CardId::Infiltration,             "Infiltration",                               "infiltration", Side::Runner, CardKind::Event, kNone,                      0,   0,  0,    0,  0,   kNoSubs},
  {CardId::Pheromones,               "Pheromones",                                 "pheromones", Side::Runner, CardKind::Program, kVirus,                     2,   0,  0,    0,  0,   kNoSubs},
  {CardId::TheShadowNet,             "The Shadow Net",                             "shadownet", Side::Runner, CardKind::Resource, kVirtual,                   0,   0,  0,    0,  0,   kNoSubs},
}};
// clang-format on

}  // namespace

std::string_view to_string(Side s) { return s == Side::Corp ? "corp" : "runner"; }

const CardDef& card(CardId id) {
  const auto i = static_cast<std::size_t>(id);
  if (i >= kCatalog.size()) throw std::out_of_range("card id outside catalog");
  return kCatalog[i];
}

std::span<const CardDef> catalog() { return kCatalog; }

std::optional<CardId> card_from_key(std::string_view key) {
  for (const auto& def : kCatalog)
    if (def.key == key) return def.id;
  return std::nullopt;
}

}  // namespace netmate
