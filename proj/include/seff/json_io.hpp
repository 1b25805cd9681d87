#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "seff/charrel.hpp"
#include "seff/equiv.hpp"
#include "seff/logic.hpp"

namespace seff {

// On-disk model format: one JSON document per artifact, top-level tags
// "format": 1 and "kind". Rationals are canonical "p/q" strings; states are
// referenced by name; output ordering follows the state order of the space,
// so saves are byte-stable.

struct EffectivityDoc {
  EffFn eff;
  std::map<std::string, Subset> valuation;  // optional atoms for modelcheck
};

struct TransitionSystemDoc {
  SpacePtr space;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct NlmpDoc {
  SpacePtr dom;
  SpacePtr cod;
  std::vector<Generator> kappa;
};

struct CongruenceDoc {
  SpacePtr dom;
  SpacePtr cod;
  Congruence congruence;
};

using ModelDoc = std::variant<SpacePtr, Kernel, EffectivityDoc, NeighborhoodModel,
                              CharRel, CongruenceDoc, TransitionSystemDoc, NlmpDoc>;

// Parses a document; throws Error with a descriptive message on any format
// or invariant violation.
ModelDoc parse_model(const std::string& json_text);
ModelDoc load_model(const std::string& path);

std::string save_space(const SpacePtr& space);
std::string save_kernel(const Kernel& k);
std::string save_effectivity(const EffectivityDoc& doc);
std::string save_nbhd_model(const NeighborhoodModel& m);
std::string save_charrel(const CharRel& r);
std::string save_congruence(const CongruenceDoc& c);
std::string save_transition_system(const TransitionSystemDoc& ts);
std::string save_nlmp(const NlmpDoc& doc);

// Serializes whatever the document holds.
std::string save_model(const ModelDoc& doc);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace seff
