#pragma once

// JSON forms of the library's values:
//
//   Partition              [3,3,1]
//   Multipartition         [[1,1],[],[]]
//   ChargedMultipartition  {"components": [[1,1],[],[]], "charges": [3,0,-1]}
//   AffinePermutation      {"shifts": [2,0,-1], "perm": [2,0,1]}
//   BlockKey               {"size", "level", "modulus", "charge_mod", "residues"}
//   UglovDatum             {"size", "charge", "block"}
//   UglovInstance          one JSON line per checked block
//   DualityReport          every field of the struct, plus "pass"

#include "json.hpp"
#include "levelrank/abacus.hpp"
#include "levelrank/affine.hpp"
#include "levelrank/blocks.hpp"
#include "levelrank/gln.hpp"
#include "levelrank/partition.hpp"

namespace levelrank {

using json = nlohmann::json;

void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);
void to_json(json& j, const Multipartition& mp);
void from_json(const json& j, Multipartition& mp);
void to_json(json& j, const ChargedMultipartition& cm);
void from_json(const json& j, ChargedMultipartition& cm);
void to_json(json& j, const AffinePermutation& w);
void from_json(const json& j, AffinePermutation& w);
void to_json(json& j, const ResidueMultiset& r);
void from_json(const json& j, ResidueMultiset& r);
void to_json(json& j, const BlockKey& k);
void from_json(const json& j, BlockKey& k);
void to_json(json& j, const UglovDatum& d);
void from_json(const json& j, UglovDatum& d);
void to_json(json& j, const UglovInstance& inst);
void from_json(const json& j, UglovInstance& inst);
void to_json(json& j, const SideReport& side);
void from_json(const json& j, SideReport& side);
void to_json(json& j, const DualityReport& report);
void from_json(const json& j, DualityReport& report);

std::string witness_source_name(WitnessSource source);
WitnessSource witness_source_from_name(const std::string& name);

/// Report summary line for an Uglov sweep; instances are emitted separately.
json uglov_summary(const UglovReport& report);

}  // namespace levelrank
