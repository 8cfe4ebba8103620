#pragma once

#include <nlohmann/json.hpp>

#include "cuspatlas/blowdown.hpp"
#include "cuspatlas/cusp.hpp"
#include "cuspatlas/lattice.hpp"
#include "cuspatlas/lens.hpp"
#include "cuspatlas/obstruct.hpp"
#include "cuspatlas/plumbing.hpp"

namespace cuspatlas {

using json = nlohmann::json;

json big_to_json(const BigInt& v);

void to_json(json& j, const CuspType& c);
void to_json(json& j, const CuspCombo& c);
void to_json(json& j, const FamilyMember& m);
void to_json(json& j, const PlumbingGraph& g);
void to_json(json& j, const Cap& c);
void to_json(json& j, const HClass& c);
void to_json(json& j, const Embedding& e);
void to_json(json& j, const GramForm& f);
void to_json(json& j, const AmbientReport& a);
void to_json(json& j, const ConfigFingerprint& f);
void to_json(json& j, const CatalogEntry& c);
void to_json(json& j, const ObstructionVerdict& v);
void to_json(json& j, const EmbeddingRecord& r);
void to_json(json& j, const FinalStatus& s);
void to_json(json& j, const ClassificationRecord& r);
void to_json(json& j, const LensSpace& L);
void to_json(json& j, const FillingString& s);

// {p, q, strings, rational_ball, wahl}
json lens_report(const LensSpace& L);

}  // namespace cuspatlas
