#pragma once

#include <json.hpp>

#include "zcenter/centre.hpp"
#include "zcenter/chartable.hpp"
#include "zcenter/cochain.hpp"
#include "zcenter/cyclotomic.hpp"
#include "zcenter/etale.hpp"
#include "zcenter/group.hpp"
#include "zcenter/invariants.hpp"

namespace zc {

nlohmann::json group_to_json(const GroupTable& g);
GroupTable group_from_json(const nlohmann::json& j);

/// {"group": {...}, "degree": n, "values": [{"args": [...], "phase": "p/q"}]}
/// with omitted entries meaning zero.
nlohmann::json cochain_to_json(const GroupTable& g, const Cochain& c);
Cochain cochain_from_json(const nlohmann::json& j, const GroupTable& expected_group);

/// {"N": n, "coeffs": ["a/b", ...]} in canonical form (length N).
nlohmann::json cyclotomic_to_json(const Cyclotomic& v);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

nlohmann::json projective_table_to_json(const GroupTable& h,
                                        const ProjectiveCharacterTable& t);

nlohmann::json centre_character_to_json(const CentreContext& ctx, const CentreCharacter& chi);
CentreCharacter centre_character_from_json(const CentreContext& ctx, const nlohmann::json& j);

nlohmann::json etale_datum_to_json(const GroupTable& g, const EtaleDatum& d);

nlohmann::json invariants_to_json(const PhysicalInvariants& inv);

}  // namespace zc
