#pragma once

#include <vector>

#include <json.hpp>

#include "permstruct/certificate.hpp"
#include "permstruct/factorize.hpp"
#include "permstruct/structure.hpp"

namespace permstruct {

// all emitters use ordered_json so field order is stable across runs

nlohmann::ordered_json group_to_json(const PermGroup &g);
nlohmann::ordered_json series_to_json(const NormalSeries &s);
nlohmann::ordered_json report_to_json(const InvariantReport &r);
nlohmann::ordered_json
factorizations_to_json(const std::vector<FactorizationRecord> &records);
nlohmann::ordered_json certificate_to_json(const Certificate &c);
nlohmann::ordered_json bound_check_to_json(const BoundCheck &c);
nlohmann::ordered_json cjs_to_json(const CjsCheck &c);
nlohmann::ordered_json corollary2_to_json(const Corollary2Check &c);
nlohmann::ordered_json tower_to_json(const TowerLambdaCertificate &c);

} // namespace permstruct
