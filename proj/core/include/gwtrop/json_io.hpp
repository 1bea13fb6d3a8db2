#pragma once

#include "gwtrop/gw_ring.hpp"

#include <json.hpp>

namespace gwtrop {

// {"classes": [{"rep": r, "mult": m}, ...], "display": "..."}; multiplicities
// outside the 64-bit range are written as decimal strings.
nlohmann::json gw_to_json(const GWElement& x);
GWElement gw_from_json(const nlohmann::json& j);

nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

} // namespace gwtrop
