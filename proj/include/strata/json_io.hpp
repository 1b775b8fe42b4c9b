#pragma once

#include <json.hpp>

#include "strata/census.hpp"
#include "strata/classify.hpp"
#include "strata/error.hpp"
#include "strata/exactmat.hpp"
#include "strata/poset.hpp"
#include "strata/realize.hpp"

namespace strata::io {

using nlohmann::json;

// All JSON documents use 1-based element indices.

json to_json(const SymmetricMatrix& s);
/// Accepts {"n", "mode", "upper"} or {"rows": [[...], ...]}; exact entries
/// are strings "p/q" or integers.
SymmetricMatrix matrix_from_json(const json& j);

json to_json(const SignedMatroid& sm);
SignedMatroid signed_matroid_from_json(const json& j);

json to_json(const StratumLabel& label);
/// "r" is required; "kind" defaults from the sign vector; "d" is ignored.
StratumLabel label_from_json(const json& j);

json to_json(const MomentumConfig& c);
MomentumConfig config_from_json(const json& j);

json to_json(const CensusRow& row);
json to_json(const Poset& poset);

json to_json(const MandelstamVerdict& verdict);
json error_json(const Error& e);

}  // namespace strata::io
