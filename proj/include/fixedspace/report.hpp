#pragma once

#include <json.hpp>

#include <string>

#include "fixedspace/curves.hpp"
#include "fixedspace/tables.hpp"

namespace fixedspace {

using Json = nlohmann::ordered_json;

// Wire formats. Values are always exact strings: "num/den" rationals or the
// "(num)/(den)" symbolic form; no floating point. ell_or_m is the concrete
// base, or the string "l" for symbolic tables.

Json table_json(const DistributionTable& t);
DistributionTable table_from_json(const Json& j);
std::string table_csv(const DistributionTable& t);
std::string table_text(const DistributionTable& t);

Json beta_json(const BetaReport& r);
BetaReport beta_from_json(const Json& j);
std::string beta_csv(const BetaReport& r);
std::string beta_text(const BetaReport& r);

}  // namespace fixedspace
