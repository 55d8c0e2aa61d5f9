#pragma once

#include <json.hpp>

#include "regzeta/oracle.hpp"
#include "regzeta/zeta.hpp"

namespace regzeta {

using nlohmann::json;

// Frozen wire shapes. Arbitrary-precision numbers always travel as decimal
// strings; types as {"n": ..., "entries": [[d, e, mult], ...]} with entries
// ascending by (d, e).

json type_entries_json(const NType& tau);
json to_json(const NType& tau);
NType ntype_from_json(const json& j);

json to_json(const ValiditySet& flags);
json to_json(const CharClass& row);
json to_json(const ZetaExpr& z);
json to_json(const DirichletSlice& slice);
json to_json(const EnnolaReport& report);
json to_json(const TypeTally& row);
json to_json(const CensusReport& report);
json to_json(const LemmaReport& report);

}  // namespace regzeta
