#pragma once

#include <string>

#include <json.hpp>

#include "plancherel/collection.hpp"
#include "plancherel/ensembles.hpp"
#include "plancherel/measures.hpp"

namespace plancherel {

using Json = nlohmann::ordered_json;

/// {"value": "decimal", "err": "decimal"}; err absorbs the decimal rounding of value.
Json certified_to_json(const CertifiedReal& x, int digits = 25);
CertifiedReal certified_from_json(const Json& j);

Json report_to_json(const IdentityReport& report);
IdentityReport report_from_json(const Json& j);

/// {"n":..., "assignments":[{"degree":d,"index":i,"poly":"...","partition":"2,1"}, ...]}
Json collection_to_json(const PartitionCollection& collection);
PartitionCollection collection_from_json(const Json& j);

Json row_to_json(const ConvergenceRow& row);

/// Header line for convergence_row_csv.
std::string convergence_csv_header();
std::string convergence_row_csv(const ConvergenceRow& row);

}  // namespace plancherel
