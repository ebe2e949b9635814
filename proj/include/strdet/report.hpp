#pragma once

// Human-readable and JSON renderings of every result, plus DOT export.
// JSON objects use sorted keys; set-valued fields are ascending arrays.

#include <string>

#include <json.hpp>

#include "strdet/ar_quiver.hpp"
#include "strdet/engine.hpp"
#include "strdet/oracle.hpp"
#include "strdet/quiver.hpp"

namespace strdet {

using Json = nlohmann::json;

std::string certificate_text(const BoundQuiverAlgebra& algebra);
Json certificate_json(const BoundQuiverAlgebra& algebra);

std::string classify_text(const BoundQuiverAlgebra& algebra);
Json classify_json(const BoundQuiverAlgebra& algebra);

std::string ideals_text(const BoundQuiverAlgebra& algebra);
Json ideals_json(const BoundQuiverAlgebra& algebra);

std::string determiners_text(const DeterminerReport& report);
Json determiners_json(const DeterminerReport& report);

std::string oracle_text(const BoundQuiverAlgebra& algebra, const ARQuiver& ar, const OracleResult& result);
Json oracle_json(const BoundQuiverAlgebra& algebra, const ARQuiver& ar, const OracleResult& result);

std::string check_text(const DeterminerReport& report, const OracleResult& result, const Agreement& agreement);
Json check_json(const DeterminerReport& report, const OracleResult& result, const Agreement& agreement);

std::string quiver_dot(const BoundQuiverAlgebra& algebra);
// Nodes labelled by dimension vector and string; translate pairs drawn dashed
// and placed on a common rank.
std::string ar_quiver_dot(const BoundQuiverAlgebra& algebra, const ARQuiver& ar);

}  // namespace strdet
