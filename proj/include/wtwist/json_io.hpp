#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wtwist/fibration.hpp"
#include "wtwist/search.hpp"
#include "wtwist/twist.hpp"
#include "wtwist/weight_system.hpp"
#include "wtwist/wps_core.hpp"

namespace wtwist {

// Hypersurface wire format:
//   {"weights": [int], "degree": int, "terms": [{"exps": [int],
//    "coeff": "p/q"}]}
// Coefficients are always rendered as exact "p/q" strings.
nlohmann::json to_json(const WeightedHypersurface& x);
WeightedHypersurface hypersurface_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NormalizeResult& r);
nlohmann::json to_json(const TwistResult& r);
nlohmann::json to_json(const CyReport& r);
nlohmann::json to_json(const FibrationReport& r);
nlohmann::json to_json(const TableRow& r);
nlohmann::json rows_to_json(const std::vector<TableRow>& rows);

// CSV with fixed columns: base_weights, fiber_weights, ell, image_weights,
// degree, chi, fibers, note.  Vector entries are space-separated.
std::string rows_to_csv(const std::vector<TableRow>& rows);

}  // namespace wtwist
