#pragma once

// JSON encoding for series and big integers. Integers are always written as
// decimal strings.

#include <nlohmann/json.hpp>

#include "rrc/qseries.hpp"

namespace rrc {

nlohmann::json integer_to_json(const Integer& n);
Integer integer_from_json(const nlohmann::json& j);

/// [[exponent, "coefficient"], ...] over the nonzero terms.
nlohmann::json series_to_json(const LaurentSeries& f);
LaurentSeries series_from_json(const nlohmann::json& j, std::int64_t prec = kExact);

}  // namespace rrc
