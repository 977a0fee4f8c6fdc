#include "rrc/series_json.hpp"

#include <stdexcept>

namespace rrc {

nlohmann::json integer_to_json(const Integer& n) { return n.get_str(); }

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    Integer n;
    if (n.set_str(j.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("not a decimal integer: " + j.get<std::string>());
    }
    return n;
  }
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw std::invalid_argument("expected an integer or decimal string");
}

nlohmann::json series_to_json(const LaurentSeries& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) out.push_back({e, integer_to_json(c)});
  return out;
}

LaurentSeries series_from_json(const nlohmann::json& j, std::int64_t prec) {
  std::vector<std::pair<std::int64_t, Integer>> terms;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) {
      throw std::invalid_argument("series terms must be [exponent, coefficient] pairs");
    }
    terms.emplace_back(entry[0].get<std::int64_t>(), integer_from_json(entry[1]));
  }
  return LaurentSeries::from_terms(terms, prec);
}

}  // namespace rrc
