#pragma once

// The twenty fundamental relations U^(j){t^n} and U^(j){p_j t^n}, n = -4..0,
// stored as data and checked as truncated series identities.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rrc/check.hpp"
#include "rrc/qseries.hpp"
#include "rrc/tpoly.hpp"

namespace rrc {

/// U^(op){factor * t^power} = const_poly(t) + p_{p_index} * p_poly(t).
/// factor_p is -1 for the plain t^n argument, otherwise 0 or 1 for p_0 / p_1.
struct Relation {
  std::string group;
  int index = 0;
  int op = 0;
  int factor_p = -1;
  std::int64_t power = 0;
  TPolynomial const_poly;
  int p_index = 1;
  TPolynomial p_poly;

  std::string name() const;
  std::string lhs_text() const;
  std::string rhs_text() const;
};

/// The built-in table (Groups I-IV).
const std::vector<Relation>& default_relations();

nlohmann::json relations_to_json(const std::vector<Relation>& rels);
std::vector<Relation> relations_from_json(const nlohmann::json& j);
std::vector<Relation> load_relations(const std::string& path);

/// Left side to `window` coefficients, by direct U_5 extraction.
LaurentSeries relation_lhs(const Relation& r, std::int64_t window);
/// Right side evaluated as a series.
LaurentSeries relation_rhs(const Relation& r, std::int64_t window);

CheckResult verify_relation(const Relation& r, std::int64_t window);
/// Results come back in table order whether or not the checks run in parallel.
std::vector<CheckResult> verify_group_relations(const std::vector<Relation>& rels,
                                                std::int64_t window, bool parallel = false);

}  // namespace rrc
