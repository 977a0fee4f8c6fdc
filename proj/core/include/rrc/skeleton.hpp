#pragma once

// Normalized coefficient arrays h(m, n) of the operator images:
// coefficient of y t^m in U^(j){g t^n} = h(m, n) 5^floor((5m - n + v)/2).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rrc/check.hpp"
#include "rrc/induction.hpp"
#include "rrc/relations.hpp"

namespace rrc {

enum class SkeletonKind { A0, A1, B0, B1, C, D0, D1 };

struct SkeletonRule {
  SkeletonKind kind;
  std::string name;  // a_0, a_1, ...
  int op;            // U^(op)
  bool arg_with_p;   // argument p_op t^n instead of t^n
  bool y_is_p;       // the array multiplies p_(1-op) t^m instead of t^m
  int u;             // entries vanish for m < ceil((n + u) / 5)
  int v;             // prescribed power floor((5m - n + v) / 2)
};

const std::vector<SkeletonRule>& skeleton_rules();
const SkeletonRule& skeleton_rule(SkeletonKind k);

std::int64_t skeleton_support(const SkeletonRule& r, std::int64_t n);
std::int64_t skeleton_valuation(const SkeletonRule& r, std::int64_t m, std::int64_t n);

struct SkeletonArray {
  SkeletonKind kind = SkeletonKind::A0;
  std::map<std::pair<std::int64_t, std::int64_t>, Integer> entries;  // (m, n) -> h(m, n)
  /// Corners where the prescribed power is negative; the entry is then the
  /// coefficient times 5^(-power).
  std::vector<std::pair<std::int64_t, std::int64_t>> flagged;
  std::int64_t max_n = 0;

  Integer at(std::int64_t m, std::int64_t n) const;
};

/// Arrays for n = -4..0 from the relation table. Throws NonIntegralSkeleton
/// if a coefficient is not divisible by its prescribed power.
std::vector<SkeletonArray> skeleton_init(const std::vector<Relation>& rels);

/// Extends every array through column k with the H recursion.
void skeleton_extend(std::vector<SkeletonArray>& arrays, std::int64_t k);

/// Reassembles U^(op){t^n} or U^(op){p_op t^n} from the arrays.
TPolyPair skeleton_image(const std::vector<SkeletonArray>& arrays, int op, bool arg_with_p,
                         std::int64_t n);

/// Entries outside the support bounds must vanish for n >= 0.
CheckResult skeleton_support_check(const std::vector<SkeletonArray>& arrays);

nlohmann::json skeleton_to_json(const std::vector<SkeletonArray>& arrays);

}  // namespace rrc
