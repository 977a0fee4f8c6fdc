#include "rrc/skeleton.hpp"

#include <stdexcept>

#include "rrc/intmath.hpp"
#include "rrc/operators.hpp"
#include "rrc/series_json.hpp"

namespace rrc {

const std::vector<SkeletonRule>& skeleton_rules() {
  static const std::vector<SkeletonRule> rules = {
      {SkeletonKind::A0, "a_0", 0, false, false, 1, -1},
      {SkeletonKind::A1, "a_1", 0, false, true, 0, 0},
      {SkeletonKind::B0, "b_0", 0, true, false, 2, -1},
      {SkeletonKind::B1, "b_1", 0, true, true, 0, 0},
      {SkeletonKind::C, "c", 1, false, false, 0, -1},
      {SkeletonKind::D0, "d_0", 1, true, false, 1, -1},
      {SkeletonKind::D1, "d_1", 1, true, true, -1, 2},
  };
  return rules;
}

const SkeletonRule& skeleton_rule(SkeletonKind k) {
  for (const auto& r : skeleton_rules()) {
    if (r.kind == k) return r;
  }
  throw std::invalid_argument("unknown skeleton kind");
}

std::int64_t skeleton_support(const SkeletonRule& r, std::int64_t n) {
  return ceil_div(n + r.u, 5);
}

std::int64_t skeleton_valuation(const SkeletonRule& r, std::int64_t m, std::int64_t n) {
  return floor_div(5 * m - n + r.v, 2);
}

Integer SkeletonArray::at(std::int64_t m, std::int64_t n) const {
  auto it = entries.find({m, n});
  return it == entries.end() ? Integer(0) : it->second;
}

namespace {

// The polynomial of the image that an array describes.
const TPolynomial& component(const TPolyPair& p, const SkeletonRule& r) {
  return r.y_is_p ? p.beta : p.alpha;
}

void store(SkeletonArray& a, const SkeletonRule& rule, std::int64_t m, std::int64_t n,
           const Integer& coeff) {
  const std::int64_t v = skeleton_valuation(rule, m, n);
  if (v < 0) {
    a.entries[{m, n}] = coeff * pow5(-v);
    a.flagged.emplace_back(m, n);
    return;
  }
  const Integer p = pow5(v);
  if (coeff % p != 0) {
    throw NonIntegralSkeleton(rule.name + "(" + std::to_string(m) + "," + std::to_string(n) +
                              "): 5^" + std::to_string(v) + " does not divide " + coeff.get_str());
  }
  a.entries[{m, n}] = coeff / p;
}

}  // namespace

std::vector<SkeletonArray> skeleton_init(const std::vector<Relation>& rels) {
  ImageTable tables[2] = {ImageTable(0, rels), ImageTable(1, rels)};
  std::vector<SkeletonArray> out;
  for (const SkeletonRule& rule : skeleton_rules()) {
    SkeletonArray a;
    a.kind = rule.kind;
    for (std::int64_t n = -4; n <= 0; ++n) {
      const TPolyPair& img = tables[rule.op].image(rule.arg_with_p, n);
      for (const auto& [m, c] : component(img, rule).terms()) store(a, rule, m, n, c);
    }
    a.max_n = 0;
    out.push_back(std::move(a));
  }
  return out;
}

void skeleton_extend(std::vector<SkeletonArray>& arrays, std::int64_t k) {
  const auto s = s_coeffs();
  for (SkeletonArray& a : arrays) {
    const SkeletonRule& rule = skeleton_rule(a.kind);
    for (std::int64_t n = a.max_n + 1; n <= k; ++n) {
      // Column n from columns n-5 .. n-1:
      // h(m, n) = -sum_{j,l} s(j,l) h(m-l, n+j-5) 5^e, with
      // e = v(m-l, n+j-5) + floor((5l+j-4)/2) - v(m, n), which is 0 or 1.
      std::map<std::int64_t, Integer> col;
      for (int j = 0; j < 5; ++j) {
        const std::int64_t src = n + j - 5;
        for (const auto& [key, h] : a.entries) {
          if (key.second != src) continue;
          for (int l = 1; l <= 5; ++l) {
            const std::int64_t m = key.first + l;
            const std::int64_t e = skeleton_valuation(rule, key.first, src) + skeleton_power(j, l) -
                                   skeleton_valuation(rule, m, n);
            if (e < 0) throw std::logic_error("negative excess power in the H recursion");
            col[m] -= s.at({j, l}) * h * pow5(e);
          }
        }
      }
      for (auto& [m, h] : col) {
        if (h != 0) a.entries[{m, n}] = std::move(h);
      }
    }
    a.max_n = std::max(a.max_n, k);
  }
}

TPolyPair skeleton_image(const std::vector<SkeletonArray>& arrays, int op, bool arg_with_p,
                         std::int64_t n) {
  TPolyPair out{{}, {}, 1 - op};
  for (const SkeletonArray& a : arrays) {
    const SkeletonRule& rule = skeleton_rule(a.kind);
    if (rule.op != op || rule.arg_with_p != arg_with_p) continue;
    if (n > a.max_n) throw std::out_of_range(rule.name + " is not extended to n = " + std::to_string(n));
    for (const auto& [key, h] : a.entries) {
      if (key.second != n) continue;
      const std::int64_t v = skeleton_valuation(rule, key.first, n);
      const Integer c = v >= 0 ? Integer(h * pow5(v)) : Integer(h / pow5(-v));
      (rule.y_is_p ? out.beta : out.alpha).add_term(key.first, c);
    }
  }
  return out;
}

CheckResult skeleton_support_check(const std::vector<SkeletonArray>& arrays) {
  CheckResult r{.name = "skeleton support bounds"};
  std::int64_t count = 0;
  for (const SkeletonArray& a : arrays) {
    const SkeletonRule& rule = skeleton_rule(a.kind);
    for (const auto& [key, h] : a.entries) {
      if (key.second < 0) continue;
      ++count;
      if (key.first < skeleton_support(rule, key.second)) {
        r.status = CheckStatus::Fail;
        r.details = rule.name + "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
                    ") = " + h.get_str() + " lies below the support bound";
        return r;
      }
    }
  }
  r.details = std::to_string(count) + " nonzero entries with n >= 0 respect the bounds";
  return r;
}

nlohmann::json skeleton_to_json(const std::vector<SkeletonArray>& arrays) {
  nlohmann::json out = nlohmann::json::array();
  for (const SkeletonArray& a : arrays) {
    const SkeletonRule& rule = skeleton_rule(a.kind);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, h] : a.entries) {
      entries.push_back({key.first, key.second, integer_to_json(h)});
    }
    nlohmann::json flagged = nlohmann::json::array();
    for (const auto& [m, n] : a.flagged) flagged.push_back({m, n});
    out.push_back({{"kind", rule.name},
                   {"operator", rule.op == 0 ? "U0" : "U1"},
                   {"support_offset", rule.u},
                   {"valuation_offset", rule.v},
                   {"max_n", a.max_n},
                   {"entries", entries},
                   {"flagged", flagged}});
  }
  return out;
}

}  // namespace rrc
