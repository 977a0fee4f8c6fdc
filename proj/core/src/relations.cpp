#include "rrc/relations.hpp"

#include <fstream>
#include <future>
#include <stdexcept>

#include "rrc/functions.hpp"
#include "rrc/operators.hpp"

namespace rrc {

namespace detail {
extern const char* const kRelationsJson;
}

std::string Relation::lhs_text() const {
  std::string arg;
  if (factor_p >= 0) arg = "p" + std::to_string(factor_p);
  if (power != 0 || arg.empty()) {
    if (!arg.empty()) arg += " ";
    arg += power == 0 ? "1" : "t^" + std::to_string(power);
  }
  return std::string(op == 0 ? "U0" : "U1") + "{" + arg + "}";
}

std::string Relation::rhs_text() const {
  std::string s = const_poly.is_zero() ? "" : const_poly.to_string();
  if (!p_poly.is_zero()) {
    if (!s.empty()) s += " + ";
    s += "p" + std::to_string(p_index) + "*(" + p_poly.to_string() + ")";
  }
  return s.empty() ? "0" : s;
}

std::string Relation::name() const {
  return "Group " + group + " #" + std::to_string(index) + ": " + lhs_text();
}

const std::vector<Relation>& default_relations() {
  static const std::vector<Relation> rels =
      relations_from_json(nlohmann::json::parse(detail::kRelationsJson));
  return rels;
}

namespace {

std::string op_name(int op) { return op == 0 ? "U0" : "U1"; }

int parse_op(const std::string& s) {
  if (s == "U0") return 0;
  if (s == "U1") return 1;
  throw std::invalid_argument("unknown operator '" + s + "'");
}

int parse_p(const std::string& s, bool allow_one) {
  if (allow_one && s == "1") return -1;
  if (s == "p0") return 0;
  if (s == "p1") return 1;
  throw std::invalid_argument("unknown factor '" + s + "'");
}

}  // namespace

nlohmann::json relations_to_json(const std::vector<Relation>& rels) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Relation& r : rels) {
    arr.push_back({{"group", r.group},
                   {"index", r.index},
                   {"n", r.power},
                   {"lhs",
                    {{"op", op_name(r.op)},
                     {"factor", r.factor_p < 0 ? "1" : "p" + std::to_string(r.factor_p)},
                     {"power", r.power}}},
                   {"rhs",
                    {{"const_poly", tpoly_to_json(r.const_poly)},
                     {"p", "p" + std::to_string(r.p_index)},
                     {"p_poly", tpoly_to_json(r.p_poly)}}}});
  }
  return {{"relations", arr}};
}

std::vector<Relation> relations_from_json(const nlohmann::json& j) {
  const nlohmann::json& arr = j.is_array() ? j : j.at("relations");
  std::vector<Relation> out;
  for (const auto& e : arr) {
    Relation r;
    r.group = e.at("group").get<std::string>();
    r.index = e.value("index", static_cast<int>(out.size()) + 1);
    const auto& lhs = e.at("lhs");
    r.op = parse_op(lhs.at("op").get<std::string>());
    r.factor_p = parse_p(lhs.value("factor", std::string("1")), true);
    r.power = lhs.contains("power") ? lhs.at("power").get<std::int64_t>()
                                    : e.at("n").get<std::int64_t>();
    const auto& rhs = e.at("rhs");
    r.const_poly = tpoly_from_json(rhs.value("const_poly", nlohmann::json::array()));
    r.p_poly = tpoly_from_json(rhs.value("p_poly", nlohmann::json::array()));
    r.p_index = rhs.contains("p") ? parse_p(rhs.at("p").get<std::string>(), false) : 1 - r.op;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Relation> load_relations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return relations_from_json(nlohmann::json::parse(in));
}

namespace {

// Series shared by all relation checks at one window.
struct Workspace {
  std::int64_t window;
  std::int64_t depth;  // argument precision for the left sides
  PowerCache t_big;
  PowerCache t_small;

  explicit Workspace(std::int64_t w)
      : window(w),
        depth(5 * w + 8),
        t_big(named(NamedFunction::T, Precision(5 * w + 80)), 5 * w + 8),
        t_small(named(NamedFunction::T, Precision(w + 80)), w + 8) {}

  LaurentSeries lhs(const Relation& r) {
    LaurentSeries arg = t_big.power(r.power);
    if (r.factor_p >= 0) arg = mul(named_p(r.factor_p, Precision(depth - r.power)), arg);
    return U(r.op, arg, window);
  }

  LaurentSeries rhs(const Relation& r) {
    LaurentSeries s = evaluate(r.const_poly, t_small);
    if (!r.p_poly.is_zero()) {
      s = add(s, mul(named_p(r.p_index, Precision(window + 8)), evaluate(r.p_poly, t_small)));
    }
    return s.truncate(window);
  }

  CheckResult check(const Relation& r) {
    CheckResult res{.name = r.name(), .window_hi = window};
    try {
      const LaurentSeries a = lhs(r);
      const LaurentSeries b = rhs(r);
      res.window_lo = std::min(a.order(), b.order());
      if (res.window_lo >= window) res.window_lo = 0;
      if (a.prec() < window || b.prec() < window) {
        res.status = CheckStatus::Fail;
        res.details = "window fell short";
      } else if (auto m = first_mismatch(a, b)) {
        res.status = CheckStatus::Fail;
        res.mismatch = *m;
        res.details = "sides differ at q^" + std::to_string(*m) + ": " +
                      a.coeff(*m).get_str() + " vs " + b.coeff(*m).get_str();
      } else {
        res.details = "= " + r.rhs_text();
      }
    } catch (const std::exception& e) {
      res.status = CheckStatus::Fail;
      res.details = e.what();
    }
    return res;
  }
};

}  // namespace

LaurentSeries relation_lhs(const Relation& r, std::int64_t window) {
  return Workspace(window).lhs(r);
}

LaurentSeries relation_rhs(const Relation& r, std::int64_t window) {
  return Workspace(window).rhs(r);
}

CheckResult verify_relation(const Relation& r, std::int64_t window) {
  return Workspace(window).check(r);
}

std::vector<CheckResult> verify_group_relations(const std::vector<Relation>& rels,
                                                std::int64_t window, bool parallel) {
  Workspace ws(window);
  // Warm the shared caches so that parallel workers only read them.
  named(NamedFunction::A, Precision(5 * window + 8));
  named(NamedFunction::P0, Precision(ws.depth + 8));
  named(NamedFunction::P1, Precision(ws.depth + 8));
  std::vector<CheckResult> out(rels.size());
  if (!parallel) {
    for (std::size_t i = 0; i < rels.size(); ++i) out[i] = ws.check(rels[i]);
    return out;
  }
  std::vector<std::future<CheckResult>> jobs;
  for (const Relation& r : rels) {
    jobs.push_back(std::async(std::launch::async, [&ws, &r] { return ws.check(r); }));
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i].get();
  return out;
}

}  // namespace rrc
