#include "rrc/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rrc/etaquot.hpp"
#include "rrc/induction.hpp"
#include "rrc/operators.hpp"
#include "rrc/relations.hpp"
#include "rrc/series_json.hpp"
#include "rrc/skeleton.hpp"

namespace rrc::cli {

std::int64_t default_precision() {
  if (const char* env = std::getenv("RRC_PRECISION")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
  }
  return 250;
}

bool Report::passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return false;
  }
  return true;
}

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) checks_json.push_back(check_to_json(c));
  nlohmann::json j = {{"command", command},
                      {"parameters", parameters},
                      {"status", passed() ? "pass" : "fail"},
                      {"checks", checks_json},
                      {"data", data}};
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << "\n";
  for (const auto& l : lines) os << "  " << l << "\n";
  std::size_t ok = 0;
  for (const auto& c : checks) {
    std::string tag = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP";
    os << "[" << tag << "] " << c.name;
    if (c.window_hi > c.window_lo) os << "  (window " << c.window_lo << ".." << c.window_hi << ")";
    if (!c.details.empty()) os << "  " << c.details;
    os << "\n";
    if (c.status != CheckStatus::Fail) ++ok;
  }
  os << ok << "/" << checks.size() << " checks without failure\n";
  return os.str();
}

namespace {

CheckResult from_exception(const std::string& name, const std::exception& e) {
  return {.name = name, .status = CheckStatus::Fail, .details = e.what()};
}

}  // namespace

Report cmd_verify_relations(const RunConfig& cfg, const std::optional<std::string>& table_path) {
  Report r{.command = "verify-relations"};
  const std::int64_t window = cfg.precision;
  r.parameters = {{"window", window}, {"relations", table_path ? *table_path : "built-in"}};
  const std::vector<Relation> rels = table_path ? load_relations(*table_path) : default_relations();
  r.checks = verify_group_relations(rels, window, cfg.parallel);
  r.checks.push_back(verify_principal_part_example(window));
  return r;
}

Report cmd_verify_modeq(const RunConfig& cfg) {
  Report r{.command = "verify-modeq"};
  r.parameters = {{"precision", cfg.precision}};
  r.checks.push_back(verify_modeq(cfg.precision));
  CheckResult s{.name = "s(j,l) integral"};
  try {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& [key, v] : s_coeffs()) {
      table.push_back({key.first, key.second, integer_to_json(v)});
    }
    r.data["s"] = table;
    s.details = "all 25 quotients are integers";
  } catch (const NonIntegralSkeleton& e) {
    s.status = CheckStatus::Fail;
    s.details = e.what();
  }
  r.checks.push_back(s);
  nlohmann::json a = nlohmann::json::array();
  for (int j = 0; j < 5; ++j) {
    a.push_back(tpoly_to_json(modeq_coeffs().a[j]));
    r.lines.push_back("a_" + std::to_string(j) + " = " + modeq_coeffs().a[j].to_string());
  }
  r.data["a"] = a;
  return r;
}

Report cmd_congruence(CongruenceTarget target, int n, int count, const RunConfig& cfg) {
  Report r{.command = "congruence"};
  const auto args = congruence_arguments(target, n, count);
  // The series must reach the largest argument; the depth is raised to fit.
  const std::int64_t depth = std::max<std::int64_t>(cfg.precision, args.empty() ? 1 : args.back() + 1);
  r.parameters = {{"target", to_string(target)}, {"n", n}, {"count", count}, {"depth", depth}};
  const CongruenceReport rep = check_congruence(target, n, count, Precision(depth));
  const std::string fn = target == CongruenceTarget::A1 ? "A_1" : "p";
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : rep.entries) {
    CheckResult c{.name = fn + "(" + std::to_string(e.m) + ") = 0 mod 5^" + std::to_string(n)};
    c.status = e.divisible ? CheckStatus::Pass : CheckStatus::Fail;
    c.details = e.value.get_str() + (e.divisible ? " = 5^" + std::to_string(n) + " * " + e.quotient.get_str()
                                                  : " is not divisible");
    r.checks.push_back(c);
    entries.push_back({{"m", e.m},
                       {"value", integer_to_json(e.value)},
                       {"divisible", e.divisible},
                       {"quotient", e.divisible ? integer_to_json(e.quotient) : nlohmann::json()}});
  }
  r.data["entries"] = entries;
  return r;
}

Report cmd_a1(std::int64_t m, const RunConfig& cfg) {
  Report r{.command = "a1"};
  if (m < 1) throw std::invalid_argument("a1 needs m >= 1");
  const std::int64_t depth = std::max(cfg.precision, m + 1);
  r.parameters = {{"m", m}, {"depth", depth}};
  const Integer series_value = a1_series(Precision(depth)).coeff(m);
  r.data["a1"] = integer_to_json(series_value);
  r.lines.push_back("A_1(" + std::to_string(m) + ") = " + series_value.get_str());
  if (m <= kBruteForceBound) {
    const RRProfile prof = a1_bruteforce(m);
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [l, c] : prof.counts) {
      counts[std::to_string(l)] = c;
      r.lines.push_back("R_" + std::to_string(l) + "(" + std::to_string(m) + ") = " + std::to_string(c));
    }
    r.data["R"] = counts;
    CheckResult c{.name = "brute force agrees with the generating function"};
    if (Integer(prof.a1) != series_value) {
      c.status = CheckStatus::Fail;
      c.details = "enumeration gives " + std::to_string(prof.a1);
    } else {
      c.details = "sum_l l R_l = " + std::to_string(prof.a1) + " over " + std::to_string(prof.total()) +
                  " partitions";
    }
    r.checks.push_back(c);
  }
  const PartitionTable table(m);
  CheckResult c{.name = "A_1(m) = sum_{r>=1} p(m - r^2)"};
  if (table.a1(m) != series_value) {
    c.status = CheckStatus::Fail;
    c.details = "partition sum gives " + table.a1(m).get_str();
  }
  r.checks.push_back(c);
  return r;
}

Report cmd_eta_check(const std::string& spec, const RunConfig& cfg) {
  Report r{.command = "eta-check"};
  const EtaQuotient e = EtaQuotient::parse(spec);
  r.parameters = {{"eta_quotient", e.to_string()}};
  const KinfVerdict v = kinf_check(e);
  const NewmanVerdict& nv = v.newman;
  r.data["newman"] = {{"exponent_sum", nv.exponent_sum},
                      {"weighted_sum", nv.weighted_sum},
                      {"coweighted_sum", nv.coweighted_sum},
                      {"product", integer_to_json(nv.product)},
                      {"square_root", nv.square_ok ? integer_to_json(nv.square_root) : nlohmann::json()}};
  CheckResult nc{.name = "Newman conditions",
                 .status = nv.pass() ? CheckStatus::Pass : CheckStatus::Fail};
  nc.details = "sum r = " + std::to_string(nv.exponent_sum) + ", sum delta r = " +
               std::to_string(nv.weighted_sum) + ", sum (N/delta) r = " + std::to_string(nv.coweighted_sum) +
               ", product = " + nv.product.get_str() +
               (nv.square_ok ? " = " + nv.square_root.get_str() + "^2" : " (not a square)");
  r.checks.push_back(nc);

  nlohmann::json orders = nlohmann::json::array();
  std::string listing;
  for (const auto& co : v.orders) {
    orders.push_back({{"cusp", co.cusp.to_string()}, {"order", co.order.get_str()}});
    listing += (listing.empty() ? "" : ", ") + co.cusp.to_string() + ": " + co.order.get_str();
  }
  r.data["orders"] = orders;
  r.lines.push_back("orders " + listing);

  CheckResult kc{.name = "holomorphic away from infinity",
                 .status = v.pass() ? CheckStatus::Pass : CheckStatus::Fail};
  if (!nv.pass()) {
    kc.details = "not modular by the Newman conditions";
  } else if (v.offending) {
    kc.details = "negative order at " + v.offending->to_string();
  }
  r.checks.push_back(kc);

  CheckResult lc{.name = "order at infinity matches the expansion"};
  if (e.weighted_sum() % 24 != 0) {
    lc.status = CheckStatus::Skipped;
    lc.details = "leading power is fractional";
  } else {
    const LaurentSeries s = expand(e, Precision(std::max<std::int64_t>(16, e.weighted_sum() / 24 + 16)));
    const Rational at_inf = ligozat_order(e, Cusp{1, e.level(), e.level()});
    lc.details = "leading exponent " + std::to_string(s.order()) + ", order at 1/" +
                 std::to_string(e.level()) + " " + at_inf.get_str();
    if (Rational(s.order()) != at_inf) lc.status = CheckStatus::Fail;
    r.lines.push_back("expansion " + s.to_string(8));
  }
  r.checks.push_back(lc);
  (void)cfg;
  return r;
}

Report cmd_theorem8(int n_max, std::int64_t window, std::int64_t direct_window, int random,
                    const RunConfig& cfg, const std::optional<std::string>& dump_dir) {
  Report r{.command = "theorem8"};
  r.parameters = {{"n_max", n_max}, {"window", window}, {"direct_window", direct_window}, {"random", random}};
  Theorem8Options opts;
  opts.n_max = n_max;
  opts.window = window;
  opts.direct_window = direct_window;
  const Theorem8Report rep = theorem8_check(opts);
  for (const auto& s : rep.steps) {
    for (const CheckResult* c : {&s.integrality, &s.series_match, &s.decomposition, &s.membership}) {
      r.checks.push_back(*c);
    }
    r.lines.push_back("L_" + std::to_string(s.n) + ": degree " + std::to_string(s.degree) + " in t, S_" +
                      std::to_string(s.j) + ", divided by 5^" + std::to_string(s.claimed_power));
  }
  r.data = theorem8_to_json(rep);
  if (random > 0) {
    // Support 6 keeps every image below degree 34, which a window of 72 resolves.
    const auto inst = theorem7_random(random, 6, 20240501, 72);
    std::size_t ok[2] = {0, 0};
    std::vector<std::string> bad;
    for (const auto& i : inst) {
      if (i.check.passed()) {
        ++ok[i.input.j];
      } else {
        bad.push_back(i.input.to_string() + ": " + i.check.details);
      }
    }
    for (int j = 0; j < 2; ++j) {
      CheckResult c{.name = "U maps X^(" + std::to_string(j) + ") into X^(" + std::to_string(1 - j) +
                            ") on random elements"};
      c.details = std::to_string(ok[j]) + "/" + std::to_string(random) + " certified";
      if (ok[j] != static_cast<std::size_t>(random)) c.status = CheckStatus::Fail;
      r.checks.push_back(c);
    }
    for (const auto& b : bad) r.lines.push_back("random failure " + b);
  }
  if (dump_dir) {
    std::filesystem::create_directories(*dump_dir);
    for (const auto& s : rep.steps) {
      nlohmann::json j = {{"n", s.n},
                          {"claimed_power", s.claimed_power},
                          {"pair", pair_to_json(s.pair)},
                          {"certificate", s.certificate ? certificate_to_json(*s.certificate) : nlohmann::json()}};
      std::ofstream out(std::filesystem::path(*dump_dir) / ("L_" + std::to_string(s.n) + ".json"));
      out << j.dump(1) << "\n";
    }
  }
  (void)cfg;
  return r;
}

Report cmd_skeleton(int n_max, const RunConfig& cfg) {
  Report r{.command = "skeleton"};
  const std::int64_t window = std::min<std::int64_t>(cfg.precision, 30);
  r.parameters = {{"n_max", n_max}, {"window", window}};
  const std::vector<Relation>& rels = default_relations();
  std::vector<SkeletonArray> arrays;
  try {
    arrays = skeleton_init(rels);
    skeleton_extend(arrays, n_max);
  } catch (const std::exception& e) {
    r.checks.push_back(from_exception("skeleton construction", e));
    return r;
  }
  r.checks.push_back(skeleton_support_check(arrays));
  ImageTable tables[2] = {ImageTable(0, rels), ImageTable(1, rels)};
  for (int op = 0; op < 2; ++op) {
    for (bool with_p : {false, true}) {
      for (int n = 1; n <= n_max; ++n) {
        Relation spec{.group = "", .op = op, .factor_p = with_p ? op : -1, .power = n};
        CheckResult c{.name = "skeleton " + spec.lhs_text(), .window_hi = window};
        const TPolyPair img = skeleton_image(arrays, op, with_p, n);
        if (img != tables[op].image(with_p, n)) {
          c.status = CheckStatus::Fail;
          c.details = "differs from the polynomial recursion";
        } else if (auto m = first_mismatch(reconstruct(img, window), relation_lhs(spec, window))) {
          c.status = CheckStatus::Fail;
          c.mismatch = *m;
          c.details = "differs from direct U_5 at q^" + std::to_string(*m);
        } else {
          c.details = "matches direct U_5 and the recursion";
        }
        r.checks.push_back(c);
      }
    }
  }
  r.data["arrays"] = skeleton_to_json(arrays);
  for (const auto& a : arrays) {
    const auto& rule = skeleton_rule(a.kind);
    std::string line = rule.name + ": " + std::to_string(a.entries.size()) + " entries";
    for (const auto& [m, n] : a.flagged) {
      line += ", corner (" + std::to_string(m) + "," + std::to_string(n) + ") has negative power";
    }
    r.lines.push_back(line);
  }
  return r;
}

Report cmd_series(NamedFunction f, const RunConfig& cfg) {
  Report r{.command = "series"};
  r.parameters = {{"name", to_string(f)}, {"precision", cfg.precision}};
  const LaurentSeries s = named(f, Precision(cfg.precision));
  r.data["series"] = series_to_json(s);
  r.data["prec"] = s.prec();
  r.lines.push_back(to_string(f) + " = " + s.to_string(16));
  CheckResult c{.name = "leading exponent " + std::to_string(leading_exponent(f))};
  if (s.order() != leading_exponent(f)) {
    c.status = CheckStatus::Fail;
    c.details = "expansion starts at q^" + std::to_string(s.order());
  }
  r.checks.push_back(c);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw CLI::ValidationError("--parallel", "expected true or false, got '" + s + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series checks for the A_1(m) congruences modulo powers of 5", "rrc"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.precision = default_precision();
  std::string json_path;
  std::string parallel = "false";
  app.add_option("--precision", cfg.precision, "Working depth / window (default 250 or $RRC_PRECISION)");
  app.add_option("--json", json_path, "Write the JSON report to this path ('-' for stdout)");
  app.add_option("--parallel", parallel, "Run independent checks in parallel (true/false)");
  app.add_flag("--timing", cfg.timing, "Include elapsed_ms in the JSON report");

  std::optional<std::string> relations_path;
  auto* vr = app.add_subcommand("verify-relations", "Check the twenty relations and the principal part");
  vr->add_option("--relations", relations_path, "Relation table (JSON) instead of the built-in one");

  app.add_subcommand("verify-modeq", "Check the modular equation for t and the s(j,l) table");

  std::string target = "a1";
  int cong_n = 1, cong_count = 5;
  auto* cg = app.add_subcommand("congruence", "Check divisibility along a congruence family");
  cg->add_option("--target", target, "a1 or p");
  cg->add_option("--n", cong_n, "Power of 5")->check(CLI::Range(1, 12));
  cg->add_option("--count", cong_count, "Number of arguments")->check(CLI::Range(1, 100000));

  std::int64_t a1_m = 0;
  auto* a1 = app.add_subcommand("a1", "A_1(m) with its R_l(m) profile");
  a1->add_option("m", a1_m, "Argument")->required()->check(CLI::PositiveNumber);

  std::string eta_spec;
  auto* eta = app.add_subcommand("eta-check", "Newman conditions and cusp orders of an eta quotient");
  eta->add_option("quotient", eta_spec, "Eta quotient, e.g. \"N=20; 1:0 2:-2 4:4 5:0 10:2 20:-4\"")->required();

  int t8_n = 3;
  std::int64_t t8_window = 60, t8_direct = 8;
  std::optional<std::string> dump_dir;
  int t8_random = 20;
  auto* t8 = app.add_subcommand("theorem8", "Certify L_1 .. L_(2 n-max) in X^(0) / X^(1)");
  t8->add_option("--random", t8_random, "Random elements of each X^(j) to push through U")
      ->check(CLI::Range(0, 1000));
  t8->add_option("--n-max", t8_n, "Certify through L_(2 n-max)")->check(CLI::Range(1, 4));
  t8->add_option("--window", t8_window, "Series window for the U-iteration cross-check")
      ->check(CLI::Range(16, 2000));
  t8->add_option("--direct-window", t8_direct, "Window for the a(m) cross-check beyond L_4")
      ->check(CLI::Range(0, 200));
  t8->add_option("--dump-certificates", dump_dir, "Write one certificate file per n into this directory");

  int sk_n = 10;
  auto* sk = app.add_subcommand("skeleton", "Build and cross-check the skeleton arrays");
  sk->add_option("--n-max", sk_n, "Extend through column n")->check(CLI::Range(1, 200));

  std::string series_name;
  auto* se = app.add_subcommand("series", "Print a named q-expansion");
  se->add_option("name", series_name, "t, rho, sigma, mu, p0, p1 or A")->required();

  try {
    app.parse(argc, argv);
    cfg.parallel = parse_bool(parallel);
    if (cfg.precision < 16) throw CLI::ValidationError("--precision", "must be at least 16");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!json_path.empty()) cfg.json_path = json_path;

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*vr) {
      report = cmd_verify_relations(cfg, relations_path);
    } else if (app.got_subcommand("verify-modeq")) {
      report = cmd_verify_modeq(cfg);
    } else if (*cg) {
      report = cmd_congruence(congruence_target_from_string(target), cong_n, cong_count, cfg);
    } else if (*a1) {
      report = cmd_a1(a1_m, cfg);
    } else if (*eta) {
      report = cmd_eta_check(eta_spec, cfg);
    } else if (*t8) {
      report = cmd_theorem8(t8_n, t8_window, t8_direct, t8_random, cfg, dump_dir);
    } else if (*sk) {
      report = cmd_skeleton(sk_n, cfg);
    } else if (*se) {
      report = cmd_series(named_function_from_string(series_name), cfg);
    }
  } catch (const std::invalid_argument& e) {
    err << "rrc: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "rrc: " << e.what() << "\n";
    return 1;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  out << report.to_text();
  if (cfg.json_path) {
    const std::string text = report.to_json(cfg.timing).dump(2) + "\n";
    if (*cfg.json_path == "-") {
      out << text;
    } else {
      std::ofstream f(*cfg.json_path);
      if (!f) {
        err << "rrc: cannot write " << *cfg.json_path << "\n";
        return 1;
      }
      f << text;
    }
  }
  return report.exit_code();
}

}  // namespace rrc::cli
