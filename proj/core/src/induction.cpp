#include "rrc/induction.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "rrc/functions.hpp"
#include "rrc/intmath.hpp"
#include "rrc/operators.hpp"
#include "rrc/series_json.hpp"

namespace rrc {

Lambda lambda_of(int n) {
  if (n < 1) throw std::invalid_argument("lambda_n needs n >= 1");
  const Integer m = pow5(n);
  const Integer num = (n % 2 == 1 ? 19 : 23) * m + 1;
  if (num % 24 != 0) throw std::logic_error("lambda closed form is not integral");
  Lambda l{n, num / 24};
  // Minimality: the solution is unique modulo 5^n.
  if (l.value <= 0 || l.value >= m || (24 * l.value - 1) % m != 0) {
    throw std::logic_error("lambda closed form is not the minimal solution");
  }
  return l;
}

std::int64_t claimed_power(int n) { return n / 2; }

std::vector<std::int64_t> lambda_recurrence_failures(int n_max) {
  std::vector<std::int64_t> bad;
  for (int n = 1; n <= n_max; ++n) {
    const bool even_ok =
        pow5(2 * n) - pow5(2 * n - 1) + lambda_of(2 * n - 1).value == lambda_of(2 * n).value;
    const bool odd_ok =
        pow5(2 * n + 1) - 2 * pow5(2 * n) + lambda_of(2 * n).value == lambda_of(2 * n + 1).value;
    if (!even_ok || !odd_ok) bad.push_back(n);
  }
  return bad;
}

// ---------------------------------------------------------------------------
// L_n

std::int64_t ln_direct_max_argument(int n, std::int64_t window) {
  if (n == 0) return 0;
  const Integer v = pow5(n) * std::max<std::int64_t>(window - 2, 0) + lambda_of(n).value;
  return v.get_si();
}

LnValue ln_direct(int n, std::int64_t window, const PartitionTable* table) {
  if (n < 0) throw std::invalid_argument("ln_direct needs n >= 0");
  if (n == 0) return {0, LaurentSeries::constant(1, window), 0};
  std::unique_ptr<PartitionTable> own;
  const std::int64_t need = ln_direct_max_argument(n, window);
  if (table == nullptr) {
    own = std::make_unique<PartitionTable>(need);
    table = own.get();
  }
  if (table->max_m() < need) {
    throw InsufficientPrecision("partition table reaches " + std::to_string(table->max_m()) +
                                ", L_" + std::to_string(n) + " needs " + std::to_string(need));
  }
  const Precision p(window);
  const LaurentSeries pre =
      n % 2 == 1 ? mul(mul(euler_product(3, 5, p), euler_product(2, 20, p)), euler_product(-5, 10, p))
                 : mul(mul(euler_product(3, 1, p), euler_product(2, 4, p)), euler_product(-5, 2, p));
  const Integer step = pow5(n);
  const Integer lam = lambda_of(n).value;
  std::vector<Integer> c;
  for (std::int64_t m = 0; m + 1 < window; ++m) {
    const Integer arg = step * m + lam;
    c.push_back(table->a(arg.get_si()));
  }
  const LaurentSeries sum = LaurentSeries::from_coeffs(1, std::move(c), window);
  return {n, mul(pre, sum).truncate(window), claimed_power(n)};
}

std::int64_t ln_iterate_budget(int n, std::int64_t window) {
  return Integer(pow5(n) * window).get_si();
}

std::vector<LaurentSeries> ln_chain(int n, std::int64_t window) {
  std::vector<LaurentSeries> out{LaurentSeries::constant(1)};
  for (int k = 1; k <= n; ++k) {
    const std::int64_t w = Integer(pow5(n - k) * window).get_si();
    out.push_back(U(operator_for(k), out.back(), w));
  }
  return out;
}

LnValue ln_iterate(int n, std::int64_t window) {
  if (n < 0) throw std::invalid_argument("ln_iterate needs n >= 0");
  if (n == 0) return {0, LaurentSeries::constant(1, window), 0};
  return {n, ln_chain(n, window).back(), claimed_power(n)};
}

// ---------------------------------------------------------------------------
// Pairs

TPolyPair TPolyPair::operator+(const TPolyPair& o) const {
  if (o.j != j) throw std::invalid_argument("adding pairs with different p_j");
  return {alpha + o.alpha, beta + o.beta, j};
}

TPolyPair TPolyPair::scaled(const Integer& c) const { return {alpha.scaled(c), beta.scaled(c), j}; }

TPolyPair TPolyPair::times(const TPolynomial& p) const { return {alpha * p, beta * p, j}; }

std::optional<TPolyPair> TPolyPair::divided(const Integer& d) const {
  TPolyPair r{{}, {}, j};
  for (const auto& [k, c] : alpha.terms()) {
    if (c % d != 0) return std::nullopt;
    r.alpha.add_term(k, c / d);
  }
  for (const auto& [k, c] : beta.terms()) {
    if (c % d != 0) return std::nullopt;
    r.beta.add_term(k, c / d);
  }
  return r;
}

std::optional<std::int64_t> TPolyPair::degree() const {
  auto a = alpha.degree();
  auto b = beta.degree();
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

std::string TPolyPair::to_string() const {
  std::string s = alpha.to_string();
  if (!beta.is_zero()) s += " + p" + std::to_string(j) + "*(" + beta.to_string() + ")";
  return s;
}

nlohmann::json pair_to_json(const TPolyPair& p) {
  return {{"j", p.j}, {"g_alpha", tpoly_to_json(p.alpha)}, {"g_beta", tpoly_to_json(p.beta)}};
}

LaurentSeries reconstruct(const TPolyPair& p, std::int64_t window) {
  // t^d and p_j t^d vanish below q^d and q^(d+1), so high terms are skipped.
  std::int64_t low = 0;
  if (auto l = p.alpha.low_degree()) low = std::min(low, *l);
  if (auto l = p.beta.low_degree()) low = std::min(low, *l);
  const std::int64_t slack = 8 - 2 * low;
  PowerCache tp(named(NamedFunction::T, Precision(window + slack + 64)), window + slack);
  LaurentSeries a = LaurentSeries::zero(window);
  for (const auto& [d, c] : p.alpha.terms()) {
    if (d < window) a = add(a, scale(tp.power(d), c));
  }
  LaurentSeries b = LaurentSeries::zero(window + slack);
  for (const auto& [d, c] : p.beta.terms()) {
    if (d + 1 < window) b = add(b, scale(tp.power(d), c));
  }
  if (!b.is_zero()) a = add(a, mul(named_p(p.j, Precision(window + slack)), b));
  return a.truncate(window);
}

// ---------------------------------------------------------------------------
// Decomposition by exact elimination

namespace {

// Row-reduces the augmented integer matrix in place (fraction-free, rows
// kept primitive) and returns the pivot column of each pivot row.
std::vector<std::size_t> echelon(std::vector<std::vector<Integer>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Integer pv = rows[r][c];
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Integer f = rows[i][c];
      Integer g = 0;
      for (std::size_t k = c; k < rows[i].size(); ++k) {
        rows[i][k] = pv * rows[i][k] - f * rows[r][k];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rows[i][k].get_mpz_t());
      }
      if (g > 1) {
        for (std::size_t k = c; k < rows[i].size(); ++k) mpz_divexact(rows[i][k].get_mpz_t(), rows[i][k].get_mpz_t(), g.get_mpz_t());
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

TPolyPair decompose(const LaurentSeries& f, int j, std::int64_t max_deg) {
  if (j != 0 && j != 1) throw std::invalid_argument("decompose needs j in {0, 1}");
  if (max_deg < 0) throw std::invalid_argument("decompose needs max_deg >= 0");
  if (!f.is_zero() && f.min_exp() < 0) {
    throw NoRepresentation("input has a pole at q = 0; S_j elements are power series");
  }
  const std::int64_t window = f.prec();
  if (f.is_exact() || window < 2 * max_deg + 4) {
    throw NoRepresentation("window of " + std::to_string(window) + " coefficients is too short for degree " +
                           std::to_string(max_deg) + "; retry with at least " +
                           std::to_string(2 * max_deg + 4));
  }
  const std::size_t n = static_cast<std::size_t>(max_deg + 1);
  PowerCache tp(named(NamedFunction::T, Precision(window + 64)), window + 2);
  const LaurentSeries pj = named_p(j, Precision(window + 2));

  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(window),
                                         std::vector<Integer>(2 * n + 1));
  for (std::size_t k = 0; k < n; ++k) {
    const LaurentSeries tk = tp.power(static_cast<std::int64_t>(k));
    const LaurentSeries ptk = mul(pj, tk);
    for (std::int64_t e = 0; e < window; ++e) {
      rows[e][k] = tk.coeff(e);
      rows[e][n + k] = ptk.coeff(e);
    }
  }
  for (std::int64_t e = 0; e < window; ++e) rows[e][2 * n] = f.coeff(e);

  const std::vector<std::size_t> piv = echelon(rows, 2 * n + 1);
  if (!piv.empty() && piv.back() == 2 * n) {
    throw NoRepresentation("no element of S_" + std::to_string(j) + " of degree <= " +
                           std::to_string(max_deg) + " matches the window");
  }
  if (piv.size() < 2 * n) {
    throw NoRepresentation("window does not determine all " + std::to_string(2 * n) +
                           " unknowns; retry at higher precision");
  }
  std::vector<Rational> x(2 * n);
  for (std::size_t i = piv.size(); i-- > 0;) {
    const std::size_t c = piv[i];
    Rational acc(rows[i][2 * n]);
    for (std::size_t k = c + 1; k < 2 * n; ++k) {
      if (rows[i][k] != 0) acc -= Rational(rows[i][k]) * x[k];
    }
    x[c] = acc / Rational(rows[i][c]);
    x[c].canonicalize();
  }
  TPolyPair out{{}, {}, j};
  for (std::size_t k = 0; k < 2 * n; ++k) {
    if (x[k].get_den() != 1) {
      throw NonIntegralCoefficients("coefficient of " + std::string(k < n ? "" : "p_j ") + "t^" +
                                    std::to_string(k % n) + " is " + x[k].get_str());
    }
    if (k < n) {
      out.alpha.add_term(static_cast<std::int64_t>(k), x[k].get_num());
    } else {
      out.beta.add_term(static_cast<std::int64_t>(k - n), x[k].get_num());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

std::int64_t required_valuation(int j, bool with_p, std::int64_t d) {
  if (with_p) return floor_div(5 * d, 2);
  return floor_div(5 * d - (j == 0 ? 3 : 1), 2);
}

std::int64_t ValuationCertificate::min_margin() const {
  std::int64_t m = kExact;
  for (const auto& t : terms) m = std::min(m, t.margin);
  return m;
}

ValuationCertificate x_membership(const TPolyPair& pair) {
  ValuationCertificate cert{pair.j, {}, {}};
  auto visit = [&](const TPolynomial& poly, bool with_p) {
    for (const auto& [d, c] : poly.terms()) {
      const std::string basis =
          (with_p ? "p" + std::to_string(pair.j) + " " : std::string()) + "t^" + std::to_string(d);
      if (d < 0 || (!with_p && d == 0)) {
        cert.violations.push_back(basis + " is not in the basis of X^(" + std::to_string(pair.j) +
                                  ")");
        continue;
      }
      CertificateTerm t;
      t.with_p = with_p;
      t.degree = d;
      t.coeff = c;
      t.required = required_valuation(pair.j, with_p, d);
      t.actual = valuation5(c);
      t.margin = t.actual - t.required;
      if (t.margin >= 0) {
        t.quotient = c / pow5(t.required);
      } else {
        cert.violations.push_back(basis + " has valuation " + std::to_string(t.actual) +
                                  ", needs " + std::to_string(t.required));
      }
      cert.terms.push_back(std::move(t));
    }
  };
  visit(pair.beta, true);
  visit(pair.alpha, false);
  return cert;
}

nlohmann::json certificate_to_json(const ValuationCertificate& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : c.terms) {
    terms.push_back({{"basis", t.with_p ? "p" + std::to_string(c.j) : "1"},
                     {"degree", t.degree},
                     {"coeff", integer_to_json(t.coeff)},
                     {"required_val", t.required},
                     {"actual_val", t.actual},
                     {"margin", t.margin},
                     {"quotient", t.margin >= 0 ? integer_to_json(t.quotient) : nlohmann::json()}});
  }
  return {{"j", c.j},
          {"member", c.member()},
          {"min_margin", c.terms.empty() ? nlohmann::json() : nlohmann::json(c.min_margin())},
          {"violations", c.violations},
          {"terms", terms}};
}

// ---------------------------------------------------------------------------
// Images by the five-term t recursion

ImageTable::ImageTable(int op, const std::vector<Relation>& rels) : op_(op) {
  for (const Relation& r : rels) {
    if (r.op != op || r.power < -4 || r.power > 0) continue;
    if (r.factor_p >= 0 && r.factor_p != op) continue;
    TPolyPair p{r.const_poly, r.p_poly, r.p_index};
    (r.factor_p < 0 ? plain_ : with_p_)[r.power] = std::move(p);
  }
  for (std::int64_t k = -4; k <= 0; ++k) {
    if (!plain_.contains(k) || !with_p_.contains(k)) {
      throw std::invalid_argument("relation table lacks a seed for U" + std::to_string(op) +
                                  " at power " + std::to_string(k));
    }
  }
}

const TPolyPair& ImageTable::image(bool with_p, std::int64_t k) {
  if (k < -4) throw std::out_of_range("images are tabulated from t^-4 upwards");
  auto& tab = with_p ? with_p_ : plain_;
  const auto& a = modeq_coeffs().a;
  for (std::int64_t m = tab.rbegin()->first + 1; m <= k; ++m) {
    TPolyPair acc{{}, {}, tab.at(m - 1).j};
    for (int j = 0; j < 5; ++j) acc = acc + tab.at(m + j - 5).times(a[j]);
    tab[m] = acc.scaled(-1);
  }
  return tab.at(k);
}

namespace {

using Dense = std::vector<Integer>;  // coefficients of t^0, t^1, ...

// acc += c * b with c a sparse polynomial whose coefficients fit in a long.
void add_product(Dense& acc, const std::vector<std::pair<std::int64_t, long>>& c, const Dense& b) {
  if (b.empty()) return;
  std::int64_t top = 0;
  for (const auto& [d, k] : c) top = std::max(top, d);
  if (acc.size() < b.size() + static_cast<std::size_t>(top)) acc.resize(b.size() + top);
  for (const auto& [d, k] : c) {
    for (std::size_t e = 0; e < b.size(); ++e) {
      if (k >= 0) {
        mpz_addmul_ui(acc[e + d].get_mpz_t(), b[e].get_mpz_t(), static_cast<unsigned long>(k));
      } else {
        mpz_submul_ui(acc[e + d].get_mpz_t(), b[e].get_mpz_t(), static_cast<unsigned long>(-k));
      }
    }
  }
}

TPolynomial to_tpoly(const Dense& d) {
  TPolynomial p;
  for (std::size_t e = 0; e < d.size(); ++e) {
    if (d[e] != 0) p.add_term(static_cast<std::int64_t>(e), d[e]);
  }
  return p;
}

// sum_k w_k Y(k) for a sequence with Y(k) = sum_{i=1..5} c_i Y(k-i) and
// seeds Y(-4..0), by the backward (Clenshaw) recurrence
//   b_k = w_k + sum_i c_i b_{k+i},
// after which the sum equals sum_{k=-4..0} Y(k) (w_k + sum_{i>=1-k} c_i b_{k+i}).
// Only small coefficients of the modular equation are ever multiplied in.
TPolyPair clenshaw(const TPolynomial& w, const std::array<TPolyPair, 5>& seeds, int j) {
  const auto& a = modeq_coeffs().a;
  std::array<std::vector<std::pair<std::int64_t, long>>, 6> c;  // c[i] = -a_{5-i}
  for (int i = 1; i <= 5; ++i) {
    for (const auto& [d, k] : a[5 - i].terms()) c[i].emplace_back(d, -k.get_si());
  }
  const std::int64_t K = w.degree().value_or(0);
  std::map<std::int64_t, Dense> b;  // b_k for k in (k_current, k_current + 5]
  for (std::int64_t k = K; k >= 1; --k) {
    Dense bk;
    const Integer wk = w.coeff(k);
    if (wk != 0) bk.push_back(wk);
    for (int i = 1; i <= 5; ++i) {
      if (auto it = b.find(k + i); it != b.end()) add_product(bk, c[i], it->second);
    }
    b[k] = std::move(bk);
    if (k + 5 > 5) b.erase(k + 5);
  }
  TPolyPair acc{{}, {}, j};
  for (std::int64_t k = -4; k <= 0; ++k) {
    Dense ck;
    const Integer wk = w.coeff(k);
    if (wk != 0) ck.push_back(wk);
    for (int i = static_cast<int>(1 - k); i <= 5; ++i) {
      if (auto it = b.find(k + i); it != b.end()) add_product(ck, c[i], it->second);
    }
    const TPolynomial ct = to_tpoly(ck);
    if (!ct.is_zero()) acc = acc + seeds[k + 4].times(ct);
  }
  return acc;
}

}  // namespace

TPolyPair apply_operator(const TPolyPair& f, ImageTable& images) {
  if (f.j != images.op()) {
    throw std::invalid_argument("U" + std::to_string(images.op()) + " acts on S_" +
                                std::to_string(images.op()) + ", got an element of S_" +
                                std::to_string(f.j));
  }
  for (const TPolynomial* p : {&f.alpha, &f.beta}) {
    if (auto l = p->low_degree(); l && *l < -4) {
      throw std::out_of_range("images are tabulated from t^-4 upwards");
    }
  }
  const int j = 1 - images.op();
  std::array<TPolyPair, 5> plain, with_p;
  for (std::int64_t k = -4; k <= 0; ++k) {
    plain[k + 4] = images.image(false, k);
    with_p[k + 4] = images.image(true, k);
  }
  return clenshaw(f.alpha, plain, j) + clenshaw(f.beta, with_p, j);
}

// ---------------------------------------------------------------------------
// Certification along the computed L_n trajectory

bool Theorem8Step::passed() const {
  for (const CheckResult* c : {&integrality, &series_match, &decomposition, &membership}) {
    if (c->status == CheckStatus::Fail) return false;
  }
  return true;
}

bool Theorem8Report::passed() const {
  return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.passed(); });
}

namespace {

CheckResult compare_series(const std::string& name, const LaurentSeries& a, const LaurentSeries& b) {
  CheckResult r{.name = name};
  r.window_lo = 0;
  r.window_hi = common_prec(a, b);
  if (auto m = first_mismatch(a, b)) {
    r.status = CheckStatus::Fail;
    r.mismatch = *m;
    r.details = "differ at q^" + std::to_string(*m);
  } else {
    r.details = "agree below q^" + std::to_string(r.window_hi);
  }
  return r;
}

}  // namespace

Theorem8Report theorem8_check(const Theorem8Options& opts) {
  const std::vector<Relation>& rels = opts.relations ? *opts.relations : default_relations();
  ImageTable tables[2] = {ImageTable(0, rels), ImageTable(1, rels)};
  const int last = 2 * opts.n_max;

  std::vector<LaurentSeries> chain;
  const int iter_n = std::min(opts.iterate_limit, last);
  if (iter_n >= 1) chain = ln_chain(iter_n, opts.window);
  std::unique_ptr<PartitionTable> table;
  if (last > iter_n && opts.direct_window > 0) {
    table = std::make_unique<PartitionTable>(ln_direct_max_argument(last, opts.direct_window));
  }

  Theorem8Report report;
  TPolyPair prev{TPolynomial{{0, 1}}, {}, 0};  // L_0 = 1
  for (int n = 1; n <= last; ++n) {
    Theorem8Step s;
    s.n = n;
    s.j = parity_of(n);
    s.claimed_power = claimed_power(n);
    s.pair = apply_operator(prev, tables[operator_for(n)]);
    s.degree = s.pair.degree().value_or(0);
    const std::string tag = "L_" + std::to_string(n);

    s.integrality.name = tag + " / 5^" + std::to_string(s.claimed_power) + " integral";
    s.reduced = s.pair.divided(pow5(s.claimed_power));
    if (s.reduced) {
      s.integrality.details = "every coefficient divisible";
    } else {
      s.integrality.status = CheckStatus::Fail;
      s.integrality.details = "some coefficient is not divisible by 5^" +
                              std::to_string(s.claimed_power);
    }

    if (n <= iter_n) {
      const LaurentSeries& ls = chain[n];
      s.series_match = compare_series(tag + " pair vs U-iteration", reconstruct(s.pair, ls.prec()), ls);
      const std::int64_t cap = max_degree_for_window(ls.prec());
      s.decomposition.name = tag + " decomposition";
      if (s.degree <= cap) {
        try {
          const TPolyPair d = decompose(ls.truncate(2 * s.degree + 8), s.j, s.degree);
          if (d == s.pair) {
            s.decomposition.details = "linear solve reproduces the pair (degree " +
                                      std::to_string(s.degree) + ")";
          } else {
            s.decomposition.status = CheckStatus::Fail;
            s.decomposition.details = "linear solve disagrees with the recursion";
          }
        } catch (const std::exception& e) {
          s.decomposition.status = CheckStatus::Fail;
          s.decomposition.details = e.what();
        }
        s.decomposition.window_hi = std::min(ls.prec(), 2 * s.degree + 8);
      } else {
        s.decomposition.status = CheckStatus::Skipped;
        s.decomposition.details = "degree " + std::to_string(s.degree) + " exceeds the " +
                                  std::to_string(ls.prec()) + "-coefficient window";
      }
    } else if (table) {
      const LnValue d = ln_direct(n, opts.direct_window, table.get());
      s.series_match = compare_series(tag + " pair vs a(m) coefficients",
                                      reconstruct(s.pair, d.series.prec()), d.series);
      s.decomposition = {.name = tag + " decomposition", .status = CheckStatus::Skipped,
                         .details = "degree " + std::to_string(s.degree) + " is beyond the window"};
    } else {
      s.series_match = {.name = tag + " series", .status = CheckStatus::Skipped};
      s.decomposition = {.name = tag + " decomposition", .status = CheckStatus::Skipped};
    }

    s.membership.name = tag + " / 5^" + std::to_string(s.claimed_power) + " in X^(" +
                        std::to_string(s.j) + ")";
    if (s.reduced) {
      s.certificate = x_membership(*s.reduced);
      if (s.certificate->member()) {
        s.membership.details = std::to_string(s.certificate->terms.size()) +
                               " terms, minimum margin " +
                               std::to_string(s.certificate->terms.empty() ? 0 : s.certificate->min_margin());
      } else {
        s.membership.status = CheckStatus::Fail;
        s.membership.details = s.certificate->violations.front();
      }
    } else {
      s.membership.status = CheckStatus::Fail;
      s.membership.details = "not integral after division";
    }
    prev = s.pair;
    report.steps.push_back(std::move(s));
  }
  return report;
}

nlohmann::json theorem8_to_json(const Theorem8Report& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"n", s.n},
                     {"j", s.j},
                     {"claimed_power", s.claimed_power},
                     {"degree", s.degree},
                     {"min_margin", s.certificate && !s.certificate->terms.empty()
                                        ? nlohmann::json(s.certificate->min_margin())
                                        : nlohmann::json()},
                     {"checks",
                      {check_to_json(s.integrality), check_to_json(s.series_match),
                       check_to_json(s.decomposition), check_to_json(s.membership)}}});
  }
  return {{"passed", r.passed()}, {"steps", steps}};
}

// ---------------------------------------------------------------------------
// Single steps U: X^(j) -> X^(1-j)

TPolyPair random_x_element(int j, int support, int bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  TPolyPair f{{}, {}, j};
  for (int d = 0; d < support; ++d) {
    f.beta.add_term(d, Integer(dist(rng)) * pow5(required_valuation(j, true, d)));
    if (d >= 1) f.alpha.add_term(d, Integer(dist(rng)) * pow5(required_valuation(j, false, d)));
  }
  return f;
}

Theorem7Instance theorem7_instance(const TPolyPair& f, std::int64_t window) {
  Theorem7Instance out;
  out.input = f;
  const int op = f.j;
  out.check.name = op == 0 ? "U0 maps X^(0) into X^(1)" : "U1 / 5 maps X^(1) into X^(0)";
  out.check.window_hi = window;
  try {
    const LaurentSeries fs = reconstruct(f, 5 * window + 8);
    LaurentSeries img = U(op, fs, window);
    if (op == 1) {
      auto q = exact_quotient(img, Integer(5));
      if (!q) {
        out.check.status = CheckStatus::Fail;
        out.check.details = "U1 image is not divisible by 5";
        return out;
      }
      img = *q;
    }
    out.image = decompose(img, 1 - op, max_degree_for_window(window));
    out.certificate = x_membership(*out.image);
    if (!out.certificate->member()) {
      out.check.status = CheckStatus::Fail;
      out.check.details = out.certificate->violations.front();
    } else {
      out.check.details = "image of degree " + std::to_string(out.image->degree().value_or(0)) +
                          " certified";
    }
  } catch (const std::exception& e) {
    out.check.status = CheckStatus::Fail;
    out.check.details = e.what();
  }
  return out;
}

std::vector<Theorem7Instance> theorem7_random(int count, int support, std::uint64_t seed,
                                              std::int64_t window) {
  std::mt19937_64 rng(seed);
  std::vector<Theorem7Instance> out;
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < count; ++i) {
      Theorem7Instance inst = theorem7_instance(random_x_element(j, support, 9, rng), window);
      inst.check.name += " #" + std::to_string(i + 1);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

}  // namespace rrc
