#include "rrc/operators.hpp"

#include <string>

#include "rrc/functions.hpp"
#include "rrc/intmath.hpp"

namespace rrc {

namespace {

void require_reached(const LaurentSeries& r, std::int64_t out_prec, const char* op) {
  if (r.prec() < out_prec) {
    throw InsufficientPrecision(std::string(op) + " reaches only q^" + std::to_string(r.prec()) +
                                ", asked for q^" + std::to_string(out_prec));
  }
}

}  // namespace

std::int64_t reachable_prec(int op, const LaurentSeries& f) {
  if (f.is_exact()) return kExact;
  return ceil_div(f.prec() + (op == 0 ? 1 : 0), 5);
}

LaurentSeries U0(const LaurentSeries& f, std::int64_t out_prec) {
  // u5 of a series known below 5*out - 4 is known below out.
  const std::int64_t need = 5 * out_prec - 4;
  if (!f.is_exact() && f.prec() + 1 < need) {
    throw InsufficientPrecision("U0 input known below q^" + std::to_string(f.prec()) +
                                ", needs q^" + std::to_string(need - 1));
  }
  const std::int64_t a_depth = std::max<std::int64_t>(1, need - f.order());
  const LaurentSeries A = named(NamedFunction::A, Precision(a_depth));
  LaurentSeries g = mul(A, f);
  if (g.prec() > need) g = g.truncate(need);
  LaurentSeries r = u5(g).truncate(out_prec);
  require_reached(r, out_prec, "U0");
  return r;
}

LaurentSeries U1(const LaurentSeries& f, std::int64_t out_prec) {
  LaurentSeries r = u5(f.truncate(5 * out_prec)).truncate(out_prec);
  require_reached(r, out_prec, "U1");
  return r;
}

LaurentSeries U(int op, const LaurentSeries& f, std::int64_t out_prec) {
  return op == 0 ? U0(f, out_prec) : U1(f, out_prec);
}

const ModEqCoefficients& modeq_coeffs() {
  static const ModEqCoefficients c = [] {
    ModEqCoefficients m;
    m.a[0] = TPolynomial{{1, -1}};
    m.a[1] = TPolynomial{{2, -pow5(3)}, {1, -30}};
    m.a[2] = TPolynomial{{3, -pow5(6)}, {2, -6 * pow5(4)}, {1, -63 * pow5(1)}};
    m.a[3] = TPolynomial{{4, -pow5(9)}, {3, -6 * pow5(7)}, {2, -63 * pow5(4)}, {1, -52 * pow5(2)}};
    m.a[4] = TPolynomial{{5, -pow5(12)},
                         {4, -6 * pow5(10)},
                         {3, -63 * pow5(7)},
                         {2, -52 * pow5(5)},
                         {1, -63 * pow5(2)}};
    return m;
  }();
  return c;
}

CheckResult verify_modeq(std::int64_t prec) {
  CheckResult r{.name = "modular equation", .window_lo = 0, .window_hi = prec};
  const LaurentSeries t = named(NamedFunction::T, Precision(prec));
  const LaurentSeries t5 =
      substitute_qk(named(NamedFunction::T, Precision(ceil_div(prec, 5) + 1)), 5);
  PowerCache tp(t, prec);
  PowerCache t5p(t5, prec);

  LaurentSeries sum = tp.power(5);
  for (int j = 0; j < 5; ++j) {
    sum = add(sum, mul(evaluate(modeq_coeffs().a[j], t5p), tp.power(j)));
  }
  sum = sum.truncate(prec);
  if (sum.prec() < prec) {
    r.status = CheckStatus::Fail;
    r.details = "series only reached q^" + std::to_string(sum.prec());
    r.window_hi = sum.prec();
  } else if (!sum.is_zero()) {
    r.status = CheckStatus::Fail;
    r.mismatch = sum.min_exp();
    r.details = "nonzero coefficient at q^" + std::to_string(sum.min_exp());
  } else {
    r.details = "all coefficients below q^" + std::to_string(prec) + " vanish";
  }
  return r;
}

std::int64_t skeleton_power(int j, int l) { return floor_div(5 * l + j - 4, 2); }

std::map<std::pair<int, int>, Integer> s_coeffs() {
  std::map<std::pair<int, int>, Integer> s;
  for (int j = 0; j < 5; ++j) {
    const TPolynomial& a = modeq_coeffs().a[j];
    for (const auto& [d, c] : a.terms()) {
      if (d < 1 || d > 5) {
        throw NonIntegralSkeleton("a_" + std::to_string(j) + " has a t^" + std::to_string(d) +
                                  " term");
      }
    }
    for (int l = 1; l <= 5; ++l) {
      const Integer c = a.coeff(l);
      const Integer p = pow5(skeleton_power(j, l));
      if (c % p != 0) {
        throw NonIntegralSkeleton("5^" + std::to_string(skeleton_power(j, l)) +
                                  " does not divide the t^" + std::to_string(l) +
                                  " coefficient of a_" + std::to_string(j));
      }
      s[{j, l}] = c / p;
    }
  }
  return s;
}

LaurentSeries u5_t_recursion(std::span<const LaurentSeries, 5> window, PowerCache& t_powers) {
  std::int64_t p = kExact;
  for (const LaurentSeries& w : window) p = std::min(p, w.prec());
  LaurentSeries acc = LaurentSeries::zero(p);
  for (int j = 0; j < 5; ++j) {
    acc = sub(acc, mul(evaluate(modeq_coeffs().a[j], t_powers), window[j]));
  }
  if (acc.prec() < p) {
    throw InsufficientPrecision("t powers too short for the recursion window");
  }
  return acc;
}

const std::vector<Integer>& principal_part_expected() {
  static const std::vector<Integer> v = {1,     -44,   -138,  -372,  -989,  -1584,
                                         -2814, -4356, -5897, -9508, -12696};
  return v;
}

CheckResult verify_principal_part_example(std::int64_t prec) {
  CheckResult r{.name = "principal part of rho^2 U0{t^-1}", .window_lo = -10, .window_hi = prec};
  const std::int64_t inner = prec + 10;
  const LaurentSeries rho2 = pow(named(NamedFunction::Rho, Precision(prec + 20)), 2).truncate(prec);
  const LaurentSeries t = named(NamedFunction::T, Precision(5 * inner + 8));
  const LaurentSeries lhs = mul(rho2, U0(invert(t, 5 * inner + 4), inner)).truncate(prec);

  const LaurentSeries tt = named(NamedFunction::T, Precision(inner));
  const LaurentSeries p1 = named(NamedFunction::P1, Precision(inner));
  const LaurentSeries bracket =
      sub(add(LaurentSeries::constant(1), scale(tt, 25)), scale(p1, 5));
  const LaurentSeries rhs = mul(rho2, bracket).truncate(prec);

  std::string why;
  if (lhs.prec() < prec || rhs.prec() < prec) {
    why = "window fell short of q^" + std::to_string(prec);
  } else if (auto m = first_mismatch(lhs, rhs)) {
    r.mismatch = *m;
    why = "sides differ at q^" + std::to_string(*m);
  } else {
    const auto& want = principal_part_expected();
    for (std::size_t i = 0; i < want.size(); ++i) {
      const std::int64_t e = -10 + static_cast<std::int64_t>(i);
      if (e >= prec) break;
      if (lhs.coeff(e) != want[i]) {
        r.mismatch = e;
        why = "coefficient of q^" + std::to_string(e) + " is " + lhs.coeff(e).get_str() +
              ", expected " + want[i].get_str();
        break;
      }
    }
  }
  if (!why.empty()) {
    r.status = CheckStatus::Fail;
    r.details = why;
  } else {
    r.details = "principal part and constant match; sides agree on the window";
  }
  return r;
}

}  // namespace rrc
