#include "rrc/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rrc/intmath.hpp"

namespace rrc {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kExact || b >= kExact) return kExact;
  return a + b;
}

// Relative-index sparse view of a series' stored coefficients.
struct SparseEntry {
  std::int64_t index;
  const Integer* value;
};

std::vector<SparseEntry> sparse_view(const std::vector<Integer>& dense) {
  std::vector<SparseEntry> out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) out.push_back({static_cast<std::int64_t>(i), &dense[i]});
  }
  return out;
}

// acc += c * x, with a fast path for unit c.
inline void addmul(Integer& acc, const Integer& c, const Integer& x) {
  if (c == 1) {
    acc += x;
  } else if (c == -1) {
    acc -= x;
  } else {
    mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  }
}

inline void submul(Integer& acc, const Integer& c, const Integer& x) {
  if (c == 1) {
    acc -= x;
  } else if (c == -1) {
    acc += x;
  } else {
    mpz_submul(acc.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  }
}

void require_unit_lead(const LaurentSeries& f) {
  if (f.is_zero()) {
    throw NonUnitLeadingCoefficient("cannot invert a series that vanishes on its window");
  }
  const Integer& c = f.leading_coeff();
  if (c != 1 && c != -1) {
    throw NonUnitLeadingCoefficient("leading coefficient " + c.get_str() + " is not a unit");
  }
}

}  // namespace

// --- LaurentSeries ----------------------------------------------------------

LaurentSeries LaurentSeries::zero(std::int64_t prec) {
  LaurentSeries s;
  s.prec_ = prec;
  s.start_ = std::min<std::int64_t>(0, prec - 1);
  return s;
}

LaurentSeries LaurentSeries::constant(const Integer& c, std::int64_t prec) {
  return monomial(c, 0, prec);
}

LaurentSeries LaurentSeries::monomial(const Integer& c, std::int64_t exponent,
                                      std::int64_t prec) {
  if (exponent >= prec) return zero(prec);
  return from_coeffs(exponent, {c}, prec);
}

LaurentSeries LaurentSeries::from_coeffs(std::int64_t start, std::vector<Integer> coeffs,
                                         std::int64_t prec) {
  if (start >= prec) return zero(prec);
  LaurentSeries s;
  s.start_ = start;
  s.prec_ = prec;
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::from_terms(
    const std::vector<std::pair<std::int64_t, Integer>>& terms, std::int64_t prec) {
  if (terms.empty()) return zero(prec);
  std::int64_t lo = terms.front().first;
  std::int64_t hi = terms.front().first;
  for (const auto& [e, c] : terms) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  hi = std::min(hi, prec - 1);
  if (hi < lo) return zero(prec);
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : terms) {
    if (e <= hi) dense[static_cast<std::size_t>(e - lo)] += c;
  }
  return from_coeffs(lo, std::move(dense), prec);
}

void LaurentSeries::normalize() {
  if (!is_exact()) {
    std::int64_t room = prec_ - start_;
    if (room <= 0) {
      coeffs_.clear();
    } else if (static_cast<std::int64_t>(coeffs_.size()) > room) {
      coeffs_.resize(static_cast<std::size_t>(room));
    }
  }
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    if (start_ >= prec_) start_ = prec_ - 1;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    start_ += static_cast<std::int64_t>(lead);
  }
}

std::size_t LaurentSeries::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

Integer LaurentSeries::coeff(std::int64_t e) const {
  if (e >= prec_) {
    throw InsufficientPrecision("coefficient of q^" + std::to_string(e) +
                                " requested but series is only known below q^" +
                                std::to_string(prec_));
  }
  if (e < start_ || e >= start_ + static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(e - start_)];
}

const Integer& LaurentSeries::leading_coeff() const {
  if (coeffs_.empty()) throw std::logic_error("zero series has no leading coefficient");
  return coeffs_.front();
}

std::vector<std::pair<std::int64_t, Integer>> LaurentSeries::terms() const {
  std::vector<std::pair<std::int64_t, Integer>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) out.emplace_back(start_ + static_cast<std::int64_t>(i), coeffs_[i]);
  }
  return out;
}

LaurentSeries LaurentSeries::truncate(std::int64_t p) const {
  if (p >= prec_) return *this;
  LaurentSeries s = *this;
  s.prec_ = p;
  if (s.start_ >= p) {
    s.coeffs_.clear();
    s.start_ = p - 1;
    return s;
  }
  s.normalize();
  return s;
}

std::string LaurentSeries::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (shown == max_terms) {
      os << " + ...";
      break;
    }
    Integer a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (e == 0) {
      os << a;
    } else {
      if (!unit) os << a << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    ++shown;
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(q^" << prec_ << ")";
  return os.str();
}

// --- ring operations --------------------------------------------------------

namespace {

LaurentSeries combine(const LaurentSeries& f, const LaurentSeries& g, bool subtract) {
  std::int64_t prec = std::min(f.prec(), g.prec());
  if (f.is_zero() && g.is_zero()) {
    LaurentSeries z = LaurentSeries::zero(prec);
    return z;
  }
  std::int64_t lo = std::min(f.is_zero() ? g.min_exp() : f.min_exp(),
                             g.is_zero() ? f.min_exp() : g.min_exp());
  std::int64_t hi = lo;
  if (!f.is_zero()) hi = std::max(hi, f.max_stored_exp());
  if (!g.is_zero()) hi = std::max(hi, g.max_stored_exp());
  hi = std::min(hi, prec - 1);
  if (hi < lo) return LaurentSeries::zero(prec);
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  const auto& fd = f.dense();
  for (std::size_t i = 0; i < fd.size(); ++i) {
    std::int64_t e = f.min_exp() + static_cast<std::int64_t>(i);
    if (e > hi) break;
    out[static_cast<std::size_t>(e - lo)] += fd[i];
  }
  const auto& gd = g.dense();
  for (std::size_t i = 0; i < gd.size(); ++i) {
    std::int64_t e = g.min_exp() + static_cast<std::int64_t>(i);
    if (e > hi) break;
    if (subtract) {
      out[static_cast<std::size_t>(e - lo)] -= gd[i];
    } else {
      out[static_cast<std::size_t>(e - lo)] += gd[i];
    }
  }
  return LaurentSeries::from_coeffs(lo, std::move(out), prec);
}

}  // namespace

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g) { return combine(f, g, false); }

LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g) { return combine(f, g, true); }

LaurentSeries neg(const LaurentSeries& f) { return scale(f, Integer(-1)); }

LaurentSeries scale(const LaurentSeries& f, const Integer& c) {
  std::vector<Integer> out = f.dense();
  for (auto& x : out) x *= c;
  return LaurentSeries::from_coeffs(f.min_exp(), std::move(out), f.prec());
}

LaurentSeries shift(const LaurentSeries& f, std::int64_t k) {
  return LaurentSeries::from_coeffs(f.min_exp() + k, f.dense(), sat_add(f.prec(), k));
}

LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g) {
  std::int64_t prec = std::min(sat_add(f.prec(), g.order()), sat_add(g.prec(), f.order()));
  if (f.is_zero() || g.is_zero()) return LaurentSeries::zero(prec);

  std::int64_t lo = f.min_exp() + g.min_exp();
  std::int64_t full = static_cast<std::int64_t>(f.dense().size() + g.dense().size()) - 1;
  std::int64_t len = (prec >= kExact) ? full : std::min(full, prec - lo);
  if (len <= 0) return LaurentSeries::zero(prec);

  const bool f_outer = f.nonzero_count() <= g.nonzero_count();
  const auto& outer = f_outer ? f.dense() : g.dense();
  const auto& inner = f_outer ? g.dense() : f.dense();
  std::vector<Integer> out(static_cast<std::size_t>(len));
  for (const auto& [i, c] : sparse_view(outer)) {
    if (i >= len) break;
    const std::int64_t jmax = std::min<std::int64_t>(static_cast<std::int64_t>(inner.size()), len - i);
    for (std::int64_t j = 0; j < jmax; ++j) {
      const Integer& x = inner[static_cast<std::size_t>(j)];
      if (sgn(x) == 0) continue;
      addmul(out[static_cast<std::size_t>(i + j)], *c, x);
    }
  }
  return LaurentSeries::from_coeffs(lo, std::move(out), prec);
}

LaurentSeries divide(const LaurentSeries& num, const LaurentSeries& den,
                     std::optional<std::int64_t> cap) {
  require_unit_lead(den);
  const std::int64_t dv = den.min_exp();
  std::int64_t prec = std::min(sat_add(num.prec(), -dv), sat_add(den.prec(), num.order() - 2 * dv));
  if (cap) prec = std::min(prec, *cap);

  if (num.is_zero()) return LaurentSeries::zero(prec);

  const bool den_monomial = den.dense().size() == 1;
  if (prec >= kExact && !den_monomial) {
    throw std::invalid_argument("quotient of exact series is infinite; a precision cap is required");
  }
  const Integer& d0 = den.leading_coeff();
  const std::int64_t start = num.min_exp() - dv;
  if (den_monomial) {
    std::vector<Integer> out = num.dense();
    if (d0 == -1) {
      for (auto& x : out) x = -x;
    }
    return LaurentSeries::from_coeffs(start, std::move(out), prec);
  }

  const std::int64_t len = prec - start;
  if (len <= 0) return LaurentSeries::zero(prec);

  std::vector<SparseEntry> tail;
  for (const auto& entry : sparse_view(den.dense())) {
    if (entry.index > 0) tail.push_back(entry);
  }
  const auto& nd = num.dense();
  std::vector<Integer> out(static_cast<std::size_t>(len));
  for (std::int64_t k = 0; k < len; ++k) {
    Integer acc = (k < static_cast<std::int64_t>(nd.size())) ? nd[static_cast<std::size_t>(k)] : Integer(0);
    for (const auto& [i, c] : tail) {
      if (i > k) break;
      submul(acc, *c, out[static_cast<std::size_t>(k - i)]);
    }
    if (d0 == -1) acc = -acc;
    out[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return LaurentSeries::from_coeffs(start, std::move(out), prec);
}

LaurentSeries invert(const LaurentSeries& f, std::optional<std::int64_t> cap) {
  return divide(LaurentSeries::constant(1), f, cap);
}

LaurentSeries pow(const LaurentSeries& f, std::int64_t k, std::optional<std::int64_t> cap) {
  if (k == 0) return LaurentSeries::constant(1, cap.value_or(kExact));
  const std::int64_t n = k < 0 ? -k : k;

  // Repeated multiplication by a sparse base (e.g. a pentagonal series) costs
  // O(n * nnz * len); repeated squaring costs O(log n * len^2).
  const double nnz = static_cast<double>(f.nonzero_count());
  const double len = static_cast<double>(
      f.is_exact() ? f.dense().size() : std::max<std::int64_t>(1, f.prec() - f.min_exp()));
  const bool sequential = static_cast<double>(n) * nnz <= std::log2(static_cast<double>(n) + 1.0) * len / 2.0;

  auto finish = [&](LaurentSeries s) { return cap ? s.truncate(*cap) : s; };

  if (k < 0) {
    require_unit_lead(f);
    if (sequential) {
      LaurentSeries r = invert(f, cap);
      for (std::int64_t i = 1; i < n; ++i) r = divide(r, f, cap);
      return finish(std::move(r));
    }
    return pow(invert(f, cap), n, cap);
  }

  if (sequential) {
    LaurentSeries r = finish(f);
    for (std::int64_t i = 1; i < n; ++i) r = finish(mul(r, f));
    return r;
  }
  LaurentSeries result = LaurentSeries::constant(1);
  LaurentSeries base = finish(f);
  std::int64_t e = n;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : finish(mul(result, base));
      first = false;
    }
    e >>= 1;
    if (e > 0) base = finish(mul(base, base));
  }
  return result;
}

LaurentSeries substitute_qk(const LaurentSeries& f, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("substitute_qk requires k >= 1");
  if (k == 1) return f;
  const std::int64_t prec = f.is_exact() ? kExact : f.prec() * k;
  if (f.is_zero()) return LaurentSeries::zero(prec);
  const auto& d = f.dense();
  std::vector<Integer> out((d.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < d.size(); ++i) out[i * static_cast<std::size_t>(k)] = d[i];
  return LaurentSeries::from_coeffs(f.min_exp() * k, std::move(out), prec);
}

LaurentSeries u5(const LaurentSeries& f) {
  const std::int64_t prec = f.is_exact() ? kExact : ceil_div(f.prec(), 5);
  if (f.is_zero()) return LaurentSeries::zero(prec);
  const std::int64_t lo = ceil_div(f.min_exp(), 5);
  const std::int64_t hi = floor_div(f.max_stored_exp(), 5);
  if (hi < lo) return LaurentSeries::zero(prec);
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  const auto& d = f.dense();
  for (std::int64_t m = lo; m <= hi; ++m) {
    out[static_cast<std::size_t>(m - lo)] = d[static_cast<std::size_t>(5 * m - f.min_exp())];
  }
  return LaurentSeries::from_coeffs(lo, std::move(out), prec);
}

std::optional<LaurentSeries> exact_quotient(const LaurentSeries& f, const Integer& d) {
  if (sgn(d) == 0) throw std::invalid_argument("division by zero");
  std::vector<Integer> out = f.dense();
  for (auto& x : out) {
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  }
  return LaurentSeries::from_coeffs(f.min_exp(), std::move(out), f.prec());
}

std::int64_t valuation5(const Integer& n) {
  if (sgn(n) == 0) throw std::invalid_argument("valuation of zero is infinite");
  Integer rest;
  Integer five = 5;
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), five.get_mpz_t()));
}

std::optional<std::int64_t> valuation5(const LaurentSeries& f) {
  std::optional<std::int64_t> best;
  for (const auto& c : f.dense()) {
    if (sgn(c) == 0) continue;
    std::int64_t v = valuation5(c);
    if (!best || v < *best) best = v;
    if (*best == 0) break;
  }
  return best;
}

std::optional<std::int64_t> first_mismatch(const LaurentSeries& f, const LaurentSeries& g) {
  const std::int64_t prec = common_prec(f, g);
  std::int64_t lo = std::min(f.min_exp(), g.min_exp());
  std::int64_t hi = prec;
  if (prec >= kExact) {
    hi = lo;
    if (!f.is_zero()) hi = std::max(hi, f.max_stored_exp() + 1);
    if (!g.is_zero()) hi = std::max(hi, g.max_stored_exp() + 1);
  }
  for (std::int64_t e = lo; e < hi; ++e) {
    if (f.coeff(e) != g.coeff(e)) return e;
  }
  return std::nullopt;
}

LaurentSeries pentagonal(std::int64_t delta, std::int64_t prec) {
  if (delta < 1) throw std::invalid_argument("pentagonal requires delta >= 1");
  std::vector<std::pair<std::int64_t, Integer>> terms;
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t e1 = delta * (k * (3 * k - 1) / 2);
    const std::int64_t e2 = delta * (k * (3 * k + 1) / 2);
    if (e1 >= prec && e2 >= prec) break;
    const Integer sign = (k % 2 == 0) ? 1 : -1;
    if (e1 < prec) terms.emplace_back(e1, sign);
    if (k > 0 && e2 < prec) terms.emplace_back(e2, sign);
  }
  return LaurentSeries::from_terms(terms, prec);
}

LaurentSeries euler_product(std::int64_t r, std::int64_t delta, Precision prec) {
  if (r == 0) return LaurentSeries::constant(1, prec.depth);
  return pow(pentagonal(delta, prec.depth), r, prec.depth);
}

LaurentSeries theta_onesided(Precision prec) {
  std::vector<std::pair<std::int64_t, Integer>> terms;
  for (std::int64_t r = 1; r * r < prec.depth; ++r) terms.emplace_back(r * r, 1);
  return LaurentSeries::from_terms(terms, prec.depth);
}

LaurentSeries theta_full(Precision prec) {
  return add(LaurentSeries::constant(1, prec.depth), scale(theta_onesided(prec), 2));
}

Integer pow5(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("pow5 requires k >= 0");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 5, static_cast<unsigned long>(k));
  return r;
}

}  // namespace rrc
