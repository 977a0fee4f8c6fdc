#include "rrc/tpoly.hpp"

#include <sstream>

#include "rrc/series_json.hpp"

namespace rrc {

TPolynomial::TPolynomial(std::initializer_list<std::pair<std::int64_t, Integer>> terms) {
  for (const auto& [d, c] : terms) add_term(d, c);
}

TPolynomial TPolynomial::monomial(const Integer& c, std::int64_t degree) {
  TPolynomial p;
  p.add_term(degree, c);
  return p;
}

Integer TPolynomial::coeff(std::int64_t degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TPolynomial::add_term(std::int64_t degree, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<std::int64_t> TPolynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<std::int64_t> TPolynomial::low_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

TPolynomial TPolynomial::operator+(const TPolynomial& o) const {
  TPolynomial r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, c);
  return r;
}

TPolynomial TPolynomial::operator-(const TPolynomial& o) const {
  TPolynomial r = *this;
  for (const auto& [d, c] : o.terms_) r.add_term(d, -c);
  return r;
}

TPolynomial TPolynomial::operator*(const TPolynomial& o) const {
  TPolynomial r;
  for (const auto& [d1, c1] : terms_) {
    for (const auto& [d2, c2] : o.terms_) r.add_term(d1 + d2, c1 * c2);
  }
  return r;
}

TPolynomial TPolynomial::scaled(const Integer& c) const {
  TPolynomial r;
  for (const auto& [d, x] : terms_) r.add_term(d, x * c);
  return r;
}

TPolynomial TPolynomial::shifted(std::int64_t k) const {
  TPolynomial r;
  for (const auto& [d, x] : terms_) r.terms_.emplace(d + k, x);
  return r;
}

std::string TPolynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    Integer a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << var;
    if (d != 1) os << "^" << d;
  }
  return os.str();
}

nlohmann::json tpoly_to_json(const TPolynomial& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [d, c] : p.terms()) out.push_back({d, integer_to_json(c)});
  return out;
}

TPolynomial tpoly_from_json(const nlohmann::json& j) {
  TPolynomial p;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) {
      throw std::invalid_argument("polynomial terms must be [degree, coefficient] pairs");
    }
    p.add_term(entry[0].get<std::int64_t>(), integer_from_json(entry[1]));
  }
  return p;
}

PowerCache::PowerCache(LaurentSeries x, std::int64_t prec) : x_(std::move(x)), prec_(prec) {
  powers_.emplace(0, LaurentSeries::constant(1));
  powers_.emplace(1, x_.truncate(prec_ + 64));
}

LaurentSeries PowerCache::power(std::int64_t n) {
  std::lock_guard lock(mutex_);
  if (auto it = powers_.find(n); it != powers_.end()) return it->second.truncate(prec_);
  // Powers are kept with some slack above prec_ because negative powers lose
  // precision relative to the base.
  const std::int64_t work = prec_ + 64;
  if (n > 0) {
    std::int64_t k = powers_.rbegin()->first;
    while (k < n) {
      powers_[k + 1] = mul(powers_.at(k), powers_.at(1)).truncate(work);
      ++k;
    }
  } else {
    if (!powers_.contains(-1)) powers_[-1] = invert(powers_.at(1), work);
    std::int64_t k = powers_.begin()->first;
    while (k > n) {
      powers_[k - 1] = mul(powers_.at(k), powers_.at(-1)).truncate(work);
      --k;
    }
  }
  const LaurentSeries& r = powers_.at(n);
  if (r.prec() < prec_) {
    throw InsufficientPrecision("power " + std::to_string(n) + " of the cached base only reaches q^" +
                                std::to_string(r.prec()));
  }
  return r.truncate(prec_);
}

LaurentSeries evaluate(const TPolynomial& p, PowerCache& powers) {
  LaurentSeries acc = LaurentSeries::zero(powers.prec());
  for (const auto& [d, c] : p.terms()) acc = add(acc, scale(powers.power(d), c));
  return acc.truncate(powers.prec());
}

}  // namespace rrc
