#include "rrc/etaquot.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rrc/intmath.hpp"

namespace rrc {

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors requires n >= 1");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EtaQuotient::EtaQuotient(std::int64_t level, const std::map<std::int64_t, std::int64_t>& exponents)
    : level_(level) {
  if (level < 1) throw std::invalid_argument("eta quotient level must be positive");
  for (const auto& [delta, r] : exponents) {
    if (delta < 1 || level % delta != 0) {
      throw std::invalid_argument("eta quotient factor " + std::to_string(delta) +
                                  " does not divide the level " + std::to_string(level));
    }
    if (r != 0) exponents_[delta] = r;
  }
}

EtaQuotient EtaQuotient::parse(const std::string& text) {
  const auto semi = text.find(';');
  std::string head = text.substr(0, semi);
  std::string body = semi == std::string::npos ? std::string() : text.substr(semi + 1);
  head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
  if (head.size() < 3 || (head[0] != 'N' && head[0] != 'n') || head[1] != '=') {
    throw std::invalid_argument("eta quotient must start with 'N=<level>;'");
  }
  std::int64_t level = 0;
  try {
    std::size_t used = 0;
    level = std::stoll(head.substr(2), &used);
    if (used != head.size() - 2) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad level in eta quotient: '" + head + "'");
  }
  std::map<std::int64_t, std::int64_t> exps;
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("expected 'delta:exponent', got '" + tok + "'");
    }
    try {
      std::size_t u1 = 0;
      std::size_t u2 = 0;
      const std::string ds = tok.substr(0, colon);
      const std::string rs = tok.substr(colon + 1);
      const std::int64_t d = std::stoll(ds, &u1);
      const std::int64_t r = std::stoll(rs, &u2);
      if (u1 != ds.size() || u2 != rs.size()) throw std::invalid_argument("trailing characters");
      if (exps.contains(d)) throw std::invalid_argument("duplicate factor");
      exps[d] = r;
    } catch (const std::exception& ex) {
      throw std::invalid_argument("bad factor '" + tok + "': " + ex.what());
    }
  }
  return EtaQuotient(level, exps);
}

std::int64_t EtaQuotient::exponent(std::int64_t delta) const {
  auto it = exponents_.find(delta);
  return it == exponents_.end() ? 0 : it->second;
}

std::int64_t EtaQuotient::weighted_sum() const {
  std::int64_t s = 0;
  for (const auto& [d, r] : exponents_) s += d * r;
  return s;
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& o) const {
  const std::int64_t level = std::lcm(level_, o.level_);
  std::map<std::int64_t, std::int64_t> exps = exponents_;
  for (const auto& [d, r] : o.exponents_) exps[d] += r;
  return EtaQuotient(level, exps);
}

EtaQuotient EtaQuotient::pow(std::int64_t k) const {
  std::map<std::int64_t, std::int64_t> exps;
  for (const auto& [d, r] : exponents_) exps[d] = r * k;
  return EtaQuotient(level_, exps);
}

EtaQuotient EtaQuotient::lifted(std::int64_t new_level) const {
  if (new_level % level_ != 0) throw std::invalid_argument("level does not divide the new level");
  return EtaQuotient(new_level, exponents_);
}

std::string EtaQuotient::to_string() const {
  std::ostringstream os;
  os << "N=" << level_ << ";";
  for (std::int64_t d : divisors(level_)) os << " " << d << ":" << exponent(d);
  return os.str();
}

NewmanVerdict newman_check(const EtaQuotient& e) {
  NewmanVerdict v;
  v.product = 1;
  const std::int64_t n = e.level();
  for (const auto& [d, r] : e.exponents()) {
    v.exponent_sum += r;
    v.weighted_sum += d * r;
    v.coweighted_sum += (n / d) * r;
    Integer f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(r < 0 ? -r : r));
    v.product *= f;
  }
  v.exponent_sum_ok = v.exponent_sum == 0;
  v.weighted_ok = mod_floor(v.weighted_sum, 24) == 0;
  v.coweighted_ok = mod_floor(v.coweighted_sum, 24) == 0;
  v.square_ok = mpz_perfect_square_p(v.product.get_mpz_t()) != 0;
  if (v.square_ok) v.square_root = sqrt(v.product);
  return v;
}

std::string Cusp::to_string() const {
  if (c == 1) return std::to_string(a);
  return std::to_string(a) + "/" + std::to_string(c);
}

std::vector<Cusp> cusp_representatives(std::int64_t level) {
  auto divs = divisors(level);
  std::reverse(divs.begin(), divs.end());
  std::vector<Cusp> out;
  for (std::int64_t c : divs) {
    const std::int64_t g = std::gcd(c, level / c);
    for (std::int64_t r = 1; r <= g; ++r) {
      if (std::gcd(r, g) != 1) continue;
      std::int64_t a = r;
      while (std::gcd(a, c) != 1) a += g;
      out.push_back({a, c, level});
    }
  }
  return out;
}

bool cusps_equivalent(std::int64_t level, std::int64_t a, std::int64_t c, std::int64_t a2,
                      std::int64_t c2) {
  const std::int64_t n = level;
  const std::int64_t am = mod_floor(a, n), cm = mod_floor(c, n);
  const std::int64_t a2m = mod_floor(a2, n), c2m = mod_floor(c2, n);
  for (std::int64_t y = 0; y < n; ++y) {
    if (std::gcd(y, n) != 1) continue;
    for (int s : {1, -1}) {
      if (mod_floor(s * c2m - y * cm, n) != 0) continue;
      for (std::int64_t j = 0; j < n; ++j) {
        if (mod_floor(s * y * a2m - am - j * cm, n) == 0) return true;
      }
    }
  }
  return false;
}

std::int64_t cusp_multiplicity(std::int64_t level, std::int64_t c) {
  const std::int64_t g = std::gcd(c, level / c);
  std::int64_t count = 0;
  for (std::int64_t r = 1; r <= g; ++r) {
    if (std::gcd(r, g) == 1) ++count;
  }
  return count;
}

Rational ligozat_order(const EtaQuotient& e, const Cusp& cusp) {
  const std::int64_t n = e.level();
  const std::int64_t c = cusp.c;
  Rational sum = 0;
  for (const auto& [d, r] : e.exponents()) {
    const std::int64_t g = std::gcd(c, d);
    sum += Rational(Integer(r) * g * g, Integer(d));
  }
  const Integer g2 = std::gcd(c * c, n);
  Rational result = Rational(Integer(n), Integer(24) * g2) * sum;
  result.canonicalize();
  return result;
}

std::vector<CuspOrder> cusp_order_table(const EtaQuotient& e) {
  std::vector<CuspOrder> out;
  for (const Cusp& c : cusp_representatives(e.level())) out.push_back({c, ligozat_order(e, c)});
  return out;
}

KinfVerdict kinf_check(const EtaQuotient& e) {
  KinfVerdict v;
  v.newman = newman_check(e);
  v.orders = cusp_order_table(e);
  for (const auto& co : v.orders) {
    if (co.cusp.c == e.level()) continue;
    if (sgn(co.order) < 0) {
      v.offending = co.cusp;
      break;
    }
  }
  return v;
}

LaurentSeries expand(const EtaQuotient& e, Precision prec) {
  const std::int64_t w = e.weighted_sum();
  if (mod_floor(w, 24) != 0) {
    throw FractionalLeadingPower("sum of delta * r_delta = " + std::to_string(w) +
                                 " is not divisible by 24");
  }
  const std::int64_t lead = w / 24;
  const std::int64_t rel = prec.depth - lead;
  if (rel <= 0) return LaurentSeries::zero(prec.depth);

  LaurentSeries r = LaurentSeries::constant(1, rel);
  for (const auto& [d, k] : e.exponents()) {
    if (k <= 0) continue;
    const LaurentSeries p = pentagonal(d, rel);
    for (std::int64_t i = 0; i < k; ++i) r = mul(r, p).truncate(rel);
  }
  for (const auto& [d, k] : e.exponents()) {
    if (k >= 0) continue;
    const LaurentSeries p = pentagonal(d, rel);
    for (std::int64_t i = 0; i < -k; ++i) r = divide(r, p, rel);
  }
  return shift(r, lead);
}

}  // namespace rrc
