#pragma once

// Laurent polynomials in the modular function t, and their evaluation as
// q-series.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "rrc/qseries.hpp"

namespace rrc {

/// Finitely supported map degree -> coefficient. Degrees may be negative so
/// that terms such as p_0 t^{-1} can be written down.
class TPolynomial {
 public:
  TPolynomial() = default;
  TPolynomial(std::initializer_list<std::pair<std::int64_t, Integer>> terms);

  static TPolynomial monomial(const Integer& c, std::int64_t degree);

  const std::map<std::int64_t, Integer>& terms() const { return terms_; }
  Integer coeff(std::int64_t degree) const;
  void add_term(std::int64_t degree, const Integer& c);

  bool is_zero() const { return terms_.empty(); }
  std::optional<std::int64_t> degree() const;
  std::optional<std::int64_t> low_degree() const;

  TPolynomial operator+(const TPolynomial& o) const;
  TPolynomial operator-(const TPolynomial& o) const;
  TPolynomial operator*(const TPolynomial& o) const;
  TPolynomial scaled(const Integer& c) const;
  /// Multiplication by t^k.
  TPolynomial shifted(std::int64_t k) const;

  friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  std::map<std::int64_t, Integer> terms_;
};

/// [[degree, "coefficient"], ...]
nlohmann::json tpoly_to_json(const TPolynomial& p);
TPolynomial tpoly_from_json(const nlohmann::json& j);

/// Caches powers x^n (n may be negative) of a fixed series.
class PowerCache {
 public:
  PowerCache(LaurentSeries x, std::int64_t prec);

  const LaurentSeries& base() const { return x_; }
  std::int64_t prec() const { return prec_; }
  /// x^n truncated to the cache precision.
  LaurentSeries power(std::int64_t n);

 private:
  LaurentSeries x_;
  std::int64_t prec_;
  std::map<std::int64_t, LaurentSeries> powers_;
  std::mutex mutex_;
};

/// sum_d c_d x^d, truncated to the cache precision.
LaurentSeries evaluate(const TPolynomial& p, PowerCache& powers);

}  // namespace rrc
