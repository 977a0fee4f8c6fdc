#pragma once

// Exact truncated Laurent series in q with arbitrary-precision integer
// coefficients.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rrc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Precision value used for series that are exact (finite Laurent polynomials).
inline constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max() / 4;

/// Raised when a coefficient outside the known window is requested, or when
/// an operation cannot reach the precision the caller asked for.
class InsufficientPrecision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonUnitLeadingCoefficient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Working truncation depth.
struct Precision {
  std::int64_t depth = 250;

  constexpr Precision() = default;
  explicit Precision(std::int64_t d) : depth(d) {
    if (d < 1) throw std::invalid_argument("precision depth must be >= 1");
  }
};

/// A Laurent series known on the exponent window [min_exp, prec).
///
/// Coefficients are stored densely from min_exp; exponents past the stored
/// range but below prec are zero. A series with prec == kExact is a Laurent
/// polynomial. For a nonzero series min_exp is the exponent of the leading
/// nonzero coefficient.
class LaurentSeries {
 public:
  /// The exact zero series.
  LaurentSeries() = default;

  static LaurentSeries zero(std::int64_t prec = kExact);
  static LaurentSeries constant(const Integer& c, std::int64_t prec = kExact);
  static LaurentSeries monomial(const Integer& c, std::int64_t exponent,
                                std::int64_t prec = kExact);
  /// Coefficients for exponents start, start+1, ... (leading/trailing zeros
  /// are stripped).
  static LaurentSeries from_coeffs(std::int64_t start, std::vector<Integer> coeffs,
                                   std::int64_t prec = kExact);
  static LaurentSeries from_terms(const std::vector<std::pair<std::int64_t, Integer>>& terms,
                                  std::int64_t prec = kExact);

  std::int64_t min_exp() const { return start_; }
  std::int64_t prec() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Exponent of the leading nonzero term; prec() for the zero window.
  std::int64_t order() const { return coeffs_.empty() ? prec_ : start_; }
  /// Largest exponent with a stored (nonzero) coefficient; requires !is_zero().
  std::int64_t max_stored_exp() const {
    return start_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  std::size_t nonzero_count() const;

  /// Coefficient of q^e. Throws InsufficientPrecision when e >= prec().
  Integer coeff(std::int64_t e) const;
  const Integer& leading_coeff() const;

  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<std::int64_t, Integer>> terms() const;

  /// Drops everything at exponents >= p (p is clamped to the current prec).
  LaurentSeries truncate(std::int64_t p) const;

  /// Exact structural equality (same window and coefficients).
  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

  std::string to_string(std::size_t max_terms = 12) const;

  // Raw access for the arithmetic kernels.
  const std::vector<Integer>& dense() const { return coeffs_; }

 private:
  void normalize();

  std::int64_t start_ = 0;
  std::int64_t prec_ = kExact;
  std::vector<Integer> coeffs_;
};

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries sub(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries neg(const LaurentSeries& f);
LaurentSeries scale(const LaurentSeries& f, const Integer& c);
LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g);
/// Multiplication by q^k.
LaurentSeries shift(const LaurentSeries& f, std::int64_t k);

/// num/den; den must have leading coefficient +1 or -1. An exact quotient of
/// exact inputs is an infinite series, so `cap` bounds its precision and is
/// required in that case.
LaurentSeries divide(const LaurentSeries& num, const LaurentSeries& den,
                     std::optional<std::int64_t> cap = std::nullopt);
LaurentSeries invert(const LaurentSeries& f, std::optional<std::int64_t> cap = std::nullopt);
LaurentSeries pow(const LaurentSeries& f, std::int64_t k,
                  std::optional<std::int64_t> cap = std::nullopt);

/// f(q^k).
LaurentSeries substitute_qk(const LaurentSeries& f, std::int64_t k);
/// U_5: coefficient of q^m in the result is the coefficient of q^{5m} in f.
LaurentSeries u5(const LaurentSeries& f);

/// f / d when every coefficient is divisible by d.
std::optional<LaurentSeries> exact_quotient(const LaurentSeries& f, const Integer& d);

/// Exponent of 5 dividing n (n != 0).
std::int64_t valuation5(const Integer& n);
/// Minimum 5-adic valuation over the stored coefficients; nullopt encodes
/// infinity (the zero window).
std::optional<std::int64_t> valuation5(const LaurentSeries& f);

/// First exponent in the common window where f and g differ.
std::optional<std::int64_t> first_mismatch(const LaurentSeries& f, const LaurentSeries& g);
/// Upper end of the common window of f and g.
inline std::int64_t common_prec(const LaurentSeries& f, const LaurentSeries& g) {
  return std::min(f.prec(), g.prec());
}

/// (q^delta; q^delta)_inf to absolute precision `prec`, by the pentagonal
/// number theorem.
LaurentSeries pentagonal(std::int64_t delta, std::int64_t prec);
/// (q^delta; q^delta)_inf^r.
LaurentSeries euler_product(std::int64_t r, std::int64_t delta, Precision prec);
/// sum_{r>=1} q^{r^2}
LaurentSeries theta_onesided(Precision prec);
/// sum_{r in Z} q^{r^2}
LaurentSeries theta_full(Precision prec);

inline LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) { return add(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return sub(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f) { return neg(f); }
inline LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) { return mul(f, g); }
inline LaurentSeries operator*(const Integer& c, const LaurentSeries& f) { return scale(f, c); }
inline LaurentSeries operator*(long c, const LaurentSeries& f) { return scale(f, Integer(c)); }

/// 5^k as an Integer.
Integer pow5(std::int64_t k);

}  // namespace rrc
