#pragma once

// Eta quotients prod_{delta | N} eta(delta tau)^{r_delta} on Gamma_0(N):
// Newman's modularity conditions, cusp representatives, Ligozat's order
// formula and q-expansion.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rrc/qseries.hpp"

namespace rrc {

class FractionalLeadingPower : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

std::vector<std::int64_t> divisors(std::int64_t n);

class EtaQuotient {
 public:
  EtaQuotient() = default;
  /// Every key of `exponents` must divide `level`; zero exponents are dropped.
  EtaQuotient(std::int64_t level, const std::map<std::int64_t, std::int64_t>& exponents);

  /// Parses "N=20; 1:0 2:-2 4:4 5:0 10:2 20:-4".
  static EtaQuotient parse(const std::string& text);

  std::int64_t level() const { return level_; }
  const std::map<std::int64_t, std::int64_t>& exponents() const { return exponents_; }
  std::int64_t exponent(std::int64_t delta) const;

  /// sum_delta delta * r_delta (24 times the order at infinity).
  std::int64_t weighted_sum() const;
  EtaQuotient operator*(const EtaQuotient& o) const;
  EtaQuotient pow(std::int64_t k) const;
  /// The same quotient viewed on Gamma_0(new_level); level must divide new_level.
  EtaQuotient lifted(std::int64_t new_level) const;

  /// Canonical text form listing every divisor of the level.
  std::string to_string() const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  std::int64_t level_ = 1;
  std::map<std::int64_t, std::int64_t> exponents_;
};

struct NewmanVerdict {
  std::int64_t exponent_sum = 0;       // condition 1: == 0
  std::int64_t weighted_sum = 0;       // condition 2: sum delta r_delta == 0 (mod 24)
  std::int64_t coweighted_sum = 0;     // condition 3: sum (N/delta) r_delta == 0 (mod 24)
  Integer product;                     // condition 4: prod delta^|r_delta| is a square
  bool exponent_sum_ok = false;
  bool weighted_ok = false;
  bool coweighted_ok = false;
  bool square_ok = false;
  Integer square_root;                 // set when square_ok

  bool pass() const { return exponent_sum_ok && weighted_ok && coweighted_ok && square_ok; }
};

NewmanVerdict newman_check(const EtaQuotient& e);

/// The cusp a/c of Gamma_0(N); c = N represents infinity.
struct Cusp {
  std::int64_t a = 1;
  std::int64_t c = 1;
  std::int64_t level = 1;

  std::string to_string() const;
  friend bool operator==(const Cusp&, const Cusp&) = default;
};

/// One representative per cusp, c running over the divisors of N in
/// decreasing order and a over the units modulo gcd(c, N/c).
std::vector<Cusp> cusp_representatives(std::int64_t level);

/// Whether a/c and a2/c2 are Gamma_0(N)-equivalent (gcd(a,c) = gcd(a2,c2) = 1).
bool cusps_equivalent(std::int64_t level, std::int64_t a, std::int64_t c, std::int64_t a2,
                      std::int64_t c2);

/// Number of cusps that share the order of the representative with this c:
/// phi(gcd(c, N/c)). Used for valence checks.
std::int64_t cusp_multiplicity(std::int64_t level, std::int64_t c);

/// N / (24 gcd(c^2, N)) * sum_delta r_delta gcd(c, delta)^2 / delta.
Rational ligozat_order(const EtaQuotient& e, const Cusp& cusp);

struct CuspOrder {
  Cusp cusp;
  Rational order;
};

std::vector<CuspOrder> cusp_order_table(const EtaQuotient& e);

struct KinfVerdict {
  NewmanVerdict newman;
  std::vector<CuspOrder> orders;
  /// First representative (other than infinity) with negative order.
  std::optional<Cusp> offending;
  bool pass() const { return newman.pass() && !offending.has_value(); }
};

/// Modular on Gamma_0(N) with poles only at infinity.
KinfVerdict kinf_check(const EtaQuotient& e);

/// q^{(sum delta r_delta)/24} prod (q^delta;q^delta)^{r_delta}, known for
/// exponents < prec.depth.
LaurentSeries expand(const EtaQuotient& e, Precision prec);

}  // namespace rrc
