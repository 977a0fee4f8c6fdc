#pragma once

// The sequence L_n, its decomposition over S_j = Z[t] + p_j Z[t], 5-adic
// valuation certificates for the spaces X^(0), X^(1), and the five-term
// recursion carried out on polynomial pairs.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rrc/check.hpp"
#include "rrc/partition.hpp"
#include "rrc/qseries.hpp"
#include "rrc/relations.hpp"
#include "rrc/tpoly.hpp"

namespace rrc {

class NoRepresentation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonIntegralCoefficients : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Lambda {
  int n = 0;
  Integer value;
};

/// Minimal positive solution of 24x = 1 (mod 5^n), from the closed forms.
Lambda lambda_of(int n);

/// Power of 5 that divides L_n: 5^(k-1) for n = 2k-1 and 5^k for n = 2k.
std::int64_t claimed_power(int n);
/// L_n lies in S_1 for odd n and in S_0 for even n.
inline int parity_of(int n) { return n % 2 == 0 ? 0 : 1; }
/// L_n = U^(op){L_(n-1)} with op = 0 for odd n and 1 for even n.
inline int operator_for(int n) { return n % 2 == 0 ? 1 : 0; }

struct LnValue {
  int n = 0;
  LaurentSeries series;
  std::int64_t claimed_power = 0;
};

/// Prefactor times sum_m a(5^n m + lambda_n) q^(m+1), known below q^window.
/// `table` must reach 5^n (window - 2) + lambda_n; one is built when null.
LnValue ln_direct(int n, std::int64_t window, const PartitionTable* table = nullptr);
/// Largest partition argument ln_direct(n, window) reads.
std::int64_t ln_direct_max_argument(int n, std::int64_t window);

/// Alternating U^(0), U^(1) from L_0 = 1, known below q^window.
LnValue ln_iterate(int n, std::int64_t window);
/// Depth of A that ln_iterate(n, window) consumes.
std::int64_t ln_iterate_budget(int n, std::int64_t window);
/// L_0 .. L_n from one iteration; L_k is known below q^(5^(n-k) window).
std::vector<LaurentSeries> ln_chain(int n, std::int64_t window);

/// g_alpha(t) + p_j g_beta(t).
struct TPolyPair {
  TPolynomial alpha;
  TPolynomial beta;
  int j = 0;

  TPolyPair operator+(const TPolyPair& o) const;
  TPolyPair scaled(const Integer& c) const;
  /// Multiplication by a polynomial in t.
  TPolyPair times(const TPolynomial& p) const;
  /// Exact division of every coefficient; nullopt when some division fails.
  std::optional<TPolyPair> divided(const Integer& d) const;
  std::optional<std::int64_t> degree() const;
  friend bool operator==(const TPolyPair&, const TPolyPair&) = default;
  std::string to_string() const;
};

nlohmann::json pair_to_json(const TPolyPair& p);

/// Series of the pair, known below q^window.
LaurentSeries reconstruct(const TPolyPair& p, std::int64_t window);

/// Largest degree decompose can resolve from a window of this length.
inline std::int64_t max_degree_for_window(std::int64_t window) { return (window - 4) / 2; }

/// Solves f = g_alpha(t) + p_j g_beta(t) with degrees <= max_deg over the
/// rationals using every coefficient of f's window, then asserts integrality.
TPolyPair decompose(const LaurentSeries& f, int j, std::int64_t max_deg);

struct CertificateTerm {
  bool with_p = false;
  std::int64_t degree = 0;
  Integer coeff;
  std::int64_t required = 0;
  std::int64_t actual = 0;  // valuation of coeff
  std::int64_t margin = 0;  // actual - required
  Integer quotient;         // coeff / 5^required when margin >= 0
};

struct ValuationCertificate {
  int j = 0;
  std::vector<CertificateTerm> terms;
  std::vector<std::string> violations;
  bool member() const { return violations.empty(); }
  std::int64_t min_margin() const;
};

/// Required 5-adic valuation of a coefficient in X^(j).
std::int64_t required_valuation(int j, bool with_p, std::int64_t degree);

ValuationCertificate x_membership(const TPolyPair& pair);
nlohmann::json certificate_to_json(const ValuationCertificate& c);

/// Images of t^k and p_j t^k under one operator, seeded by the relations for
/// k = -4..0 and extended by the five-term recursion in t.
class ImageTable {
 public:
  ImageTable(int op, const std::vector<Relation>& rels);

  int op() const { return op_; }
  /// U^(op){t^k} (with_p false) or U^(op){p_op t^k} (with_p true), k >= -4.
  const TPolyPair& image(bool with_p, std::int64_t k);

 private:
  int op_;
  std::map<std::int64_t, TPolyPair> plain_;
  std::map<std::int64_t, TPolyPair> with_p_;
};

/// U^(op) of the function the pair represents (pair.j must equal op).
TPolyPair apply_operator(const TPolyPair& f, ImageTable& images);

struct Theorem8Step {
  int n = 0;
  int j = 0;
  std::int64_t claimed_power = 0;
  TPolyPair pair;  // L_n itself
  std::optional<TPolyPair> reduced;  // L_n / 5^claimed_power
  std::optional<ValuationCertificate> certificate;
  std::int64_t degree = 0;
  CheckResult integrality;
  CheckResult series_match;  // pair against a series computation of L_n
  CheckResult decomposition;  // direct linear solve, where the degree allows
  CheckResult membership;
  bool passed() const;
};

struct Theorem8Options {
  int n_max = 3;            // L_1 .. L_(2 n_max)
  std::int64_t window = 60;  // series window for ln_iterate comparisons
  int iterate_limit = 4;     // compare with ln_iterate up to this n
  std::int64_t direct_window = 8;  // window for ln_direct comparisons beyond iterate_limit
  const std::vector<Relation>* relations = nullptr;  // default table when null
};

struct Theorem8Report {
  std::vector<Theorem8Step> steps;
  bool passed() const;
};

Theorem8Report theorem8_check(const Theorem8Options& opts);
nlohmann::json theorem8_to_json(const Theorem8Report& r);

/// A random element of X^(j) whose discrete functions are supported on
/// degrees < support, with entries in [-bound, bound].
TPolyPair random_x_element(int j, int support, int bound, std::mt19937_64& rng);

struct Theorem7Instance {
  TPolyPair input;
  std::optional<TPolyPair> image;  // U^(0) f, or U^(1) f / 5
  std::optional<ValuationCertificate> certificate;
  CheckResult check;
};

/// Applies U^(0) to an element of X^(0) or U^(1) to an element of X^(1) by
/// series, decomposes the image and certifies it.
Theorem7Instance theorem7_instance(const TPolyPair& f, std::int64_t window);

/// `count` random elements of each of X^(0) and X^(1), pushed through
/// theorem7_instance. Deterministic for a given seed.
std::vector<Theorem7Instance> theorem7_random(int count, int support, std::uint64_t seed,
                                              std::int64_t window);

/// n in 1..n_max where 5^(2n) - 5^(2n-1) + lambda_(2n-1) = lambda_(2n) or
/// 5^(2n+1) - 2 5^(2n) + lambda_(2n) = lambda_(2n+1) fails.
std::vector<std::int64_t> lambda_recurrence_failures(int n_max);

}  // namespace rrc
