#pragma once

// The named modular functions t, rho, sigma, mu, p0, p1 and A.

#include <cstdint>
#include <string>
#include <vector>

#include "rrc/etaquot.hpp"
#include "rrc/qseries.hpp"

namespace rrc {

enum class NamedFunction { T, Rho, Sigma, Mu, P0, P1, A };

std::string to_string(NamedFunction f);
/// Accepts t, rho, sigma, mu, p0, p1, A (case-insensitive).
NamedFunction named_function_from_string(const std::string& s);
std::vector<NamedFunction> all_named_functions();

/// Leading exponent of the q-expansion.
std::int64_t leading_exponent(NamedFunction f);

/// Eta-quotient form of t, rho, sigma, mu and A.
EtaQuotient eta_form(NamedFunction f);

/// One term c * sigma^a * mu^b * rho^(-c) of the p0/p1 expansions.
struct RhoMonomial {
  long coeff;
  int sigma;
  int mu;
  int rho_inv;
};
/// Monomials for p0 (j = 0) or p1 (j = 1).
const std::vector<RhoMonomial>& p_monomials(int j);

/// q-expansion known for exponents < prec.depth. Results are cached, so
/// repeated calls are cheap; the cache is safe to use from several threads.
LaurentSeries named(NamedFunction f, Precision prec);

/// p_0 or p_1.
inline LaurentSeries named_p(int j, Precision prec) {
  return named(j == 0 ? NamedFunction::P0 : NamedFunction::P1, prec);
}

}  // namespace rrc
