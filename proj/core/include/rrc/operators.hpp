#pragma once

// U^(0), U^(1), the fifth-degree modular equation for t and its 5-adic
// skeleton s(j, l).

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>

#include "rrc/check.hpp"
#include "rrc/qseries.hpp"
#include "rrc/tpoly.hpp"

namespace rrc {

class NonIntegralSkeleton : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// U^(0){f} = U_5{A f}, known for exponents < out_prec.
LaurentSeries U0(const LaurentSeries& f, std::int64_t out_prec);
/// U^(1){f} = U_5{f}, known for exponents < out_prec.
LaurentSeries U1(const LaurentSeries& f, std::int64_t out_prec);
/// U^(0) for op == 0, U^(1) for op == 1.
LaurentSeries U(int op, const LaurentSeries& f, std::int64_t out_prec);

/// Largest output precision U^(op) can reach from f.
std::int64_t reachable_prec(int op, const LaurentSeries& f);

struct ModEqCoefficients {
  std::array<TPolynomial, 5> a;
};

/// a_0 .. a_4 as polynomials in t.
const ModEqCoefficients& modeq_coeffs();

/// t^5 + sum_j a_j(5 tau) t^j == 0 for exponents < prec.
CheckResult verify_modeq(std::int64_t prec);

/// floor((5l + j - 4) / 2)
std::int64_t skeleton_power(int j, int l);

/// s(j, l) = [t^l] a_j / 5^skeleton_power(j, l) for 0 <= j <= 4, 1 <= l <= 5.
/// Throws NonIntegralSkeleton when a division is inexact or a_j has a term
/// outside 1 <= l <= 5.
std::map<std::pair<int, int>, Integer> s_coeffs();

/// -sum_j a_j(t) window[j], where window[j] = U{g t^(k+j-5)}: the image of
/// g t^k for the same operator.
LaurentSeries u5_t_recursion(std::span<const LaurentSeries, 5> window, PowerCache& t_powers);

/// Coefficients of q^-10 .. q^0 in rho^2 U^(0){t^-1}.
const std::vector<Integer>& principal_part_expected();

/// rho^2 U^(0){t^-1} and rho^2 (1 + 25t - 5p_1) agree on [-10, prec) and
/// both start with the expected principal part and constant.
CheckResult verify_principal_part_example(std::int64_t prec);

}  // namespace rrc
