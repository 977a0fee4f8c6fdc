#include "rrc/functions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rrc {

std::string to_string(NamedFunction f) {
  switch (f) {
    case NamedFunction::T: return "t";
    case NamedFunction::Rho: return "rho";
    case NamedFunction::Sigma: return "sigma";
    case NamedFunction::Mu: return "mu";
    case NamedFunction::P0: return "p0";
    case NamedFunction::P1: return "p1";
    case NamedFunction::A: return "A";
  }
  return "?";
}

NamedFunction named_function_from_string(const std::string& s) {
  std::string l = s;
  std::transform(l.begin(), l.end(), l.begin(), [](unsigned char c) { return std::tolower(c); });
  for (NamedFunction f : all_named_functions()) {
    std::string n = to_string(f);
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return std::tolower(c); });
    if (n == l) return f;
  }
  throw std::invalid_argument("unknown function '" + s + "' (expected t, rho, sigma, mu, p0, p1, A)");
}

std::vector<NamedFunction> all_named_functions() {
  return {NamedFunction::T,  NamedFunction::Rho, NamedFunction::Sigma, NamedFunction::Mu,
          NamedFunction::P0, NamedFunction::P1,  NamedFunction::A};
}

std::int64_t leading_exponent(NamedFunction f) {
  switch (f) {
    case NamedFunction::T: return 1;
    case NamedFunction::Rho: return -5;
    case NamedFunction::Sigma: return -2;
    case NamedFunction::Mu: return -3;
    case NamedFunction::P0: return 1;
    case NamedFunction::P1: return 1;
    case NamedFunction::A: return 1;
  }
  return 0;
}

EtaQuotient eta_form(NamedFunction f) {
  switch (f) {
    case NamedFunction::T: return EtaQuotient(5, {{1, -6}, {5, 6}});
    case NamedFunction::Rho: return EtaQuotient(20, {{1, 2}, {4, 2}, {10, 8}, {5, -2}, {20, -10}});
    case NamedFunction::Sigma: return EtaQuotient(20, {{2, -2}, {4, 4}, {10, 2}, {20, -4}});
    case NamedFunction::Mu: return EtaQuotient(20, {{4, 1}, {5, 5}, {1, -1}, {20, -5}});
    case NamedFunction::A:
      return EtaQuotient(100, {{1, -3}, {2, 5}, {4, -2}, {25, 3}, {50, -5}, {100, 2}});
    default: throw std::invalid_argument(to_string(f) + " is not an eta quotient");
  }
}

const std::vector<RhoMonomial>& p_monomials(int j) {
  static const std::vector<RhoMonomial> p0 = {
      {31, 0, 0, 1},    {-22, 1, 0, 1}, {-9, 2, 0, 1},   {-208, 0, 0, 2}, {-96, 1, 0, 2},
      {304, 2, 0, 2},   {-32, 0, 1, 1}, {416, 0, 1, 2},  {416, 1, 1, 2},  {-208, 0, 2, 2}};
  static const std::vector<RhoMonomial> p1 = {
      {261, 0, 0, 1},   {126, 1, 0, 1},   {13, 2, 0, 1},    {-960, 0, 0, 2}, {-5120, 1, 0, 2},
      {-320, 2, 0, 2},  {64, 0, 1, 1},    {320, 0, 1, 2},   {-1280, 1, 1, 2}, {640, 0, 2, 2}};
  if (j == 0) return p0;
  if (j == 1) return p1;
  throw std::invalid_argument("p_j needs j in {0, 1}");
}

namespace {

// Every monomial sigma^a mu^b rho^-c is itself an eta quotient of level 20,
// so it expands directly to the requested absolute precision.
LaurentSeries assemble_p(int j, std::int64_t depth) {
  const EtaQuotient sigma = eta_form(NamedFunction::Sigma);
  const EtaQuotient mu = eta_form(NamedFunction::Mu);
  const EtaQuotient rho = eta_form(NamedFunction::Rho);
  LaurentSeries acc = LaurentSeries::zero(depth);
  for (const RhoMonomial& m : p_monomials(j)) {
    const EtaQuotient e = sigma.pow(m.sigma) * mu.pow(m.mu) * rho.pow(-m.rho_inv);
    acc = add(acc, scale(expand(e, Precision(depth)), Integer(m.coeff)));
  }
  return acc;
}

struct Cache {
  std::mutex mutex;
  std::map<NamedFunction, LaurentSeries> series;
};

Cache& cache() {
  static Cache c;
  return c;
}

}  // namespace

LaurentSeries named(NamedFunction f, Precision prec) {
  Cache& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.series.find(f); it != c.series.end() && it->second.prec() >= prec.depth) {
      return it->second.truncate(prec.depth);
    }
  }
  LaurentSeries s = (f == NamedFunction::P0 || f == NamedFunction::P1)
                        ? assemble_p(f == NamedFunction::P0 ? 0 : 1, prec.depth)
                        : expand(eta_form(f), prec);
  std::lock_guard lock(c.mutex);
  auto& slot = c.series[f];
  if (slot.prec() < s.prec() || slot.is_exact()) slot = s;
  return s;
}

}  // namespace rrc
