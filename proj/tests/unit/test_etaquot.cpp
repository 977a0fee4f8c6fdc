#include <gtest/gtest.h>

#include "rrc/etaquot.hpp"
#include "rrc/functions.hpp"

using namespace rrc;

namespace {

const EtaQuotient kSigma = EtaQuotient::parse("N=20; 1:0 2:-2 4:4 5:0 10:2 20:-4");

Rational order_at(const EtaQuotient& e, std::int64_t c) { return ligozat_order(e, Cusp{1, c, e.level()}); }

}  // namespace

TEST(Parse, RoundTrip) {
  EXPECT_EQ(kSigma.level(), 20);
  EXPECT_EQ(kSigma.exponent(4), 4);
  EXPECT_EQ(kSigma.exponent(5), 0);
  EXPECT_EQ(EtaQuotient::parse(kSigma.to_string()), kSigma);
  EXPECT_THROW(EtaQuotient::parse("N=20; 3:1"), std::invalid_argument);
  EXPECT_THROW(EtaQuotient::parse("garbage"), std::invalid_argument);
}

TEST(Newman, Sigma) {
  const auto v = newman_check(kSigma);
  EXPECT_TRUE(v.pass());
  EXPECT_EQ(v.exponent_sum, 0);
  EXPECT_EQ(v.weighted_sum, -48);
  EXPECT_EQ(v.coweighted_sum, 0);
  // 2^2 4^4 10^2 20^4, which is 2^20 5^6.
  const Integer product = Integer(4) * 256 * 100 * 160000;
  EXPECT_EQ(v.product, product);
  EXPECT_EQ(v.square_root, 128000);
}

TEST(Newman, ConstantAndFailure) {
  EXPECT_TRUE(newman_check(EtaQuotient(20, {})).pass());
  const auto bad = newman_check(EtaQuotient(20, {{1, 1}, {2, -1}}));
  EXPECT_FALSE(bad.pass());
  EXPECT_TRUE(bad.exponent_sum_ok);
  EXPECT_FALSE(bad.weighted_ok);
}

TEST(Cusps, Representatives) {
  auto text = [](std::int64_t n) {
    std::vector<std::string> out;
    for (const auto& c : cusp_representatives(n)) out.push_back(c.to_string());
    return out;
  };
  EXPECT_EQ(text(20), (std::vector<std::string>{"1/20", "1/10", "1/5", "1/4", "1/2", "1"}));
  EXPECT_EQ(text(1), (std::vector<std::string>{"1"}));
  EXPECT_EQ(text(5), (std::vector<std::string>{"1/5", "1"}));
  EXPECT_EQ(cusp_representatives(36).size(), 12u);
}

TEST(Cusps, PairwiseInequivalent) {
  for (std::int64_t n : {12, 20, 36, 50, 100}) {
    const auto reps = cusp_representatives(n);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        EXPECT_FALSE(cusps_equivalent(n, reps[i].a, reps[i].c, reps[j].a, reps[j].c))
            << n << ": " << reps[i].to_string() << " ~ " << reps[j].to_string();
  }
  EXPECT_TRUE(cusps_equivalent(20, 3, 20, 1, 20));
  EXPECT_TRUE(cusps_equivalent(20, 1, 1, 1, 3));
}

TEST(Ligozat, SigmaOrders) {
  EXPECT_EQ(order_at(kSigma, 20), -2);
  EXPECT_EQ(order_at(kSigma, 10), 0);
  EXPECT_EQ(order_at(kSigma, 5), 0);
  EXPECT_EQ(order_at(kSigma, 4), 2);
  EXPECT_EQ(order_at(kSigma, 2), 0);
  EXPECT_EQ(order_at(kSigma, 1), 0);
  EXPECT_EQ(order_at(EtaQuotient(20, {}), 4), 0);
}

TEST(Ligozat, RhoProfile) {
  const auto rho = eta_form(NamedFunction::Rho);
  EXPECT_EQ(order_at(rho, 20), -5);
  EXPECT_EQ(order_at(rho, 5), 0);
  for (std::int64_t c : {10, 4, 2, 1}) EXPECT_GT(order_at(rho, c), 0) << c;
  EXPECT_EQ(order_at(rho, 1), 2);
}

TEST(Ligozat, ValenceSumIsZero) {
  // A weight-zero modular function has as many zeros as poles.
  for (auto f : {NamedFunction::Rho, NamedFunction::Sigma, NamedFunction::Mu}) {
    const auto e = eta_form(f);
    Rational total = 0;
    for (const auto& co : cusp_order_table(e)) total += co.order * cusp_multiplicity(e.level(), co.cusp.c);
    EXPECT_EQ(total, 0) << to_string(f);
  }
}

TEST(Kinf, Verdicts) {
  EXPECT_TRUE(kinf_check(kSigma).pass());
  EXPECT_TRUE(kinf_check(EtaQuotient(20, {})).pass());
  EXPECT_TRUE(kinf_check(eta_form(NamedFunction::Rho)).pass());
  EXPECT_TRUE(kinf_check(eta_form(NamedFunction::Mu)).pass());

  // rho^2 t lies in K^inf(20); bare t at level 20 has poles at 1/4, 1/2 and 1.
  const auto t20 = eta_form(NamedFunction::T).lifted(20);
  const auto rho2t = eta_form(NamedFunction::Rho).pow(2) * t20;
  EXPECT_TRUE(kinf_check(rho2t).pass());
  const auto tv = kinf_check(t20);
  EXPECT_FALSE(tv.pass());
  ASSERT_TRUE(tv.offending.has_value());
  EXPECT_EQ(tv.offending->c, 4);
  EXPECT_EQ(ligozat_order(t20, Cusp{1, 5, 20}), 4);
  EXPECT_EQ(ligozat_order(t20, Cusp{1, 1, 20}), -4);
}

TEST(Expand, Examples) {
  const auto t = expand(eta_form(NamedFunction::T), Precision(10));
  EXPECT_EQ(t.coeff(1), 1);
  EXPECT_EQ(t.coeff(2), 6);
  EXPECT_EQ(t.coeff(3), 27);
  EXPECT_EQ(t.coeff(4), 98);
  const auto s = expand(kSigma, Precision(10));
  EXPECT_EQ(s.order(), -2);
  EXPECT_EQ(s.leading_coeff(), 1);
  EXPECT_EQ(expand(eta_form(NamedFunction::Rho), Precision(10)).order(), -5);
  EXPECT_THROW(expand(EtaQuotient(2, {{1, 1}}), Precision(10)), FractionalLeadingPower);
}

TEST(Expand, TMatchesConvolutionOracle) {
  // t = q (q^5;q^5)^6 / (q;q)^6 with (q;q)^-6 from 6-fold convolution.
  const int n = 60;
  std::vector<Integer> p(n, 0), c;
  p[0] = 1;
  for (int part = 1; part < n; ++part)
    for (int e = part; e < n; ++e) p[e] += p[e - part];
  c = p;
  for (int k = 1; k < 6; ++k) {
    std::vector<Integer> next(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; i + j < n; ++j) next[i + j] += c[i] * p[j];
    c = next;
  }
  std::vector<Integer> e5(n, 0);
  e5[0] = 1;
  for (int k = 1; 5 * k < n; ++k)
    for (int e = n - 1; e >= 5 * k; --e) e5[e] -= e5[e - 5 * k];
  std::vector<Integer> e5_6 = e5;
  for (int k = 1; k < 6; ++k) {
    std::vector<Integer> next(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; i + j < n; ++j) next[i + j] += e5_6[i] * e5[j];
    e5_6 = next;
  }
  const auto t = expand(eta_form(NamedFunction::T), Precision(n));
  for (int e = 1; e < n; ++e) {
    Integer want = 0;
    for (int i = 0; i <= e - 1; ++i) want += c[i] * e5_6[e - 1 - i];
    ASSERT_EQ(t.coeff(e), want) << e;
  }
}

TEST(Expand, OrderAtInfinityMatchesLeadingExponent) {
  for (auto f : {NamedFunction::T, NamedFunction::Rho, NamedFunction::Sigma, NamedFunction::Mu,
                 NamedFunction::A}) {
    const auto e = eta_form(f);
    const auto s = expand(e, Precision(20));
    EXPECT_EQ(Rational(s.order()), order_at(e, e.level())) << to_string(f);
    EXPECT_EQ(s.order(), leading_exponent(f)) << to_string(f);
  }
}
