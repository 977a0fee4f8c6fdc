#include <random>

#include <gtest/gtest.h>

#include "rrc/functions.hpp"
#include "rrc/induction.hpp"
#include "rrc/operators.hpp"
#include "rrc/relations.hpp"

using namespace rrc;

namespace {

bool agree(const LaurentSeries& f, const LaurentSeries& g) { return !first_mismatch(f, g).has_value(); }

// Oracle: smallest x > 0 with 24x = 1 mod 5^n, by search.
Integer lambda_search(int n) {
  const Integer mod = pow5(n);
  for (Integer x = 1;; ++x)
    if ((24 * x - 1) % mod == 0) return x;
}

}  // namespace

TEST(Lambda, Values) {
  EXPECT_EQ(lambda_of(1).value, 4);
  EXPECT_EQ(lambda_of(2).value, 24);
  EXPECT_EQ(lambda_of(4).value, 599);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(lambda_of(n).value, lambda_search(n)) << n;
  EXPECT_THROW(lambda_of(0), std::invalid_argument);
}

TEST(Lambda, Recurrences) { EXPECT_TRUE(lambda_recurrence_failures(10).empty()); }

TEST(Lambda, ClaimedPowers) {
  EXPECT_EQ(claimed_power(1), 0);
  EXPECT_EQ(claimed_power(2), 1);
  EXPECT_EQ(claimed_power(3), 1);
  EXPECT_EQ(claimed_power(4), 2);
  EXPECT_EQ(claimed_power(6), 3);
  EXPECT_EQ(parity_of(3), 1);
  EXPECT_EQ(operator_for(3), 0);
}

TEST(Ln, DirectExamples) {
  const auto l1 = ln_direct(1, 20);
  EXPECT_EQ(l1.series.order(), 1);
  EXPECT_EQ(l1.series.leading_coeff(), 13);
  EXPECT_TRUE(agree(l1.series, named(NamedFunction::P1, Precision(20))));
  const auto l2 = ln_direct(2, 30);
  EXPECT_TRUE(exact_quotient(l2.series, 5).has_value());
}

TEST(Ln, IterateMatchesDirect) {
  for (int n = 1; n <= 4; ++n) {
    const auto it = ln_iterate(n, 25);
    const auto di = ln_direct(n, 25);
    ASSERT_GE(common_prec(it.series, di.series), 25) << n;
    EXPECT_TRUE(agree(it.series, di.series)) << n;
    EXPECT_TRUE(exact_quotient(it.series, pow5(claimed_power(n))).has_value()) << n;
  }
  EXPECT_TRUE(agree(ln_iterate(1, 40).series, named(NamedFunction::P1, Precision(40))));
}

TEST(Ln, ChainCoversRequestedWindow) {
  const auto chain = ln_chain(3, 12);
  ASSERT_EQ(chain.size(), 4u);
  EXPECT_TRUE(agree(chain[0], LaurentSeries::constant(1)));
  EXPECT_GE(chain[3].prec(), 12);
  EXPECT_GE(chain[2].prec(), 60);
  EXPECT_EQ(ln_iterate_budget(2, 10), 250);
}

TEST(Decompose, BasisElements) {
  const auto p1 = named(NamedFunction::P1, Precision(30));
  const auto pair = decompose(p1, 1, 5);
  EXPECT_TRUE(pair.alpha.is_zero());
  EXPECT_EQ(pair.beta, TPolynomial({{0, 1}}));

  const auto t = named(NamedFunction::T, Precision(30));
  const auto g = LaurentSeries::constant(-6, 30) - 25 * t;
  const auto gp = decompose(g, 0, 5);
  EXPECT_EQ(gp.alpha, TPolynomial({{0, -6}, {1, -25}}));
  EXPECT_TRUE(gp.beta.is_zero());
}

TEST(Decompose, RoundtripOnRandomPairs) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> c(-1000, 1000);
  for (int i = 0; i < 20; ++i) {
    TPolyPair f{{}, {}, static_cast<int>(i % 2)};
    for (int d = 0; d <= 6; ++d) {
      f.alpha.add_term(d, c(rng));
      f.beta.add_term(d, c(rng));
    }
    const auto s = reconstruct(f, 40);
    const auto back = decompose(s, f.j, max_degree_for_window(40));
    EXPECT_EQ(back, f);
    EXPECT_TRUE(agree(reconstruct(back, 40), s));
  }
}

TEST(Decompose, Errors) {
  const auto t = named(NamedFunction::T, Precision(30));
  EXPECT_THROW(decompose(t, 0, 20), NoRepresentation);             // window too short
  EXPECT_THROW(decompose(invert(t, 30), 0, 5), NoRepresentation);  // pole at q = 0
  EXPECT_THROW(decompose(t * t * t * t * t * t * t, 0, 5), NoRepresentation);  // degree too high
  EXPECT_THROW(decompose(t, 2, 5), std::invalid_argument);
}

TEST(Certificate, Examples) {
  const TPolyPair l1{{}, {{0, 1}}, 1};
  const auto c1 = x_membership(l1);
  EXPECT_TRUE(c1.member());
  ASSERT_EQ(c1.terms.size(), 1u);
  EXPECT_EQ(c1.terms[0].quotient, 1);

  const TPolyPair bare_t{{{1, 1}}, {}, 0};
  const auto c2 = x_membership(bare_t);
  EXPECT_FALSE(c2.member());
  EXPECT_EQ(c2.terms[0].required, 1);
  EXPECT_EQ(c2.terms[0].margin, -1);

  EXPECT_FALSE(x_membership(TPolyPair{{{0, 5}}, {}, 0}).member());  // constants are not in X^(j)
}

TEST(Certificate, RequiredValuations) {
  EXPECT_EQ(required_valuation(0, true, 3), 7);
  EXPECT_EQ(required_valuation(0, false, 3), 6);
  EXPECT_EQ(required_valuation(1, false, 3), 7);
  EXPECT_EQ(required_valuation(1, false, 1), 2);
  EXPECT_EQ(required_valuation(0, false, 1), 1);
}

TEST(Certificate, L2OverFiveIsInX0) {
  const auto l2 = ln_iterate(2, 30);
  const auto reduced = *exact_quotient(l2.series, 5);
  const auto pair = decompose(reduced, 0, max_degree_for_window(30));
  EXPECT_TRUE(agree(reconstruct(pair, 30), reduced));
  EXPECT_TRUE(x_membership(pair).member());
}

TEST(ImageTable, SeedsAreTheRelations) {
  ImageTable u0(0, default_relations());
  const auto& img = u0.image(false, -1);
  EXPECT_EQ(img.alpha, TPolynomial({{0, 1}, {1, 25}}));
  EXPECT_EQ(img.beta, TPolynomial({{0, -5}}));
  EXPECT_EQ(img.j, 1);
}

TEST(ImageTable, ExtensionMatchesDirectSeries) {
  for (int op : {0, 1}) {
    ImageTable tab(op, default_relations());
    for (bool with_p : {false, true}) {
      for (std::int64_t k = 1; k <= 10; ++k) {
        Relation spec;
        spec.op = op;
        spec.factor_p = with_p ? op : -1;
        spec.power = k;
        ASSERT_TRUE(agree(reconstruct(tab.image(with_p, k), 30), relation_lhs(spec, 30)))
            << op << " " << with_p << " " << k;
      }
    }
  }
}

TEST(ApplyOperator, MatchesSeriesOperator) {
  ImageTable u0(0, default_relations());
  ImageTable u1(1, default_relations());
  const TPolyPair f{{{1, 5}, {2, -125}}, {{0, 1}, {1, 25}}, 0};
  const auto want0 = U0(reconstruct(f, 5 * 30 + 8), 30);
  EXPECT_TRUE(agree(reconstruct(apply_operator(f, u0), 30), want0));
  TPolyPair g = f;
  g.j = 1;
  const auto want1 = U1(reconstruct(g, 5 * 30 + 8), 30);
  EXPECT_TRUE(agree(reconstruct(apply_operator(g, u1), 30), want1));
  EXPECT_THROW(apply_operator(g, u0), std::invalid_argument);
}

TEST(Trajectory, SmallRun) {
  Theorem8Options opts;
  opts.n_max = 2;
  opts.window = 40;
  const auto rep = theorem8_check(opts);
  ASSERT_EQ(rep.steps.size(), 4u);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.steps[0].pair, (TPolyPair{{}, {{0, 1}}, 1}));
  const std::vector<std::int64_t> degrees{0, 5, 25, 130};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& s = rep.steps[i];
    EXPECT_EQ(s.j, parity_of(s.n));
    EXPECT_EQ(s.degree, degrees[i]);
    ASSERT_TRUE(s.certificate.has_value());
    EXPECT_TRUE(s.certificate->member());
    EXPECT_GE(s.certificate->min_margin(), 0);
    EXPECT_TRUE(s.integrality.passed());
    EXPECT_TRUE(s.series_match.passed()) << s.series_match.details;
  }
  EXPECT_TRUE(rep.steps[2].decomposition.passed());
  EXPECT_EQ(rep.steps[3].decomposition.status, CheckStatus::Skipped);
}

TEST(Trajectory, CorruptedTableFails) {
  auto rels = default_relations();
  rels[0].const_poly = rels[0].const_poly + TPolynomial({{1, 5}});  // U0{1} = p1 + 5t
  Theorem8Options opts;
  opts.n_max = 1;
  opts.window = 30;
  opts.relations = &rels;
  EXPECT_FALSE(theorem8_check(opts).passed());
}

TEST(SingleStep, TrajectoryInstances) {
  // L_2 / 5 in X^(0) maps into X^(1); L_1 = p_1 in X^(1) maps to 5 X^(0).
  Theorem8Options opts;
  opts.n_max = 1;
  opts.window = 30;
  const auto rep = theorem8_check(opts);
  for (const auto& s : rep.steps) {
    ASSERT_TRUE(s.reduced.has_value());
    const auto inst = theorem7_instance(*s.reduced, 60);
    EXPECT_TRUE(inst.check.passed()) << s.n << ": " << inst.check.details;
  }
}

TEST(SingleStep, RandomElements) {
  const auto inst = theorem7_random(4, 4, 2024, 50);
  ASSERT_EQ(inst.size(), 8u);
  for (const auto& i : inst) {
    EXPECT_TRUE(x_membership(i.input).member());
    EXPECT_TRUE(i.check.passed()) << i.check.name << ": " << i.check.details;
  }
}

TEST(SingleStep, NonMemberIsRejected) {
  // t alone is not in X^(0); its image lands outside X^(1).
  const auto inst = theorem7_instance(TPolyPair{{{1, 1}}, {}, 0}, 40);
  EXPECT_FALSE(inst.check.passed());
}
