#include <gtest/gtest.h>

#include <algorithm>

#include "dtl/agreement.hpp"
#include "dtl/oracle.hpp"
#include "support.hpp"

using namespace dtl;

namespace {

const TimeDomain kLine = TimeDomain::FullLine;
const TimeDomain kHalf = TimeDomain::HalfLine;

Signal mk(long long k) { return Signal::multiples_of(kLine, Rational(1, k)); }
Signal thm2() { return Signal::multiples_of(kHalf, Rational(2, 3)); }

Env env_of(const Signal& p) {
  Env env;
  env.domain = p.domain();
  env.bind("P", p);
  return env;
}

std::string describe(const RegionDecomposition& d) {
  std::string out;
  for (const auto& r : d.regions) {
    if (!out.empty()) out += " ";
    out += r.is_point ? "{" + r.lo.to_string() + "}" : "(" + r.lo.to_string() + "," + r.hi.to_string() + ")";
  }
  return out;
}

}  // namespace

TEST(Regions, Examples) {
  RegionDecomposition m2 = region_decomposition({mk(2)}, 0, 1);
  EXPECT_EQ(describe(m2), "{0} (0,1/2) {1/2} (1/2,1) {1}");
  EXPECT_EQ(m2.regions[0].truth, std::vector<bool>{true});
  EXPECT_EQ(m2.regions[1].truth, std::vector<bool>{false});

  RegionDecomposition full = region_decomposition({Signal::constant(kLine, true)}, Rational(-1, 2), 3);
  EXPECT_EQ(describe(full), "{-1/2} (-1/2,3) {3}");

  RegionDecomposition both = region_decomposition({mk(2), negate(mk(2))}, 0, Rational(1, 2));
  EXPECT_EQ(describe(both), describe(region_decomposition({mk(2)}, 0, Rational(1, 2))));
  EXPECT_EQ(both.regions[1].truth, (std::vector<bool>{false, true}));

  EXPECT_THROW(region_decomposition({mk(2)}, 1, 1), signal_error);
  EXPECT_THROW(region_decomposition({thm2()}, -1, 1), signal_error);
}

TEST(Pointwise, Examples) {
  EXPECT_FALSE(pointwise_eval(parse("C2(P)"), env_of(thm2()), Rational(1, 6)));
  EXPECT_TRUE(pointwise_eval(parse("C2(P)"), env_of(thm2()), Rational(7, 6)));
  EXPECT_TRUE(pointwise_eval(parse("!P U P"), env_of(mk(3)), 0));
  for (long long i = -10; i <= 10; ++i) EXPECT_TRUE(pointwise_eval(parse("F1 P"), env_of(mk(2)), Rational(i, 7)));
  EXPECT_FALSE(pointwise_eval(parse("true S P"), env_of(thm2()), 0));
  EXPECT_TRUE(pointwise_eval(parse("true S P"), env_of(thm2()), Rational(1, 100)));
  EXPECT_FALSE(pointwise_eval(parse("Pn3(P, P, P)"), env_of(mk(2)), Rational(1, 5)));
  EXPECT_TRUE(pointwise_eval(parse("Pn2(P, !P)"), env_of(mk(2)), Rational(1, 5)));
  EXPECT_THROW(pointwise_eval(parse("Q"), env_of(mk(2)), 0), eval_error);
  EXPECT_THROW(pointwise_eval(parse("P"), env_of(thm2()), -1), signal_error);
}

TEST(Agreement, Examples) {
  gen::Rng rng(7);
  gen::FormulaShape only_p;
  only_p.atoms = {"P"};
  Formula f = gen::random_formula(rng, 2, only_p, 6);
  AgreementReport r = agreement_check(f, env_of(mk(3)), 200, 7);
  EXPECT_EQ(r.samples.size(), 200u);
  EXPECT_TRUE(r.all_agree()) << print(f);

  Env env = env_of(thm2());
  Signal truth = evaluate(parse("C2(P)"), env);
  Oracle oracle(parse("C2(P)"), env);
  std::vector<Rational> critical = truth.window(0, 4).endpoints();
  for (const auto& e : env.lookup("P").window(0, 4).endpoints()) critical.push_back(e);
  for (const auto& t : critical) EXPECT_EQ(truth.contains(t), oracle.at(t)) << t;

  AgreementReport empty = agreement_check(f, env_of(mk(3)), 0, 1);
  EXPECT_TRUE(empty.samples.empty());
  EXPECT_TRUE(empty.all_agree());
  EXPECT_EQ(empty.to_string(), "agreement 0/0\n");
}

TEST(Agreement, ReportFormat) {
  AgreementReport r;
  r.samples.push_back({Rational(1, 2), true, true});
  r.samples.push_back({Rational(3), false, true});
  EXPECT_EQ(r.to_string(), "t=1/2 engine=1 oracle=1\nt=3 engine=0 oracle=1\nagreement 1/2\n");
  EXPECT_FALSE(r.all_agree());
}

TEST(Agreement, TimesIncludeEveryCriticalPoint) {
  std::vector<Rational> critical{Rational(1, 3), Rational(2, 3), Rational(5, 7)};
  auto times = agreement_times(critical, 0, 2, 2, 3);
  for (const auto& c : critical) EXPECT_TRUE(std::binary_search(times.begin(), times.end(), c));
  EXPECT_EQ(agreement_times(critical, 0, 2, 40, 3), agreement_times(critical, 0, 2, 40, 3));
  EXPECT_EQ(agreement_times(critical, 0, 2, 40, 3).size(), 40u);
}

TEST(OracleProperties, RegionConstancy) {
  gen::Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    TimeDomain d = gen::random_domain(rng);
    Env env;
    env.domain = d;
    env.bind("P", gen::random_signal(rng, d));
    env.bind("Q", gen::random_signal(rng, d));
    Formula f = gen::random_formula(rng, 2);
    long long depth = metrics(f).modal_depth;
    Rational lo = d == kHalf ? Rational(0) : Rational(-2), hi(4);
    std::vector<Rational> cuts{lo, hi};
    for (const auto& [name, s] : env.bindings)
      for (const auto& e : s.window(lo - depth, hi + depth).endpoints())
        for (long long j = -depth; j <= depth; ++j) cuts.push_back(e + Rational(j));
    if (d == kHalf)
      for (long long j = 0; j <= depth; ++j) cuts.push_back(Rational(j));
    std::erase_if(cuts, [&](const Rational& c) { return c < lo || hi < c; });
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    Oracle oracle(f, env);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Rational& a = cuts[i];
      Rational w = cuts[i + 1] - a;
      bool first = oracle.at(a + w / Rational(4));
      ASSERT_EQ(oracle.at(a + w / Rational(2)), first) << print(f) << " near " << a;
      ASSERT_EQ(oracle.at(a + w * Rational(3, 4)), first) << print(f) << " near " << a;
    }
  }
}
