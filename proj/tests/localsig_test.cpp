#include <gtest/gtest.h>

#include "fixtures/families.hpp"
#include "meyer/cocycle.hpp"
#include "meyer/ledger_io.hpp"
#include "meyer/localsig.hpp"
#include "meyer/varieties.hpp"

namespace meyer {
namespace {

TEST(SurfaceTopology, NoetherAndHirzebruch) {
  const auto t10 = surface_topology({4 * 10 - 10, 14 * 10 - 46});
  EXPECT_EQ(t10.chi_top, 34 * 10 - 74);
  EXPECT_EQ(t10.sign, -18 * 10 + 34);
  EXPECT_EQ(t10.chi_top, 266);
  EXPECT_EQ(t10.sign, -146);

  const auto t0 = surface_topology({0, 0});
  EXPECT_EQ(t0.chi_top, 0);
  EXPECT_EQ(t0.sign, 0);

  const auto t5 = surface_topology({14, 39});
  EXPECT_EQ(t5.chi_top, 129);
  EXPECT_EQ(t5.sign, -73);
}

TEST(SurfaceTopology, RoundTripAndSignatureTheorem) {
  for (long chi_o = -5; chi_o <= 20; ++chi_o)
    for (long k2 = -10; k2 <= 60; k2 += 7) {
      const auto t = surface_topology({chi_o, k2});
      const auto [c, k] = holomorphic_from_topology(t.chi_top, t.sign);
      EXPECT_EQ(c, chi_o);
      EXPECT_EQ(k, k2);
      // Sign = (K^2 - 2 chi_top) / 3
      EXPECT_EQ(3 * t.sign, k2 - 2 * t.chi_top);
    }
  EXPECT_THROW(holomorphic_from_topology(1, 2), Error);
}

TEST(FiberCount, Examples) {
  EXPECT_EQ(fiber_count(266, 4), 278);
  EXPECT_EQ(fiber_count(34 * 10 - 74, 4), 34 * 10 - 62);
  EXPECT_EQ(fiber_count(2 * (2 - 2 * 4), 4), 0);
  EXPECT_EQ(fiber_count(129, 4), 34 * 5 - 29);
  EXPECT_THROW(fiber_count(10, 1), Error);
}

TEST(FiberCount, PrintedLinearFormsOverRange) {
  for (const auto& fam : testing::families)
    for (long a = 3; a <= 12; ++a) {
      const auto t = surface_topology({fam.chi_O.at(a), fam.K2.at(a)});
      EXPECT_EQ(t.chi_top, fam.chi_top.at(a)) << fam.label << " a=" << a;
      EXPECT_EQ(t.sign, fam.sign.at(a)) << fam.label << " a=" << a;
      EXPECT_EQ(fiber_count(t.chi_top, 4), fam.singular_euler.at(a)) << fam.label << " a=" << a;
    }
}

TEST(GermSigma, Examples) {
  EXPECT_EQ(germ_sigma(Rational(28, 17), -1), Rational(11, 17));
  EXPECT_EQ(germ_sigma(Rational(36, 17), -1), Rational(19, 17));
  EXPECT_EQ(germ_sigma(Rational(5, 7), 0), Rational(5, 7));
}

TEST(Ledger, BuiltinTable) {
  EXPECT_EQ(germ("R4/F_I").sigma, Rational(-9, 17));
  EXPECT_EQ(germ("R4/F_R").sigma, Rational(2, 17));
  EXPECT_EQ(germ("NT5/F_I").sigma, Rational(-1, 2));
  EXPECT_EQ(germ("R4/F_31").sigma, Rational(11, 17));
  EXPECT_EQ(germ("R4/F_22").sigma, Rational(19, 17));
  EXPECT_EQ(germ("R4/F_Rprime").sigma, Rational(4, 17));
  EXPECT_THROW(germ("R4/F_X"), Error);
  for (const auto& g : builtin_germs()) EXPECT_EQ(g.sigma, g.phi + Rational(g.nbhd_sign)) << g.name;
  EXPECT_EQ(2 * germ("R4/F_R").sigma, germ("R4/F_Rprime").sigma);
}

TEST(Ledger, TypeIAgreesWithLassoValues) {
  EXPECT_EQ(germ("R4/F_I").phi, generic_surface_lasso(segre33_invariants()).phi);
  EXPECT_EQ(germ("NT5/F_I").phi, veronese_ci_lasso({0, {}, 4, 2}).phi);
}

TEST(Ledger, TypeIPowersMatchCocycleAccumulation) {
  const auto a = transvection({1, 0});
  const Rational phi_sigma = germ("R4/F_I").phi;
  Rational acc = phi_sigma;
  for (long n = 2; n <= 10; ++n) {
    acc += phi_sigma - tau(a.pow(n - 1), a);
    EXPECT_EQ(acc, lasso_power(phi_sigma, n));
  }
}

TEST(SolveUnknownGerm, Examples) {
  const LedgerEntry fi = LedgerEntry::from(germ("R4/F_I"), 277);
  EXPECT_EQ(solve_unknown_germ({-146, {fi, {"x", std::nullopt, 0, 1}}}).sigma, Rational(11, 17));
  const LedgerEntry fi140 = LedgerEntry::from(germ("R4/F_I"), 140);
  const auto s = solve_unknown_germ({-73, {fi140, {"x", std::nullopt, -1, 1}}});
  EXPECT_EQ(s.sigma, Rational(19, 17));
  EXPECT_EQ(s.phi, Rational(36, 17));
  EXPECT_EQ(solve_unknown_germ({0, {{"x", std::nullopt, 0, 1}}}).sigma, 0);
}

TEST(SolveUnknownGerm, NeedsExactlyOneUnknown) {
  const LedgerEntry fi = LedgerEntry::from(germ("R4/F_I"), 3);
  try {
    solve_unknown_germ({0, {fi}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_or_many_unknowns);
  }
  try {
    solve_unknown_germ({0, {{"x", std::nullopt, 0, 1}, {"y", std::nullopt, 0, 1}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_or_many_unknowns);
  }
}

TEST(CheckFibration, DegenerationFamilies) {
  // (3,1) at a = 10, (2,2) at a = 5, R' at a = 7 (178 type-I germs)
  const auto r31 = check_fibration({-146, {LedgerEntry::from(germ("R4/F_I"), 277), LedgerEntry::from(germ("R4/F_31"), 1)}});
  EXPECT_TRUE(r31.balanced());
  const auto r22 = check_fibration({-73, {LedgerEntry::from(germ("R4/F_I"), 140), LedgerEntry::from(germ("R4/F_22"), 1)}});
  EXPECT_TRUE(r22.balanced());
  const auto t7 = surface_topology({4 * 7 - 10, 14 * 7 - 48});
  EXPECT_EQ(t7.sign, -94);
  EXPECT_EQ(t7.chi_top, 166);
  EXPECT_EQ(fiber_count(t7.chi_top, 4), 178);
  const auto rr =
      check_fibration({t7.sign, {LedgerEntry::from(germ("R4/F_I"), 178), LedgerEntry::from(germ("R4/F_Rprime"), 1)}});
  EXPECT_TRUE(rr.balanced());
  // one type-I germ short leaves exactly sigma(F_I) unaccounted
  const auto off =
      check_fibration({t7.sign, {LedgerEntry::from(germ("R4/F_I"), 177), LedgerEntry::from(germ("R4/F_Rprime"), 1)}});
  EXPECT_EQ(off.residual, Rational(-9, 17));
}

TEST(SmoothGerm, Check) {
  EXPECT_TRUE(smooth_germ_check(FiberGerm::make("smooth", 0, 0, true)));
  EXPECT_THROW(smooth_germ_check(FiberGerm::make("bad", Rational(-9, 17), 0, true)), Error);
  for (const auto& g : builtin_germs()) EXPECT_TRUE(smooth_germ_check(g));
}

TEST(LedgerJson, ParseSolveAndRoundTrip) {
  const char* text = R"({"total_sign": -146, "germs": [
      {"name": "R4/F_I", "count": 277},
      {"name": "R4/F_31", "unknown": true, "nbhd_sign": -1}]})";
  FibrationLedger ledger = parse_ledger_json(text);
  ASSERT_EQ(ledger.germs.size(), 2u);
  EXPECT_EQ(ledger.germs[0].phi, Rational(-9, 17));
  const auto s = solve_unknown_germ(ledger);
  EXPECT_EQ(s.sigma, Rational(11, 17));
  EXPECT_EQ(s.phi, Rational(28, 17));

  ledger.germs[1].phi = s.phi;
  const FibrationLedger again = parse_ledger_json(ledger_to_json(ledger));
  EXPECT_TRUE(check_fibration(again).balanced());
}

TEST(LedgerJson, Malformed) {
  EXPECT_THROW(parse_ledger_json("{"), Error);
  EXPECT_THROW(parse_ledger_json(R"({"germs": []})"), Error);
  EXPECT_THROW(parse_ledger_json(R"({"total_sign": 0, "germs": [{"name": "custom"}]})"), Error);
  EXPECT_THROW(parse_ledger_json(R"({"total_sign": 0, "germs": [{"name": "a", "phi": "1/0"}]})"), Error);
  EXPECT_THROW(parse_ledger_json(R"({"total_sign": 0, "germs": [{"name": "a", "phi": 1.5}]})"), Error);
}

}  // namespace
}  // namespace meyer
