#include <gtest/gtest.h>

#include "factorlab/global_invariants.hpp"

using namespace factorlab;

namespace {
MonoidSpec num(std::vector<std::int64_t> g) { return Numerical::from_generators(std::move(g)); }
}

TEST(Delta, Numerical) {
    auto d = delta_H(num({2, 3}), 100);
    EXPECT_EQ(d.values, (std::vector<std::int64_t>{1}));
    EXPECT_EQ(d.certification, Certification::LowerBound);
    // Delta of <6,9,20> is {1,2,3,4}: e.g. L(60) = {3,7,8,9,10} has a gap of 4.
    EXPECT_EQ(delta_H(num({6, 9, 20}), 200).values, (std::vector<std::int64_t>{1, 2, 3, 4}));
}

TEST(Delta, HalfSpaceDiagonalIsProgression) {
    auto d = delta_H(HalfSpaceDiagonal{}, 8);
    for (auto v : d.values) EXPECT_EQ(v, 1);
}

TEST(Rho, NumericalTable) {
    auto s = num({2, 3});
    auto t = rho_table(s, 10, 0);
    for (std::size_t k = 0; k < t.size(); ++k) {
        EXPECT_EQ(t[k].certification, Certification::Exact);
        EXPECT_EQ(t[k].value, static_cast<std::int64_t>(3 * (k + 1) / 2));
    }
    EXPECT_EQ(rho_k(s, 2, 0).value, 3);
    EXPECT_EQ(rho_k(s, 1, 0).value, 1);
    auto e = elasticity(s, 10, 0);
    EXPECT_EQ(e.rho_lower, Rational(3, 2));
}

TEST(Rho, NumericalIsNotSupOfMultiple) {
    // L(40) = {2} in <6,9,20>, yet 18 = 9 + 9 = 6 + 6 + 6 gives rho_2 = 3
    auto s = num({6, 9, 20});
    auto r = rho_k(s, 2, 0);
    EXPECT_EQ(r.value, 3);
    EXPECT_EQ(r.certification, Certification::Exact);
}

TEST(Rho, NondecreasingOnVectorFamilies) {
    for (MonoidSpec s : {MonoidSpec{SqrtCone::with_m(2)}, MonoidSpec{HalfSpaceDiagonal{}}}) {
        auto t = rho_table(s, 6, 8);
        EXPECT_EQ(t[0].value, 1);
        for (std::size_t k = 1; k < t.size(); ++k) EXPECT_GE(t[k].value, t[k - 1].value);
    }
}

TEST(Rho, FactorialAndPuiseux) {
    MonoidSpec f = FinGenVec::from_generators({{3}});
    auto e = elasticity(f, 5, 10);
    for (const auto& r : e.sequence) EXPECT_EQ(r, Rational(1));
    auto p = rho_table(PuiseuxTail{}, 10, 0);
    for (std::size_t k = 0; k < p.size(); ++k) EXPECT_EQ(p[k].value, static_cast<std::int64_t>(2 * k + 1));
}

TEST(Lambda, NumericalGrowth) {
    auto l = lambda_H(num({2, 3}), 60);
    EXPECT_EQ(l.sup_min_length, 20);
    EXPECT_TRUE(l.evidence_infinite);
    EXPECT_TRUE(l.certified_infinite);
    auto pw = lambda_over_powers(num({2, 3}), Element::scalar(3), 6);
    EXPECT_EQ(pw, (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6}));
}

TEST(Lambda, Puiseux) {
    auto l = lambda_H(PuiseuxTail{}, 64);
    EXPECT_TRUE(l.evidence_infinite);
    EXPECT_EQ(l.sup_min_length, 33);
}

TEST(BF, Evidence) {
    EXPECT_TRUE(bf_evidence(num({2, 3}), 40).pass);
    EXPECT_TRUE(bf_evidence(SqrtCone::with_m(2), 10).pass);
    EXPECT_TRUE(bf_evidence(HalfSpaceDiagonal{}, 4).pass);
    EXPECT_EQ(bf_evidence(PuiseuxTail{}, 0).certification, Certification::Exact);
}

TEST(RootClosed, SqrtConeYesNumericalNo) {
    EXPECT_TRUE(root_closed_spot_check(SqrtCone::with_m(2), 12, 6).pass);
    EXPECT_TRUE(root_closed_spot_check(SqrtCone::with_m(3), 12, 6).pass);
    EXPECT_FALSE(root_closed_spot_check(num({2, 3}), 5, 6).pass);
}

TEST(AtomIdeals, Numerical) {
    EXPECT_EQ(intersection_of_atom_ideals(num({2, 3})).witness, Element::scalar(5));
    EXPECT_EQ(intersection_of_atom_ideals(num({3, 5})).witness, Element::scalar(8));
    EXPECT_EQ(intersection_of_atom_ideals(num({1})).witness, Element::scalar(1));
    EXPECT_EQ(intersection_of_atom_ideals(PuiseuxTail{}).witness, Element::rat(3, 1));
    EXPECT_FALSE(intersection_of_atom_ideals(SqrtCone::with_m(2)).witness);
}

TEST(Theorem, NumericalAllTrue) {
    for (auto g : std::vector<std::vector<std::int64_t>>{{2, 3}, {6, 9, 20}, {3, 5, 7}, {1}}) {
        auto t = theorem_main_report(num(g));
        EXPECT_TRUE(t.hypothesis_certified);
        EXPECT_TRUE(t.violations.empty());
        for (const auto& c : t.conditions) EXPECT_EQ(c.verdict, Verdict::TrueCertified) << c.id;
    }
}

TEST(Theorem, FM2CheckIsOnlyADiagnostic) {
    // 57 = 45 + 6 + 6 is in f + m + m, but 57 - 20 = 37 is a gap.
    auto t = theorem_main_report(num({6, 9, 20}));
    EXPECT_EQ(t.f_m2_check.verdict, Verdict::FalseCertified);
    EXPECT_NE(t.f_m2_check.justification.find("57"), std::string::npos);
    EXPECT_TRUE(t.violations.empty());
    EXPECT_EQ(theorem_main_report(num({2, 3})).f_m2_check.verdict, Verdict::TrueCertified);
}

TEST(Theorem, PuiseuxAllTrue) {
    auto t = theorem_main_report(PuiseuxTail{});
    EXPECT_TRUE(t.violations.empty());
    for (const auto& c : t.conditions) EXPECT_EQ(c.verdict, Verdict::TrueCertified) << c.id;
}

TEST(Theorem, ViolationsAreDetected) {
    auto t = theorem_main_report(num({2, 3}));
    t.conditions[3].verdict = Verdict::FalseCertified;
    EXPECT_FALSE(theorem_violations(t).empty());
    t = theorem_main_report(num({2, 3}));
    t.conditions[0].verdict = Verdict::FalseCertified;
    EXPECT_FALSE(theorem_violations(t).empty());
}

TEST(Theorem, HalfSpaceDiagonalDoesNotCertify) {
    Budget b;
    b.element_bound = 12;
    auto t = theorem_main_report(HalfSpaceDiagonal{}, b);
    EXPECT_FALSE(t.hypothesis_certified);
    for (const auto& c : t.conditions) {
        EXPECT_NE(c.verdict, Verdict::TrueCertified) << c.id;
        EXPECT_NE(c.verdict, Verdict::FalseCertified) << c.id;
    }
}
