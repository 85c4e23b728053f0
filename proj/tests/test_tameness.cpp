#include <gtest/gtest.h>

#include "factorlab/tameness.hpp"

using namespace factorlab;

namespace {
MonoidSpec num(std::vector<std::int64_t> g) { return Numerical::from_generators(std::move(g)); }
}

TEST(MIndex, Numerical) {
    auto s = num({2, 3});
    EXPECT_EQ(m_index(s, Element::scalar(2)).value, 2);
    EXPECT_EQ(m_index(s, Element::scalar(3)).value, 3);
    EXPECT_THROW(m_index(s, Element::scalar(1)), InputError);
    EXPECT_THROW(m_index(s, Element::scalar(0)), InputError);
}

TEST(MIndex, MatchesLengthFormula) {
    // M(x) = 1 + max{max L(b) : b in S \ (x + S), b != 0}
    for (auto gens : std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 5}, {6, 9, 20}, {4, 6, 9}, {5, 7, 11, 13}}) {
        auto spec = num(gens);
        const auto& s = std::get<Numerical>(spec);
        const auto top = 200;
        Window w(spec, {top});
        LengthTable lt(w);
        for (std::int64_t x = 1; x <= 40; ++x) {
            if (!s.contains(x)) continue;
            std::int64_t best = 0;
            for (std::int64_t b = 1; b <= x + s.frobenius() && b <= top; ++b)
                if (s.contains(b) && !s.contains(b - x)) best = std::max(best, lt.max_length(static_cast<std::size_t>(b)));
            EXPECT_EQ(numerical_m_index(s, x), best + 1) << x;
        }
    }
}

TEST(Omega, Numerical) {
    auto s = num({2, 3});
    EXPECT_EQ(omega_atom(s, Element::scalar(2)).value, 2);
    EXPECT_EQ(omega_atom(s, Element::scalar(3)).value, 3);
    EXPECT_THROW(omega_atom(s, Element::scalar(4)), InputError);
    EXPECT_EQ(omega_atom(num({1}), Element::scalar(1)).value, 1);
}

TEST(Omega, WindowSearchAgreesWithNumerical) {
    for (auto gens : std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 5}, {4, 6, 9}, {6, 9, 20}}) {
        auto spec = num(gens);
        const auto& s = std::get<Numerical>(spec);
        for (auto g : s.generators()) {
            auto M = numerical_m_index(s, g);
            Window w(spec, {M * s.largest_generator()});
            bool done = true;
            EXPECT_EQ(omega_in_window(w, static_cast<std::size_t>(g), 10'000'000, done), numerical_omega(s, g));
            EXPECT_TRUE(done);
        }
    }
}

TEST(Omega, FactorialIsPrime) {
    MonoidSpec s = FinGenVec::from_generators({{1, 2}});
    auto w = omega_atom(s, Element::vec({1, 2}));
    EXPECT_EQ(w.value, 1);
    EXPECT_EQ(w.certification, Certification::Exact);
}

TEST(Omega, DeepeningFindsLongCover) {
    // a plain depth-first search exhausted its node budget here and reported 1
    MonoidSpec s = HalfSpaceDiagonal{};
    auto w = omega_atom(s, Element::vec({0, 1, 1}));
    EXPECT_GE(w.value, 2);
}

TEST(Omega, FactorialIsMaxLength) {
    MonoidSpec s = FinGenVec::from_generators({{1, 0}, {0, 1}});
    auto w = omega(s, Element::vec({2, 3}));
    EXPECT_EQ(w.value, 5);
    EXPECT_EQ(w.certification, Certification::Exact);
}

TEST(TameDegree, PrimeIsZero) {
    MonoidSpec s = FinGenVec::from_generators({{1, 2}});
    auto t = tame_degree(s, Element::vec({1, 2}));
    EXPECT_EQ(t.lower, 0);
    EXPECT_EQ(t.upper, 0);
    EXPECT_TRUE(t.exact);
}

TEST(TameDegree, NumericalTwoThree) {
    auto s = num({2, 3});
    Budget b;
    b.radius = 40;
    auto t2 = tame_degree(s, Element::scalar(2), b);
    auto t3 = tame_degree(s, Element::scalar(3), b);
    EXPECT_EQ(t2.lower, 3);
    EXPECT_EQ(t2.upper, 3);
    EXPECT_TRUE(t2.exact);
    EXPECT_EQ(t3.lower, 3);
    EXPECT_EQ(t3.upper, 4);  // rho_3 = max L(9)
}

TEST(TameDegree, LowerMonotoneInRadius) {
    auto s = num({3, 5, 7});
    std::int64_t prev = 0;
    for (std::int64_t r : {0, 5, 10, 20, 30}) {
        Budget b;
        b.radius = r;
        auto t = tame_degree(s, Element::scalar(5), b);
        EXPECT_GE(t.lower, prev);
        prev = t.lower;
    }
}

TEST(TameDegree, BoxBoundStaysAtThreeForDiagonalAtom) {
    MonoidSpec s = HalfSpaceDiagonal{};
    for (std::int64_t box : {4, 6}) {
        auto e = tame_lower_in_box(s, Element::vec({0, 1, 1}), cube(s, box), 20000);
        EXPECT_EQ(e.lower, 3);
    }
    auto a = tame_lower_in_box(s, Element::vec({1, 0, 0}), cube(s, 4), 20000);
    auto b = tame_lower_in_box(s, Element::vec({1, 0, 0}), cube(s, 6), 20000);
    EXPECT_LT(a.lower, b.lower);
}

TEST(StrongPrimary, Numerical) {
    auto r = strong_primary_report(num({6, 9, 20}));
    EXPECT_EQ(r.status, PrimaryStatus::Certified);
    ASSERT_EQ(r.m_values.size(), 3u);
    for (const auto& [u, m] : r.m_values) {
        EXPECT_EQ(m.certification, Certification::Exact);
        EXPECT_LE(omega_atom(num({6, 9, 20}), u).value, *m.value);
    }
}

TEST(StrongPrimary, PuiseuxClosedForm) {
    auto r = strong_primary_report(PuiseuxTail{});
    EXPECT_EQ(r.status, PrimaryStatus::Certified);
    EXPECT_EQ(r.m_values[0].second.value, 2);
}
