#include <gtest/gtest.h>

#include "factorlab/monoid.hpp"
#include "factorlab/window.hpp"

using namespace factorlab;

TEST(Numerical, NormalizesToMinimalGenerators) {
    EXPECT_EQ(Numerical::from_generators({2, 4, 5}).generators(), (std::vector<std::int64_t>{2, 5}));
    EXPECT_EQ(Numerical::from_generators({9, 4, 6, 4}).generators(), (std::vector<std::int64_t>{4, 6, 9}));
}

TEST(Numerical, RejectsBadInput) {
    EXPECT_THROW(Numerical::from_generators({4, 6}), InputError);
    EXPECT_THROW(Numerical::from_generators({}), InputError);
    EXPECT_THROW(Numerical::from_generators({0, 1}), InputError);
}

TEST(Numerical, FrobeniusAndApery) {
    auto s = Numerical::from_generators({6, 9, 20});
    EXPECT_EQ(s.frobenius(), 43);
    EXPECT_EQ(Numerical::from_generators({2, 3}).frobenius(), 1);
    EXPECT_EQ(Numerical::from_generators({3, 5}).frobenius(), 7);
    EXPECT_EQ(Numerical::from_generators({1}).frobenius(), -1);
    EXPECT_EQ(Numerical::from_generators({3, 5}).apery(), (std::vector<std::int64_t>{0, 10, 5}));
    for (std::int64_t x = 0; x < 100; ++x) {
        bool naive = false;
        for (int a = 0; a * 6 <= x && !naive; ++a)
            for (int b = 0; a * 6 + b * 9 <= x && !naive; ++b)
                naive = (x - a * 6 - b * 9) % 20 == 0;
        EXPECT_EQ(s.contains(x), naive) << x;
    }
}

TEST(SqrtCone, Membership) {
    auto c = SqrtCone::with_m(2);
    EXPECT_TRUE(c.contains(0, 0));
    EXPECT_TRUE(c.contains(1, 1));
    EXPECT_FALSE(c.contains(1, 2));
    EXPECT_TRUE(c.contains(5, 7));   // 49 < 50
    EXPECT_FALSE(c.contains(1, 0));  // y must be positive
    EXPECT_THROW(SqrtCone::with_m(4), InputError);
    EXPECT_THROW(SqrtCone::with_m(1), InputError);
}

TEST(SqrtCone, AtomsInSmallBox) {
    MonoidSpec s = SqrtCone::with_m(2);
    auto atoms = atoms_up_to(s, 1);
    ASSERT_EQ(atoms.size(), 1u);
    EXPECT_EQ(atoms[0], Element::vec({1, 1}));
    auto a3 = atoms_up_to(s, 3);
    for (const auto& u : a3) EXPECT_TRUE(is_atom(s, u));
}

TEST(HalfSpaceDiagonal, AtomsAreKnownShapes) {
    MonoidSpec s = HalfSpaceDiagonal{};
    for (const auto& u : atoms_up_to(s, 4)) {
        const auto& c = u.coords();
        bool shape = (c == IntVec{0, 1, 1}) || (c[0] == 1 && (c[1] == 0 || c[2] == 0));
        EXPECT_TRUE(shape) << to_string(c);
    }
    EXPECT_TRUE(is_atom(s, Element::vec({1, 0, 0})));
    EXPECT_FALSE(is_atom(s, Element::vec({1, 1, 1})));
}

TEST(FinGenVec, MinimalAndFactorial) {
    auto f = FinGenVec::from_generators({{1, 0}, {0, 1}, {1, 1}});
    EXPECT_EQ(f.generators().size(), 2u);
    EXPECT_TRUE(is_factorial(MonoidSpec{f}));
    auto g = FinGenVec::from_generators({{2, 0}, {1, 1}, {0, 2}});
    EXPECT_FALSE(is_factorial(MonoidSpec{g}));
    EXPECT_TRUE(g.contains({1, 3}));
    EXPECT_FALSE(g.contains({1, 0}));
    EXPECT_THROW(FinGenVec::from_generators({{1, -1}}), InputError);
    EXPECT_THROW(FinGenVec::from_generators({{0, 0}}), InputError);
}

TEST(Window, IndexArithmetic) {
    MonoidSpec s = HalfSpaceDiagonal{};
    Window w(s, {2, 3, 3});
    auto a = w.index({1, 2, 1});
    auto b = w.index({0, 1, 1});
    EXPECT_EQ(w.point(a - b), (IntVec{1, 1, 0}));
    EXPECT_TRUE(w.divides(b, a));
    EXPECT_FALSE(w.member(w.index({0, 1, 2})));
}

TEST(LengthTableTest, NumericalLengths) {
    MonoidSpec s = Numerical::from_generators({2, 3});
    Window w(s, {12});
    LengthTable lt(w);
    EXPECT_EQ(lt.lengths(6), (std::vector<std::int64_t>{2, 3}));
    EXPECT_EQ(lt.lengths(7), (std::vector<std::int64_t>{3}));
    EXPECT_EQ(lt.lengths(12), (std::vector<std::int64_t>{4, 5, 6}));
    EXPECT_EQ(lt.max_length(1), -1);
}
