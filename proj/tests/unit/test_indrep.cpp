#include <gtest/gtest.h>

#include <random>

#include "thetafay/errors.hpp"
#include "thetafay/group.hpp"
#include "thetafay/indrep.hpp"

using namespace thetafay;

TEST(RepMatrix, IdentityIsIdentity) {
    for (int g = 1; g <= 3; ++g) {
        for (auto p : {Parity::Even, Parity::Odd}) {
            const auto r = rep_matrix(SymplecticF2::identity(g), p);
            EXPECT_EQ(r.dense(), IntMatrix::identity(characteristic_count(g, p)));
        }
    }
}

TEST(RepMatrix, GenusOneJ) {
    // columns (0;0), (0;1), (1;0); J swaps the last two, every sign is -1
    IntMatrix expected(3, 3);
    expected(0, 0) = -1;
    expected(2, 1) = -1;
    expected(1, 2) = -1;
    EXPECT_EQ(rep_matrix(SymplecticF2::j(1), Parity::Even).dense(), expected);
}

TEST(RepMatrix, GenusOneTranslation) {
    // T_[1]{(a;b)} = (a; a+b+1) with sign (-1)^a
    IntMatrix expected(3, 3);
    expected(1, 0) = 1;   // (0;0) -> (0;1)
    expected(0, 1) = 1;   // (0;1) -> (0;0)
    expected(2, 2) = -1;  // (1;0) -> (1;0)
    const auto t = SymplecticF2::translation(F2Matrix::from_rows({"1"}));
    EXPECT_EQ(rep_matrix(t, Parity::Even).dense(), expected);
}

TEST(RepMatrix, HomomorphismAndTraceBound) {
    std::mt19937_64 rng(9);
    for (int g = 1; g <= 4; ++g) {
        const auto gens = generators(g);
        for (auto p : {Parity::Even, Parity::Odd}) {
            const Sector sec(g, p);
            const auto k = static_cast<std::int64_t>(sec.size());
            for (int t = 0; t < 20; ++t) {
                const auto s = random_word(gens, 10, rng);
                const auto u = random_word(gens, 10, rng);
                const auto rs = rep_matrix(s, sec);
                const auto ru = rep_matrix(u, sec);
                ASSERT_EQ(rep_matrix(u * s, sec), ru * rs);
                ASSERT_EQ((ru * rs).dense(), ru.dense() * rs.dense());
                EXPECT_LE(std::abs(rs.trace()), k);
                EXPECT_EQ(rs.trace(), character(s, sec, true));
            }
        }
    }
}

TEST(SignedPerm, RejectsMalformedInput) {
    EXPECT_THROW(SignedPermMatrix(1, Parity::Even, {0, 0, 1}, {1, 1, 1}), AlgebraError);
    EXPECT_THROW(SignedPermMatrix(1, Parity::Even, {0, 1, 2}, {1, 2, 1}), AlgebraError);
    EXPECT_THROW(SignedPermMatrix(1, Parity::Even, {0, 1}, {1, 1, 1}), DimensionError);
}

TEST(CharacterNorm, GenusOneAgainstDenseTraces) {
    const auto group = enumerate_group(1);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < group.size(); ++i) {
        const auto t = rep_matrix(group.element(i), Parity::Even).dense().trace();
        sum += t * t;
    }
    EXPECT_EQ(sum, 12);  // <chi,chi> = 12 / 6
    const auto norm = character_norm(group, Parity::Even, true);
    EXPECT_EQ(norm.norm, (Rational{2, 1}));
    EXPECT_EQ(norm.group_order, 6u);
}

TEST(CharacterNorm, GenusTwoSectors) {
    const auto group = enumerate_group(2);
    EXPECT_EQ(character_norm(group, Parity::Even, true).norm, (Rational{2, 1}));
    EXPECT_EQ(character_norm(group, Parity::Odd, true).norm, (Rational{2, 1}));
    EXPECT_EQ(character_norm(group, Parity::Even, false).norm, (Rational{2, 1}));
    EXPECT_EQ(character_norm(group, Parity::Odd, false).norm, (Rational{2, 1}));
}

TEST(CharacterNorm, IndependentOfThreadCount) {
    const auto group = enumerate_group(2);
    setenv("THETA_FAY_THREADS", "3", 1);
    const auto a = character_norm(group, Parity::Even, true);
    setenv("THETA_FAY_THREADS", "1", 1);
    const auto b = character_norm(group, Parity::Even, true);
    unsetenv("THETA_FAY_THREADS");
    EXPECT_EQ(a.norm, b.norm);
}

TEST(InducedFunction, WellDefinedEvenAndOdd) {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::uint32_t> pick(0, 15);
    for (int t = 0; t < 10; ++t) {
        const auto m = Characteristic::from_index(2, pick(rng));
        EXPECT_TRUE(verify_basis_welldefined(m, 10, rng)) << m.to_string();
    }
    EXPECT_TRUE(verify_basis_welldefined(Characteristic::zero(3), 5, rng));
    EXPECT_TRUE(verify_basis_welldefined(odd_base(3), 5, rng));
}

TEST(InducedFunction, TransformsByEpsilonOnTheLeft) {
    std::mt19937_64 rng(4);
    const auto gens = generators(2);
    const auto base = Characteristic::zero(2);
    const auto m = Characteristic::parse("01|10");
    const InducedFunction f(base, m, transporter(m, base, gens));
    for (int t = 0; t < 30; ++t) {
        const auto h = random_stabilizer_element(base, gens, rng);
        const auto s = random_word(gens, 9, rng);
        EXPECT_EQ(f.value(h * s), epsilon(h, base) * f.value(s));
    }
    EXPECT_THROW(InducedFunction(base, m, SymplecticF2::identity(2)), AlgebraError);
}

TEST(InvariantSubspace, FullSpaceAndRandomLine) {
    const auto gens = generators(2);
    std::vector<SymplecticF2> samples;
    for (const auto& gen : gens.elements) samples.push_back(gen.element);
    std::vector<BigVector> full;
    for (std::size_t i = 0; i < 10; ++i) {
        BigVector v(10, 0);
        v[i] = 1;
        full.push_back(v);
    }
    EXPECT_TRUE(invariant_subspace_check(full, 2, Parity::Even, samples));
    const BigVector line{3, -1, 4, 1, -5, 9, 2, -6, 5, 3};
    EXPECT_FALSE(invariant_subspace_check({line}, 2, Parity::Even, samples));
    EXPECT_THROW(invariant_subspace_check({BigVector{1, 2}}, 2, Parity::Even, samples), DimensionError);
}
