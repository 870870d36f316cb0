#include <gtest/gtest.h>

#include <random>

#include "thetafay/characteristic.hpp"
#include "thetafay/errors.hpp"
#include "thetafay/group.hpp"
#include "thetafay/symplectic.hpp"

using namespace thetafay;

namespace {

// Reference action straight from the block formula, using dense F2Matrix
// arithmetic instead of the packed row masks.
Characteristic reference_action(const SymplecticF2& s, const Characteristic& m) {
    const auto g = static_cast<std::size_t>(s.genus());
    const auto inv_t = s.matrix().transpose().inverse();
    BitVec ab(2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        ab.set(i, m.a().get(i));
        ab.set(g + i, m.b().get(i));
    }
    const auto img = inv_t * ab;
    const auto cd = (s.c() * s.d().transpose()).diagonal();
    const auto abt = (s.a() * s.b().transpose()).diagonal();
    BitVec a(g), b(g);
    for (std::size_t i = 0; i < g; ++i) {
        a.set(i, img.get(i) ^ cd.get(i));
        b.set(i, img.get(g + i) ^ abt.get(i));
    }
    return {a, b};
}

bool quad(const F2Matrix& q, const BitVec& x) {
    // x'Qx over F2
    return x.dot(q * x);
}

int reference_epsilon(const SymplecticF2& s, const Characteristic& m) {
    const bool e = (s.b().transpose() * s.c()).trace() ^ quad(s.b().transpose() * s.d(), m.a()) ^
                   quad(s.a().transpose() * s.c(), m.b());
    return e ? -1 : 1;
}

std::vector<Characteristic> all_characteristics(int g) {
    std::vector<Characteristic> out;
    for (std::uint32_t i = 0; i < (1u << (2 * g)); ++i) out.push_back(Characteristic::from_index(g, i));
    return out;
}

}  // namespace

TEST(Characteristic, ParityExamples) {
    EXPECT_EQ(parity(Characteristic::parse("0|0")), Parity::Even);
    EXPECT_EQ(parity(Characteristic::parse("1|1")), Parity::Odd);
    EXPECT_EQ(parity(Characteristic::parse("11|10")), Parity::Odd);
    EXPECT_EQ(parity(Characteristic::parse("11|11")), Parity::Even);
}

TEST(Characteristic, ParseRoundTripAndErrors) {
    const auto m = Characteristic::parse("101|011");
    EXPECT_EQ(m.to_string(), "101|011");
    EXPECT_EQ(Characteristic::from_index(3, m.index()), m);
    EXPECT_EQ(m.index(), 0b101011u);
    EXPECT_THROW(Characteristic::parse("10|1"), DimensionError);
    EXPECT_THROW(Characteristic::parse("101"), DimensionError);
}

TEST(Characteristic, ParityCountsExhaustive) {
    for (int g = 1; g <= 4; ++g) {
        std::size_t even = 0, odd = 0;
        for (const auto& m : all_characteristics(g)) (parity(m) == Parity::Even ? even : odd)++;
        const std::size_t h = std::size_t{1} << (g - 1), f = std::size_t{1} << g;
        EXPECT_EQ(even, h * (f + 1)) << "g=" << g;
        EXPECT_EQ(odd, h * (f - 1)) << "g=" << g;
        EXPECT_EQ(characteristic_count(g, Parity::Even), even);
        EXPECT_EQ(characteristic_count(g, Parity::Odd), odd);
    }
}

TEST(Characteristic, SectorOrderIsLexicographic) {
    const Sector even(1, Parity::Even);
    ASSERT_EQ(even.size(), 3u);
    EXPECT_EQ(even[0].to_string(), "0|0");
    EXPECT_EQ(even[1].to_string(), "0|1");
    EXPECT_EQ(even[2].to_string(), "1|0");
    const Sector odd(2, Parity::Odd);
    for (std::size_t i = 1; i < odd.size(); ++i) EXPECT_LT(odd[i - 1].index(), odd[i].index());
    EXPECT_THROW((void)odd.position(Characteristic::zero(2)), ParityError);
    EXPECT_EQ(odd_base(3).to_string(), "100|100");
}

TEST(Pairing, GenusOneExamples) {
    EXPECT_EQ(pairing_e(Characteristic::parse("0|1"), Characteristic::parse("1|0")), -1);
    const Sector even(1, Parity::Even);
    const int expected[3][3] = {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(pairing_e(even[i], even[j]), expected[i][j]);
    EXPECT_THROW((void)pairing_e(Characteristic::zero(1), Characteristic::zero(2)), DimensionError);
}

TEST(Pairing, SymmetricAndDiagonalBruteForce) {
    for (int g = 1; g <= 3; ++g) {
        const auto all = all_characteristics(g);
        for (const auto& m : all) {
            EXPECT_EQ(pairing_e(m, m), 1);
            for (const auto& n : all) {
                int exponent = 0;
                for (int i = 0; i < g; ++i) exponent += m.a().get(i) * n.b().get(i) + m.b().get(i) * n.a().get(i);
                EXPECT_EQ(pairing_e(m, n), exponent % 2 ? -1 : 1);
                EXPECT_EQ(pairing_e(m, n), pairing_e(n, m));
            }
        }
    }
}

TEST(Action, IdentityJAndTranslations) {
    for (int g = 1; g <= 3; ++g) {
        const auto id = SymplecticF2::identity(g);
        const auto j = SymplecticF2::j(g);
        for (const auto& m : all_characteristics(g)) {
            EXPECT_EQ(affine_action(id, m), m);
            EXPECT_EQ(epsilon(id, m), 1);
            EXPECT_EQ(affine_action(j, m), Characteristic(m.b(), m.a()));
        }
    }
    for (const auto& m : all_characteristics(1)) EXPECT_EQ(epsilon(SymplecticF2::j(1), m), -1);

    const auto s = F2Matrix::from_rows({"11", "10"});
    const auto t = SymplecticF2::translation(s);
    for (const auto& m : all_characteristics(2)) {
        const auto b = s * m.a() ^ m.b() ^ s.diagonal();
        EXPECT_EQ(affine_action(t, m), Characteristic(m.a(), b));
        EXPECT_EQ(epsilon(t, m), quad(s, m.a()) ? -1 : 1);
    }
}

TEST(Action, MatchesReferenceOnRandomElements) {
    std::mt19937_64 rng(5);
    for (int g = 1; g <= 4; ++g) {
        const auto gens = generators(g);
        for (int trial = 0; trial < 40; ++trial) {
            const auto s = random_word(gens, 20, rng);
            for (const auto& m : all_characteristics(g)) {
                ASSERT_EQ(affine_action(s, m), reference_action(s, m));
                ASSERT_EQ(affine_action_index(s, m.index()), reference_action(s, m).index());
                ASSERT_EQ(epsilon(s, m), reference_epsilon(s, m));
                ASSERT_EQ(epsilon_index(s, m.index()), epsilon(s, m));
            }
        }
    }
}

TEST(Action, LawAndParityExhaustiveOverGenerators) {
    for (int g = 1; g <= 3; ++g) {
        const auto gens = generators(g);
        for (const auto& x : gens.elements) {
            for (const auto& y : gens.elements) {
                for (const auto& m : all_characteristics(g)) {
                    const auto& s = x.element;
                    const auto& t = y.element;
                    ASSERT_EQ(affine_action(s * t, m), affine_action(s, affine_action(t, m)));
                    ASSERT_EQ(parity(affine_action(s, m)), parity(m));
                    ASSERT_EQ(epsilon(t * s, m), epsilon(s, m) * epsilon(t, affine_action(s, m)));
                }
            }
        }
    }
}

TEST(Action, LawCocycleAndPairingRandomizedGenusFour) {
    std::mt19937_64 rng(17);
    const auto gens = generators(4);
    std::uniform_int_distribution<std::uint32_t> pick(0, 255);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = random_word(gens, 15, rng);
        const auto t = random_word(gens, 15, rng);
        const auto m = Characteristic::from_index(4, pick(rng));
        const auto n = Characteristic::from_index(4, pick(rng));
        ASSERT_EQ(affine_action(s * t, m), affine_action(s, affine_action(t, m)));
        ASSERT_EQ(epsilon(t * s, m), epsilon(s, m) * epsilon(t, affine_action(s, m)));
        ASSERT_EQ(pairing_e(affine_action(s, m), affine_action(s, n)), pairing_e(m, n) * epsilon(s, m) * epsilon(s, n));
    }
}

TEST(Symplectic, ConstructorRejectsNonSymplectic) {
    EXPECT_THROW(SymplecticF2(F2Matrix::from_rows({"11", "01"}) * F2Matrix::from_rows({"10", "00"})), AlgebraError);
    EXPECT_THROW(SymplecticF2::translation(F2Matrix::from_rows({"01", "00"})), AlgebraError);
    const auto x = SymplecticF2::translation(F2Matrix::from_rows({"1"})) * SymplecticF2::j(1);
    EXPECT_EQ(x * x.inverse(), SymplecticF2::identity(1));
    EXPECT_EQ(SymplecticF2::from_code(1, x.code()), x);
}
