#include <gtest/gtest.h>

#include <random>

#include "thetafay/bits.hpp"
#include "thetafay/errors.hpp"

using namespace thetafay;

TEST(BitVec, ParseAndPrint) {
    const auto v = BitVec::from_string("10110");
    EXPECT_EQ(v.size(), 5u);
    EXPECT_TRUE(v.get(0));
    EXPECT_FALSE(v.get(1));
    EXPECT_EQ(v.popcount(), 3u);
    EXPECT_EQ(v.to_string(), "10110");
    EXPECT_THROW(BitVec::from_string("102"), DimensionError);
    EXPECT_THROW((void)v.get(5), DimensionError);
}

TEST(BitVec, DotAcrossWordBoundary) {
    BitVec x(130), y(130);
    x.set(1);
    x.set(64);
    x.set(129);
    y.set(64);
    y.set(129);
    EXPECT_FALSE(x.dot(y));
    y.set(1);
    EXPECT_TRUE(x.dot(y));
    EXPECT_THROW((void)x.dot(BitVec(3)), DimensionError);
}

TEST(F2Matrix, ProductMatchesNaive) {
    std::mt19937_64 rng(3);
    std::bernoulli_distribution coin;
    F2Matrix a(5, 70), b(70, 3);
    for (std::size_t r = 0; r < 5; ++r)
        for (std::size_t c = 0; c < 70; ++c) a.set(r, c, coin(rng));
    for (std::size_t r = 0; r < 70; ++r)
        for (std::size_t c = 0; c < 3; ++c) b.set(r, c, coin(rng));
    const auto p = a * b;
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            bool acc = false;
            for (std::size_t k = 0; k < 70; ++k) acc ^= a.get(r, k) && b.get(k, c);
            EXPECT_EQ(p.get(r, c), acc);
        }
    }
    EXPECT_THROW((void)(b * b), DimensionError);
}

TEST(F2Matrix, InverseAndRank) {
    std::mt19937_64 rng(11);
    std::bernoulli_distribution coin;
    int inverted = 0;
    for (int trial = 0; trial < 200; ++trial) {
        F2Matrix m(6, 6);
        for (std::size_t r = 0; r < 6; ++r)
            for (std::size_t c = 0; c < 6; ++c) m.set(r, c, coin(rng));
        if (m.rank() == 6) {
            EXPECT_EQ(m * m.inverse(), F2Matrix::identity(6));
            ++inverted;
        } else {
            EXPECT_THROW((void)m.inverse(), AlgebraError);
        }
    }
    EXPECT_GT(inverted, 10);
}

TEST(F2Matrix, BlocksTraceEncode) {
    const auto m = F2Matrix::from_rows({"1010", "0110", "1101", "0111"});
    EXPECT_EQ(m.block(0, 2, 2, 2), F2Matrix::from_rows({"10", "10"}));
    EXPECT_TRUE(m.trace());  // 1+1+0+1
    EXPECT_EQ(F2Matrix::decode(4, 4, m.encode()), m);
    EXPECT_FALSE(m.is_symmetric());
    EXPECT_TRUE((m + m.transpose()).is_symmetric());
}
