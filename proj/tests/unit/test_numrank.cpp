#include <gtest/gtest.h>

#include <random>

#include "thetafay/numrank.hpp"

using namespace thetafay;

namespace {

Eigen::MatrixXcd random_rank(std::size_t rows, std::size_t cols, std::size_t r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n;
    Eigen::MatrixXcd a(rows, r), b(r, cols);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = {n(rng), n(rng)};
    for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = {n(rng), n(rng)};
    return a * b;
}

}  // namespace

TEST(NumericalRank, LowRankProducts) {
    for (std::size_t r : {1u, 3u, 7u}) {
        const auto rep = numerical_rank(random_rank(20, 10, r, r));
        EXPECT_EQ(rep.rank, r);
        EXPECT_TRUE(rep.conclusive);
        EXPECT_GE(rep.gap_ratio, kMinGapRatio);
        EXPECT_EQ(rep.pivots.size(), 10u);
    }
    const auto full = numerical_rank(random_rank(12, 10, 10, 4));
    EXPECT_EQ(full.rank, 10u);
    EXPECT_TRUE(full.conclusive);
}

TEST(NumericalRank, GapRatio) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
    d.diagonal() << 1.0, 1e-5, 1e-9;
    auto rep = numerical_rank(d);
    EXPECT_EQ(rep.rank, 2u);
    EXPECT_NEAR(rep.gap_ratio, 1e4, 1.0);
    EXPECT_TRUE(rep.conclusive);

    d.diagonal() << 1.0, 1e-6, 1e-8;
    rep = numerical_rank(d);
    EXPECT_EQ(rep.rank, 2u);
    EXPECT_NEAR(rep.gap_ratio, 100, 1e-6);
    EXPECT_FALSE(rep.conclusive);
}

TEST(NumericalRank, ZeroAndNormalization) {
    EXPECT_EQ(numerical_rank(Eigen::MatrixXcd::Zero(4, 3)).rank, 0u);
    Eigen::MatrixXcd m(2, 2);
    m << std::complex<double>(0, 4), 2, 0, 0;
    normalize_rows(m);
    EXPECT_DOUBLE_EQ(std::abs(m(0, 0)), 1.0);
    EXPECT_DOUBLE_EQ(std::abs(m(0, 1)), 0.5);
    EXPECT_EQ(m(1, 0), std::complex<double>(0));
}
