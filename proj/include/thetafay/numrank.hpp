#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace thetafay {

inline constexpr double kDefaultRankTol = 1e-7;
inline constexpr double kMinGapRatio = 1e3;

/// Numerical rank from a column-pivoted Householder QR.
///
/// Pivots are |R_ii| / |R_00|. A pivot is accepted when it exceeds tol. The
/// gap ratio is the smallest accepted pivot over the largest rejected one;
/// with nothing rejected the denominator is the roundoff floor
/// eps * max(rows, cols).
struct RankReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    double tol = kDefaultRankTol;
    std::vector<double> pivots;
    std::size_t rank = 0;
    double gap_ratio = 0;
    bool conclusive = false;
};

RankReport numerical_rank(const Eigen::MatrixXcd& m, double tol = kDefaultRankTol);

/// Divides each row by its largest modulus (zero rows are left alone).
void normalize_rows(Eigen::MatrixXcd& m);

}  // namespace thetafay
