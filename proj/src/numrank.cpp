#include "thetafay/numrank.hpp"

#include <algorithm>
#include <limits>

#include "thetafay/errors.hpp"

namespace thetafay {

RankReport numerical_rank(const Eigen::MatrixXcd& m, double tol) {
    if (!(tol > 0)) throw NumericalError("rank tolerance must be positive");
    RankReport rep;
    rep.rows = static_cast<std::size_t>(m.rows());
    rep.cols = static_cast<std::size_t>(m.cols());
    rep.tol = tol;
    if (m.size() == 0) {
        rep.conclusive = true;
        return rep;
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(m);
    const Eigen::MatrixXcd& r = qr.matrixQR();
    const auto diag = std::min(m.rows(), m.cols());
    const double top = std::abs(r(0, 0));
    if (top == 0) {
        rep.pivots.assign(static_cast<std::size_t>(diag), 0.0);
        rep.conclusive = true;
        rep.gap_ratio = std::numeric_limits<double>::infinity();
        return rep;
    }
    double smallest_accepted = std::numeric_limits<double>::infinity();
    double largest_rejected = 0;
    for (Eigen::Index i = 0; i < diag; ++i) {
        const double p = std::abs(r(i, i)) / top;
        rep.pivots.push_back(p);
        if (p > tol) {
            ++rep.rank;
            smallest_accepted = std::min(smallest_accepted, p);
        } else {
            largest_rejected = std::max(largest_rejected, p);
        }
    }
    const double floor = std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(m.rows(), m.cols()));
    rep.gap_ratio = smallest_accepted / std::max(largest_rejected, floor);
    rep.conclusive = rep.gap_ratio >= kMinGapRatio;
    return rep;
}

void normalize_rows(Eigen::MatrixXcd& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const double s = m.row(r).cwiseAbs().maxCoeff();
        if (s > 0) m.row(r) /= s;
    }
}

}  // namespace thetafay
