#include "thetafay/exact.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "thetafay/errors.hpp"

namespace thetafay {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

bool IntMatrix::is_symmetric() const { return rows_ == cols_ && *this == transpose(); }

std::int64_t IntMatrix::trace() const {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("IntMatrix product: dimension mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("IntMatrix sum: shape mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("IntMatrix difference: shape mismatch");
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

IntMatrix operator*(std::int64_t k, const IntMatrix& a) {
    IntMatrix out = a;
    for (auto& x : out.data_) x *= k;
    return out;
}

BigVector IntMatrix::apply(const BigVector& v) const {
    if (v.size() != cols_) throw DimensionError("IntMatrix::apply: dimension mismatch");
    BigVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        BigInt acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto x = (*this)(r, c);
            if (x != 0) acc += v[c] * static_cast<long>(x);
        }
        out[r] = std::move(acc);
    }
    return out;
}

std::string IntMatrix::to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << (*this)(r, c);
        }
        os << '\n';
    }
    return os.str();
}

BigMatrix to_big(const IntMatrix& m) {
    BigMatrix out(m.rows(), BigVector(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = static_cast<long>(m(r, c));
    }
    return out;
}

FractionFreeEchelon fraction_free_gauss_jordan(BigMatrix m) {
    FractionFreeEchelon out;
    const std::size_t nrows = m.size();
    const std::size_t ncols = nrows ? m[0].size() : 0;
    for (const auto& row : m) {
        if (row.size() != ncols) throw DimensionError("fraction_free_gauss_jordan: ragged matrix");
    }
    BigInt prev = 1;
    BigInt t1, t2;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && sgn(m[p][c]) == 0) ++p;
        if (p == nrows) continue;
        std::swap(m[p], m[r]);
        const BigInt piv = m[r][c];
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r) continue;
            const BigInt lead = m[i][c];
            for (std::size_t j = 0; j < ncols; ++j) {
                if (j == c) continue;
                // m[i][j] = (piv*m[i][j] - lead*m[r][j]) / prev, exact by Sylvester's identity
                mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), m[i][j].get_mpz_t());
                mpz_mul(t2.get_mpz_t(), lead.get_mpz_t(), m[r][j].get_mpz_t());
                mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                mpz_divexact(m[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = piv;
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.pivot_value = prev;
    out.rows = std::move(m);
    return out;
}

std::size_t exact_rank(const BigMatrix& m) { return fraction_free_gauss_jordan(m).rank(); }

BigVector make_primitive(BigVector v) {
    BigInt g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return v;
    bool negate = false;
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            negate = sgn(x) < 0;
            break;
        }
    }
    if (negate) g = -g;
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

BigVector to_primitive_integer(const RationalVector& v) {
    BigInt l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    BigVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x.get_num() * (l / x.get_den()));
    return make_primitive(std::move(out));
}

std::vector<BigVector> integer_kernel(const BigMatrix& m) {
    const std::size_t ncols = m.empty() ? 0 : m[0].size();
    const auto ech = fraction_free_gauss_jordan(m);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : ech.pivot_columns) is_pivot[c] = true;
    std::vector<BigVector> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        BigVector v(ncols, 0);
        v[f] = ech.pivot_value;
        for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) v[ech.pivot_columns[i]] = -ech.rows[i][f];
        basis.push_back(make_primitive(std::move(v)));
    }
    return basis;
}

std::vector<BigVector> integer_kernel(const IntMatrix& m) { return integer_kernel(to_big(m)); }

}  // namespace thetafay
